// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rtt/adversary.hpp"
#include "rtt/errors.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/rng.hpp"

namespace rtt {

// Bookkeeping of the resilient planner.
struct AlgorithmTrace {
  TrajectorySet bait;          // S1: up to alpha high-value trajectories
  TrajectorySet greedy_fill;   // S2: greedy completion to a basis
  TrajectorySet scanned_bait;  // M1
  TrajectorySet scanned_fill;  // M2
};

struct PlanResult {
  TrajectorySet selected;
  AlgorithmTrace trace;
  std::size_t oracle_calls = 0;
  // Max-min value f*, only reported by the brute-force planner.
  std::optional<double> optimal_value;
};

enum class PlannerKind { kResilient, kGreedy, kRandom, kBruteForce };

constexpr std::string_view to_string(PlannerKind p) {
  switch (p) {
    case PlannerKind::kResilient: return "resilient";
    case PlannerKind::kGreedy: return "greedy";
    case PlannerKind::kRandom: return "random";
    case PlannerKind::kBruteForce: return "brute-force";
  }
  return "?";
}

inline void check_alpha(const PartitionMatroid& m, std::size_t alpha) {
  if (alpha > m.num_robots()) {
    throw ArgumentError("alpha = " + std::to_string(alpha) +
                        " exceeds the number of robots (" +
                        std::to_string(m.num_robots()) + ")");
  }
}

// Resilient trajectory selection against the removal of up to `alpha`
// trajectories.
//
// Phase 1 scans T_R by decreasing singleton value f({y}) (ties: smaller id
// first) and keeps a trajectory in the bait set S1 while S1 stays
// independent and |S1| <= alpha. Every scanned trajectory enters M1; the
// scan always runs to M1 = T_R. Singleton values do not depend on S1, so
// they are evaluated once and the repeated argmax becomes a sorted scan.
//
// Phase 2 repeatedly takes the argmax of f(S2 ∪ {y}) - f(S2) over
// T_R \ (S1 ∪ M2), adds it to S2 iff S1 ∪ S2 ∪ {y} is independent, and adds
// it to M2 in either case, until M2 = T_R \ S1. Marginals are re-evaluated
// only after S2 changes; when S2 is unchanged they are identical.
//
// At most |T_R| + (|R| + 1)(|T_R| + 1) evaluations of f, within the
// 2|T_R|^2 + |T_R| budget.
inline PlanResult plan_resilient(const PartitionMatroid& m, const Objective& f,
                                 std::size_t alpha) {
  check_alpha(m, alpha);
  const std::size_t calls_before = f.eval_count();
  const std::size_t n = m.ground_size();
  AlgorithmTrace trace;

  std::vector<double> singleton(n);
  for (TrajectoryId y = 0; y < n; ++y) singleton[y] = f.singleton(y);
  std::vector<TrajectoryId> order(n);
  std::iota(order.begin(), order.end(), TrajectoryId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](TrajectoryId a, TrajectoryId b) {
                     return singleton[a] > singleton[b];
                   });
  for (TrajectoryId s : order) {
    if (trace.bait.size() < alpha && m.can_add(trace.bait, s)) {
      trace.bait.insert(s);
    }
    trace.scanned_bait.insert(s);
  }

  std::vector<TrajectoryId> candidates;
  for (TrajectoryId y = 0; y < n; ++y) {
    if (!trace.bait.contains(y)) candidates.push_back(y);
  }
  std::vector<double> gain(n, 0.0);
  std::vector<bool> scanned(n, false);
  TrajectorySet selected = trace.bait;
  bool stale = true;
  for (std::size_t left = candidates.size(); left > 0; --left) {
    if (stale) {
      const double base = f(trace.greedy_fill);
      for (TrajectoryId y : candidates) {
        if (!scanned[y]) gain[y] = f(trace.greedy_fill.with(y)) - base;
      }
      stale = false;
    }
    std::optional<TrajectoryId> s;
    for (TrajectoryId y : candidates) {
      if (!scanned[y] && (!s || gain[y] > gain[*s])) s = y;
    }
    if (m.can_add(selected, *s)) {
      trace.greedy_fill.insert(*s);
      selected.insert(*s);
      stale = true;
    }
    scanned[*s] = true;
    trace.scanned_fill.insert(*s);
  }

  return {std::move(selected), std::move(trace), f.eval_count() - calls_before,
          std::nullopt};
}

// Matroid greedy: add the feasible trajectory with the largest marginal gain
// until every robot has one. Ties go to the smaller id.
inline PlanResult plan_greedy(const PartitionMatroid& m, const Objective& f) {
  const std::size_t calls_before = f.eval_count();
  TrajectorySet selected;
  while (selected.size() < m.num_robots()) {
    const double base = f(selected);
    std::optional<TrajectoryId> best;
    double best_gain = 0.0;
    for (TrajectoryId y = 0; y < m.ground_size(); ++y) {
      if (!m.can_add(selected, y)) continue;
      const double g = f(selected.with(y)) - base;
      if (!best || g > best_gain) {
        best = y;
        best_gain = g;
      }
    }
    selected.insert(*best);
  }
  PlanResult result;
  result.trace.greedy_fill = selected;
  result.selected = std::move(selected);
  result.oracle_calls = f.eval_count() - calls_before;
  return result;
}

// One trajectory per robot, each uniformly at random.
inline PlanResult plan_random(const PartitionMatroid& m, Rng& rng) {
  std::vector<TrajectoryId> ids;
  for (std::size_t r = 0; r < m.num_robots(); ++r) {
    std::uniform_int_distribution<std::size_t> d(0, m.block_size(r) - 1);
    ids.push_back(m.trajectory(r, d(rng)));
  }
  PlanResult result;
  result.selected = TrajectorySet(std::move(ids));
  return result;
}

inline PlanResult plan_random(const PartitionMatroid& m, std::uint64_t seed) {
  Rng rng(seed);
  return plan_random(m, rng);
}

// Exhaustive max-min: the basis maximizing min_{|A| <= alpha} f(S \ A).
// The first basis in enumeration order wins ties.
inline PlanResult plan_bruteforce_maxmin(
    const PartitionMatroid& m, const Objective& f, std::size_t alpha,
    AttackSearch search = AttackSearch::kExactCardinality,
    std::size_t cap = kDefaultEnumerationCap) {
  check_alpha(m, alpha);
  const std::size_t bases = m.basis_count();
  const std::size_t attacks = binomial(m.num_robots(), alpha);
  if (bases > cap || attacks > cap / bases) {
    throw EnumerationTooLarge(
        "max-min enumeration of " + std::to_string(bases) + " bases x " +
        std::to_string(attacks) + " attacks exceeds cap " + std::to_string(cap));
  }
  const std::size_t calls_before = f.eval_count();
  PlanResult result;
  double best = -std::numeric_limits<double>::infinity();
  for_each_basis(m, [&](const TrajectorySet& s) {
    const double v = attack_optimal(f, s, alpha, search, cap).surviving_value;
    if (v > best) {
      best = v;
      result.selected = s;
    }
  }, cap);
  result.optimal_value = best;
  result.oracle_calls = f.eval_count() - calls_before;
  return result;
}

}  // namespace rtt
