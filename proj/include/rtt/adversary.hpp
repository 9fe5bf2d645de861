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
#include <string>
#include <string_view>
#include <vector>

#include "rtt/errors.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/rng.hpp"

namespace rtt {

// A removal A ⊆ S and the value left behind, f(S \ A).
struct AttackResult {
  TrajectorySet removed;
  double surviving_value = 0.0;
};

enum class AttackSearch {
  // Only |A| = min(alpha, |S|). Sufficient for monotone f.
  kExactCardinality,
  // Every |A| <= alpha. Reference search used to test the restriction.
  kFullRange,
};

// C(n, k), saturating at SIZE_MAX.
inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t factor = n - k + i;
    if (result > std::numeric_limits<std::size_t>::max() / factor) {
      return std::numeric_limits<std::size_t>::max();
    }
    result = result * factor / i;  // stays integral: C(n-k+i, i)
  }
  return result;
}

namespace detail {

// Calls fn(subset) for every k-subset of `s`, lexicographically.
template <typename Fn>
void for_each_combination(const TrajectorySet& s, std::size_t k, Fn&& fn) {
  const std::size_t n = s.size();
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<TrajectoryId> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = s[idx[i]];
    fn(TrajectorySet(chosen));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

// Worst-case removal A* ∈ argmin_{A ⊆ S, |A| <= alpha} f(S \ A), ties to the
// lexicographically smallest A.
inline AttackResult attack_optimal(
    const Objective& f, const TrajectorySet& s, std::size_t alpha,
    AttackSearch search = AttackSearch::kExactCardinality,
    std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t k = std::min(alpha, s.size());
  const std::size_t k_lo = search == AttackSearch::kFullRange ? 0 : k;
  std::size_t total = 0;
  for (std::size_t j = k_lo; j <= k; ++j) {
    total = std::min(total + binomial(s.size(), j),
                     std::numeric_limits<std::size_t>::max() / 2);
  }
  if (total > cap) {
    throw EnumerationTooLarge("attack search over " + std::to_string(total) +
                              " removals exceeds cap " + std::to_string(cap));
  }
  AttackResult best{{}, std::numeric_limits<double>::infinity()};
  bool have = false;
  for (std::size_t j = k_lo; j <= k; ++j) {
    detail::for_each_combination(s, j, [&](const TrajectorySet& removed) {
      const double v = f(s.difference(removed));
      if (!have || v < best.surviving_value ||
          (v == best.surviving_value && removed < best.removed)) {
        best = {removed, v};
        have = true;
      }
    });
  }
  return best;
}

// Removes, min(alpha, |S|) times, the element whose loss hurts most right now.
inline AttackResult attack_greedy(const Objective& f, const TrajectorySet& s,
                                  std::size_t alpha) {
  TrajectorySet current = s;
  TrajectorySet removed;
  double value = f(current);
  const std::size_t k = std::min(alpha, s.size());
  for (std::size_t step = 0; step < k; ++step) {
    TrajectoryId pick = 0;
    double pick_value = 0.0;
    double best_damage = -std::numeric_limits<double>::infinity();
    for (TrajectoryId a : current) {
      const double without = f(current.without(a));
      const double damage = value - without;
      if (damage > best_damage) {
        best_damage = damage;
        pick = a;
        pick_value = without;
      }
    }
    current.erase(pick);
    removed.insert(pick);
    value = pick_value;
  }
  return {removed, value};
}

// Uniformly random min(alpha, |S|)-subset of S.
inline AttackResult attack_random(const Objective& f, const TrajectorySet& s,
                                  std::size_t alpha, Rng& rng) {
  std::vector<TrajectoryId> pool(s.begin(), s.end());
  const std::size_t k = std::min(alpha, pool.size());
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, pool.size() - 1);
    std::swap(pool[i], pool[d(rng)]);
  }
  TrajectorySet removed(std::vector<TrajectoryId>(pool.begin(), pool.begin() + k));
  return {removed, f(s.difference(removed))};
}

inline AttackResult attack_random(const Objective& f, const TrajectorySet& s,
                                  std::size_t alpha, std::uint64_t seed) {
  Rng rng(seed);
  return attack_random(f, s, alpha, rng);
}

enum class AttackerKind { kOptimal, kGreedy, kRandom, kNone };

constexpr std::string_view to_string(AttackerKind a) {
  switch (a) {
    case AttackerKind::kOptimal: return "optimal";
    case AttackerKind::kGreedy: return "greedy";
    case AttackerKind::kRandom: return "random";
    case AttackerKind::kNone: return "none";
  }
  return "?";
}

// Dispatches to the attack oracle selected by `kind`. `rng` is only drawn
// from by the random attacker.
inline AttackResult run_attack(AttackerKind kind, const Objective& f,
                               const TrajectorySet& s, std::size_t alpha,
                               Rng& rng) {
  switch (kind) {
    case AttackerKind::kOptimal: return attack_optimal(f, s, alpha);
    case AttackerKind::kGreedy: return attack_greedy(f, s, alpha);
    case AttackerKind::kRandom: return attack_random(f, s, alpha, rng);
    case AttackerKind::kNone: break;
  }
  return {{}, f(s)};
}

// Relative loss (f(S) - f(S \ A*)) / f(S) under a worst-case attack.
inline double attack_rate(const Objective& f, const TrajectorySet& s,
                          std::size_t alpha) {
  const double full = f(s);
  if (!(full > 0.0)) {
    throw UndefinedRate("attack rate is undefined when f(S) = 0");
  }
  const AttackResult worst = attack_optimal(f, s, alpha);
  return (full - worst.surviving_value) / full;
}

}  // namespace rtt
