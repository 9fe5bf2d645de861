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
#include <optional>
#include <string>
#include <vector>

#include "rtt/adversary.hpp"
#include "rtt/errors.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/planner.hpp"
#include "rtt/rng.hpp"

namespace rtt {

enum class CurvatureMode {
  kExact,               // every basis
  kSampledLowerBound,   // random bases; a lower bound on the true value
};

struct CurvatureReport {
  double value = 0.0;
  TrajectorySet witness_set;
  TrajectoryId witness_element = 0;
  CurvatureMode mode = CurvatureMode::kExact;
  // Trajectories with f({s}) = 0, left out of the minimum.
  std::vector<TrajectoryId> skipped_zero_elements;
};

// Curvature of f constrained to the bases of `m`:
//   1 - min_{S basis} min_{s in S} (f(S) - f(S \ {s})) / f({s})
// Elements with f({s}) = 0 are skipped and listed in the report.
// In sampled mode only `sample_budget` uniformly drawn bases are visited.
inline CurvatureReport constrained_curvature(
    const PartitionMatroid& m, const Objective& f,
    CurvatureMode mode = CurvatureMode::kExact, std::size_t sample_budget = 0,
    std::uint64_t seed = 0, std::size_t cap = kDefaultEnumerationCap) {
  CurvatureReport report;
  report.mode = mode;
  std::vector<double> singleton(m.ground_size());
  for (TrajectoryId y = 0; y < m.ground_size(); ++y) {
    singleton[y] = f.singleton(y);
    if (singleton[y] == 0.0) report.skipped_zero_elements.push_back(y);
  }
  if (report.skipped_zero_elements.size() == m.ground_size()) {
    throw DegenerateObjective("curvature undefined: every singleton value is zero");
  }

  double min_ratio = std::numeric_limits<double>::infinity();
  auto visit = [&](const TrajectorySet& s) {
    bool any = false;
    for (TrajectoryId e : s) any = any || singleton[e] != 0.0;
    if (!any) return;
    const double fs = f(s);
    for (TrajectoryId e : s) {
      if (singleton[e] == 0.0) continue;
      const double ratio = (fs - f(s.without(e))) / singleton[e];
      if (ratio < min_ratio) {
        min_ratio = ratio;
        report.witness_set = s;
        report.witness_element = e;
      }
    }
  };

  if (mode == CurvatureMode::kExact) {
    for_each_basis(m, visit, cap);
  } else {
    if (sample_budget == 0) {
      throw ArgumentError("sampled curvature needs sample_budget >= 1");
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_budget; ++i) {
      visit(plan_random(m, rng).selected);
    }
  }
  // Only possible in sampled mode, when every draw held zero-value elements.
  if (min_ratio == std::numeric_limits<double>::infinity()) min_ratio = 1.0;
  report.value = 1.0 - min_ratio;
  return report;
}

// h(n, alpha) = max(1/(1+alpha), 1/(n-alpha)) = 1 / min(1+alpha, n-alpha).
// Returned as the denominator so callers can compare exactly.
inline std::size_t h_bound_denominator(std::size_t n, std::size_t alpha) {
  if (n == 0 || alpha >= n) {
    throw ArgumentError("h_bound needs n >= 1 and alpha <= n - 1 (got n = " +
                        std::to_string(n) + ", alpha = " +
                        std::to_string(alpha) + ")");
  }
  return std::min(1 + alpha, n - alpha);
}

inline double h_bound(std::size_t n, std::size_t alpha) {
  return 1.0 / static_cast<double>(h_bound_denominator(n, alpha));
}

struct BoundReport {
  TrajectorySet selected;        // resilient plan
  TrajectorySet worst_removal;   // A*(S)
  double attacked_value = 0.0;   // f(S \ A*)
  double optimal_value = 0.0;    // f*
  std::optional<double> curvature;
  std::optional<double> h;
  double guaranteed_fraction = 0.0;  // max(1 - nu, h) / 2
  // f* = 0: the ratio is undefined and only f(S \ A*) >= 0 is asserted.
  bool degenerate = false;
  bool holds = false;

  double slack() const {
    return attacked_value - guaranteed_fraction * optimal_value;
  }
};

inline constexpr double kBoundSlack = 1e-9;

// Runs the resilient planner, the worst-case attack on its output, the
// brute-force max-min solver and the exact curvature, and tests
//   f(S \ A*) >= max(1 - nu, h(|R|, alpha)) / 2 * f* - 1e-9.
inline BoundReport check_approximation_bound(const PartitionMatroid& m,
                                        const Objective& f, std::size_t alpha,
                                        std::size_t cap = kDefaultEnumerationCap) {
  BoundReport report;
  report.selected = plan_resilient(m, f, alpha).selected;
  const AttackResult worst = attack_optimal(f, report.selected, alpha,
                                            AttackSearch::kExactCardinality, cap);
  report.worst_removal = worst.removed;
  report.attacked_value = worst.surviving_value;
  report.optimal_value = *plan_bruteforce_maxmin(m, f, alpha,
                                                 AttackSearch::kExactCardinality,
                                                 cap)
                              .optimal_value;
  if (report.optimal_value == 0.0) {
    report.degenerate = true;
    report.holds = report.attacked_value >= 0.0;
    return report;
  }
  report.h = h_bound(m.num_robots(), alpha);
  report.curvature = constrained_curvature(m, f, CurvatureMode::kExact, 0, 0, cap).value;
  report.guaranteed_fraction = std::max(1.0 - *report.curvature, *report.h) / 2.0;
  report.holds = report.slack() >= -kBoundSlack;
  return report;
}

}  // namespace rtt
