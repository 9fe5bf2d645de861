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

// Independent reference computations for tests and acceptance checks. Nothing
// here calls the planners, the attack oracles, the basis enumerator or the
// curvature routine it is used to check; sets are enumerated as bit masks
// over the ground set instead.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "rtt/geometry.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/rng.hpp"

namespace rtt::testing {

using Mask = std::uint32_t;

inline TrajectorySet set_of(Mask mask) {
  std::vector<TrajectoryId> ids;
  for (TrajectoryId i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1u) ids.push_back(i);
  }
  return TrajectorySet(std::move(ids));
}

// Every subset of the ground set holding exactly one id from each block.
inline std::vector<Mask> all_bases(const std::vector<std::size_t>& block_sizes) {
  std::size_t n = 0;
  std::vector<Mask> block_mask;
  for (std::size_t b : block_sizes) {
    block_mask.push_back(((Mask{1} << b) - 1) << n);
    n += b;
  }
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (Mask bm : block_mask) ok = ok && std::popcount(s & bm) == 1;
    if (ok) out.push_back(s);
  }
  return out;
}

// min over A ⊆ S, |A| <= alpha, of f(S \ A): every submask considered.
inline double worst_case_value(const Objective& f, Mask s, std::size_t alpha) {
  double best = std::numeric_limits<double>::infinity();
  for (Mask a = s;; a = (a - 1) & s) {
    if (static_cast<std::size_t>(std::popcount(a)) <= alpha) {
      best = std::min(best, f(set_of(s & ~a)));
    }
    if (a == 0) break;
  }
  return best;
}

// f* = max over bases of the worst-case surviving value.
inline double maxmin_value(const std::vector<std::size_t>& block_sizes,
                           const Objective& f, std::size_t alpha) {
  double best = -std::numeric_limits<double>::infinity();
  for (Mask s : all_bases(block_sizes)) {
    best = std::max(best, worst_case_value(f, s, alpha));
  }
  return best;
}

// 1 - min over bases S and s in S with f({s}) != 0 of
// (f(S) - f(S \ {s})) / f({s}). nullopt when no admissible term exists.
inline std::optional<double> curvature(const std::vector<std::size_t>& block_sizes,
                                       const Objective& f) {
  std::optional<double> min_ratio;
  for (Mask s : all_bases(block_sizes)) {
    for (Mask e = s; e; e &= e - 1) {
      const Mask bit = e & (~e + 1);
      const double single = f(set_of(bit));
      if (single == 0.0) continue;
      const double ratio = (f(set_of(s)) - f(set_of(s & ~bit))) / single;
      if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
    }
  }
  if (!min_ratio) return std::nullopt;
  return 1.0 - *min_ratio;
}

// Literal transcription of the resilient selection: the argmax lines are
// re-evaluated from scratch on every pass of both loops, ties to the
// smallest id.
struct ReferencePlan {
  TrajectorySet bait, fill;
};

inline ReferencePlan reference_resilient(const std::vector<std::size_t>& block_sizes,
                                         const Objective& f, std::size_t alpha) {
  std::vector<std::size_t> robot_of;
  for (std::size_t r = 0; r < block_sizes.size(); ++r) {
    robot_of.insert(robot_of.end(), block_sizes[r], r);
  }
  const std::size_t n = robot_of.size();
  auto one_per_robot = [&](const TrajectorySet& s) {
    std::vector<int> seen(block_sizes.size(), 0);
    for (auto id : s) {
      if (++seen[robot_of[id]] > 1) return false;
    }
    return true;
  };
  TrajectorySet s1, m1, s2, m2;
  while (m1.size() < n) {
    std::optional<TrajectoryId> best;
    double best_v = 0;
    for (TrajectoryId y = 0; y < n; ++y) {
      if (m1.contains(y)) continue;
      const double v = f(TrajectorySet{y});
      if (!best || v > best_v) best = y, best_v = v;
    }
    if (one_per_robot(s1.with(*best)) && s1.size() + 1 <= alpha) s1.insert(*best);
    m1.insert(*best);
  }
  while (m2.size() < n - s1.size()) {
    std::optional<TrajectoryId> best;
    double best_v = 0;
    for (TrajectoryId y = 0; y < n; ++y) {
      if (s1.contains(y) || m2.contains(y)) continue;
      const double v = f(s2.with(y)) - f(s2);
      if (!best || v > best_v) best = y, best_v = v;
    }
    if (one_per_robot(s1.set_union(s2).with(*best))) s2.insert(*best);
    m2.insert(*best);
  }
  return {s1, s2};
}

// Monte Carlo estimate of P(X in union of rects[s]) with its standard error.
struct McEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

inline McEstimate monte_carlo_union_mass(const GaussianTargetBelief& b,
                                         const CoverageMap& rects,
                                         const TrajectorySet& s,
                                         std::size_t samples, Rng& rng) {
  std::normal_distribution<double> nx(b.mean.x, b.std_x);
  std::normal_distribution<double> ny(b.mean.y, b.std_y);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = nx(rng);
    const Point2 p{x, ny(rng)};
    for (auto id : s) {
      if (contains(rects[id], p)) {
        ++hits;
        break;
      }
    }
  }
  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

// A random tracking instance: robots in [0,10]^2 with a random subset of the
// four directions each, targets uniform in the same square.
struct RandomInstance {
  std::vector<std::size_t> block_sizes;
  std::vector<Point2> targets;
  CoverageMap rects;
  std::vector<GaussianTargetBelief> beliefs;

  PartitionMatroid matroid() const { return PartitionMatroid(block_sizes); }
  Objective coverage() const { return make_coverage_objective(targets, rects); }
  Objective expected() const { return make_expected_detections_objective(beliefs, rects); }
};

inline RandomInstance random_instance(std::size_t robots, std::size_t min_block,
                                      std::size_t max_block, std::size_t targets,
                                      Rng& rng) {
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_real_distribution<double> fly(0.0, 7.0);
  std::uniform_real_distribution<double> spread(0.2, 2.0);
  std::uniform_int_distribution<std::size_t> block(min_block, max_block);
  RandomInstance inst;
  for (std::size_t r = 0; r < robots; ++r) {
    const double x = coord(rng);
    RobotSpec spec{static_cast<int>(r), {x, coord(rng)}, 3.0, fly(rng)};
    std::vector<Direction> dirs(kAllDirections.begin(), kAllDirections.end());
    std::shuffle(dirs.begin(), dirs.end(), rng);
    const std::size_t k = block(rng);
    inst.block_sizes.push_back(k);
    for (std::size_t j = 0; j < k; ++j) inst.rects.push_back(coverage_rect(spec, dirs[j]));
  }
  for (std::size_t j = 0; j < targets; ++j) {
    const double x = coord(rng);
    inst.targets.push_back({x, coord(rng)});
    const double sx = spread(rng);
    inst.beliefs.push_back({static_cast<int>(j), inst.targets.back(), sx, spread(rng)});
  }
  return inst;
}

}  // namespace rtt::testing
