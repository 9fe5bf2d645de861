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
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rtt/errors.hpp"
#include "rtt/geometry.hpp"
#include "rtt/matroid.hpp"
#include "rtt/rng.hpp"

namespace rtt {

inline constexpr std::size_t kDefaultInclusionExclusionCap = 20;
inline constexpr double kPropertyTolerance = 1e-9;

// A set function over trajectory sets, with an evaluation counter.
//
// The counter is a plain integer: an Objective instance must not be shared
// between threads while it is being evaluated. Give each concurrent plan its
// own copy (copies are cheap; the wrapped function is shared).
class Objective {
 public:
  using Fn = std::function<double(const TrajectorySet&)>;

  Objective() = default;
  explicit Objective(Fn fn, std::string name = "objective")
      : fn_(std::make_shared<Fn>(std::move(fn))), name_(std::move(name)) {}

  double operator()(const TrajectorySet& s) const {
    ++eval_count_;
    return (*fn_)(s);
  }
  double singleton(TrajectoryId id) const { return (*this)(TrajectorySet{id}); }

  std::size_t eval_count() const { return eval_count_; }
  void reset_count() const { eval_count_ = 0; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const Fn> fn_;
  std::string name_;
  mutable std::size_t eval_count_ = 0;
};

// Coverage rectangles indexed by trajectory id.
using CoverageMap = std::vector<Rect>;

inline void require_rects(const CoverageMap& rects, const TrajectorySet& s) {
  if (!s.empty() && s.ids().back() >= rects.size()) {
    throw ConfigError("no coverage rectangle for trajectory " +
                      std::to_string(s.ids().back()));
  }
}

// Number of targets inside the union of the selected coverage rectangles.
inline std::size_t coverage_count(std::span<const Point2> targets,
                                  const CoverageMap& rects,
                                  const TrajectorySet& s) {
  require_rects(rects, s);
  std::size_t n = 0;
  for (const Point2& p : targets) {
    for (TrajectoryId id : s) {
      if (contains(rects[id], p)) {
        ++n;
        break;
      }
    }
  }
  return n;
}

// coverage_count as an Objective. Per-trajectory coverage is precomputed as
// bit masks over targets, so each evaluation is an OR + popcount.
inline Objective make_coverage_objective(std::vector<Point2> targets,
                                         CoverageMap rects) {
  const std::size_t words = (targets.size() + 63) / 64;
  auto masks = std::make_shared<std::vector<std::uint64_t>>(rects.size() * words, 0);
  for (std::size_t t = 0; t < rects.size(); ++t) {
    for (std::size_t j = 0; j < targets.size(); ++j) {
      if (contains(rects[t], targets[j])) {
        (*masks)[t * words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }
  const std::size_t num_rects = rects.size();
  return Objective(
      [masks, words, num_rects](const TrajectorySet& s) {
        if (!s.empty() && s.ids().back() >= num_rects) {
          throw ConfigError("no coverage rectangle for trajectory " +
                            std::to_string(s.ids().back()));
        }
        std::size_t n = 0;
        for (std::size_t w = 0; w < words; ++w) {
          std::uint64_t acc = 0;
          for (TrajectoryId id : s) acc |= (*masks)[id * words + w];
          n += static_cast<std::size_t>(std::popcount(acc));
        }
        return static_cast<double>(n);
      },
      "coverage");
}

// Axis-aligned Gaussian belief over a target's position.
struct GaussianTargetBelief {
  int target_id = 0;
  Point2 mean;
  double std_x = 1.0;
  double std_y = 1.0;
};

// Standard normal CDF.
inline double normal_cdf(double z) {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

// P(lo <= X <= hi) for X ~ N(mean, sd^2).
inline double normal_interval_mass(double lo, double hi, double mean, double sd) {
  const double a = (lo - mean) / sd;
  const double b = (hi - mean) / sd;
  // Difference of upper tails for the positive side keeps precision when
  // both bounds sit far in the right tail.
  if (a > 0.0) {
    return 0.5 * (std::erfc(a / std::numbers::sqrt2) -
                  std::erfc(b / std::numbers::sqrt2));
  }
  return normal_cdf(b) - normal_cdf(a);
}

inline double rect_mass(const GaussianTargetBelief& b, const Rect& r) {
  return normal_interval_mass(r.x_min, r.x_max, b.mean.x, b.std_x) *
         normal_interval_mass(r.y_min, r.y_max, b.mean.y, b.std_y);
}

namespace detail {

// Inclusion-exclusion over the rectangles rects[ids[from..]] intersected with
// `acc`. Branches whose running intersection is empty contribute nothing and
// are pruned along with all their supersets.
inline double union_mass_rec(const GaussianTargetBelief& b,
                             const CoverageMap& rects,
                             std::span<const TrajectoryId> ids,
                             std::size_t from, const Rect& acc, int sign) {
  double total = 0.0;
  for (std::size_t i = from; i < ids.size(); ++i) {
    auto inter = rect_intersection(acc, rects[ids[i]]);
    if (!inter) continue;
    total += sign * rect_mass(b, *inter);
    total += union_mass_rec(b, rects, ids, i + 1, *inter, -sign);
  }
  return total;
}

}  // namespace detail

// P(target in the union of rects[s]) under the belief.
inline double union_mass(const GaussianTargetBelief& b, const CoverageMap& rects,
                         const TrajectorySet& s) {
  double total = 0.0;
  const auto ids = s.ids();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Rect& r = rects[ids[i]];
    total += rect_mass(b, r);
    total += detail::union_mass_rec(b, rects, ids, i + 1, r, -1);
  }
  return std::clamp(total, 0.0, 1.0);
}

inline void validate_belief(const GaussianTargetBelief& b) {
  if (!(b.std_x > 0.0) || !(b.std_y > 0.0) || !std::isfinite(b.std_x) ||
      !std::isfinite(b.std_y)) {
    throw ArgumentError("belief for target " + std::to_string(b.target_id) +
                        " needs finite positive standard deviations");
  }
}

// Expected number of targets inside the union of the selected rectangles.
inline double expected_detections(std::span<const GaussianTargetBelief> beliefs,
                                  const CoverageMap& rects,
                                  const TrajectorySet& s,
                                  std::size_t cap = kDefaultInclusionExclusionCap) {
  if (s.size() > cap) {
    throw ObjectiveTooLarge("inclusion-exclusion over " +
                            std::to_string(s.size()) +
                            " rectangles exceeds cap " + std::to_string(cap));
  }
  require_rects(rects, s);
  double total = 0.0;
  for (const auto& b : beliefs) total += union_mass(b, rects, s);
  return total;
}

inline Objective make_expected_detections_objective(
    std::vector<GaussianTargetBelief> beliefs, CoverageMap rects,
    std::size_t cap = kDefaultInclusionExclusionCap) {
  for (const auto& b : beliefs) validate_belief(b);
  auto shared_beliefs =
      std::make_shared<const std::vector<GaussianTargetBelief>>(std::move(beliefs));
  auto shared_rects = std::make_shared<const CoverageMap>(std::move(rects));
  return Objective(
      [shared_beliefs, shared_rects, cap](const TrajectorySet& s) {
        return expected_detections(*shared_beliefs, *shared_rects, s, cap);
      },
      "expected_detections");
}

// ---------------------------------------------------------------------------
// Property checks for monotonicity and submodularity on sampled sets.

struct PropertyViolation {
  TrajectorySet smaller;               // S
  TrajectorySet larger;                // S'
  std::optional<TrajectoryId> element; // s (submodularity only)
  double lhs = 0.0;
  double rhs = 0.0;
};

struct PropertyReport {
  std::size_t trials = 0;
  std::vector<PropertyViolation> violations;

  bool passed() const { return violations.empty(); }
};

namespace detail {

// Random S' ⊆ pool with |S'| >= min_size, then S ⊂ S' with at least one
// element of S' dropped whenever S' is non-empty.
inline std::pair<TrajectorySet, TrajectorySet> sample_nested(
    const std::vector<TrajectoryId>& pool, std::size_t min_size, Rng& rng) {
  std::vector<TrajectoryId> shuffled = pool;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::uniform_int_distribution<std::size_t> size_dist(
      std::min(min_size, pool.size()), pool.size());
  const std::size_t large_size = size_dist(rng);
  std::vector<TrajectoryId> large(shuffled.begin(),
                                  shuffled.begin() + large_size);
  std::size_t small_size = 0;
  if (large_size > 0) {
    std::uniform_int_distribution<std::size_t> d(0, large_size - 1);
    small_size = d(rng);
  }
  std::vector<TrajectoryId> small(large.begin(), large.begin() + small_size);
  return {TrajectorySet(std::move(small)), TrajectorySet(std::move(large))};
}

}  // namespace detail

// Samples nested pairs S ⊂ S' ⊆ T_R and flags f(S) > f(S') + 1e-9.
inline PropertyReport check_monotone(const Objective& f,
                                     const PartitionMatroid& m,
                                     std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("check_monotone: trials must be >= 1");
  Rng rng(seed);
  const auto ground = m.ground_set();
  const std::vector<TrajectoryId> pool(ground.begin(), ground.end());
  PropertyReport report{trials, {}};
  for (std::size_t t = 0; t < trials; ++t) {
    auto [small, large] = detail::sample_nested(pool, 1, rng);
    const double fs = f(small);
    const double fl = f(large);
    if (fs > fl + kPropertyTolerance) {
      report.violations.push_back({small, large, std::nullopt, fs, fl});
    }
  }
  return report;
}

// Samples S ⊂ S' ⊆ T_R and s ∉ S', flags
// f(S ∪ {s}) − f(S) < f(S' ∪ {s}) − f(S') − 1e-9.
inline PropertyReport check_submodular(const Objective& f,
                                       const PartitionMatroid& m,
                                       std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw ArgumentError("check_submodular: trials must be >= 1");
  if (m.ground_size() < 2) {
    throw ArgumentError("check_submodular: ground set needs >= 2 elements");
  }
  Rng rng(seed);
  PropertyReport report{trials, {}};
  std::uniform_int_distribution<TrajectoryId> pick(0, m.ground_size() - 1);
  for (std::size_t t = 0; t < trials; ++t) {
    const TrajectoryId s = pick(rng);
    std::vector<TrajectoryId> pool;
    for (TrajectoryId id = 0; id < m.ground_size(); ++id) {
      if (id != s) pool.push_back(id);
    }
    auto [small, large] = detail::sample_nested(pool, 1, rng);
    const double gain_small = f(small.with(s)) - f(small);
    const double gain_large = f(large.with(s)) - f(large);
    if (gain_small < gain_large - kPropertyTolerance) {
      report.violations.push_back({small, large, s, gain_small, gain_large});
    }
  }
  return report;
}

}  // namespace rtt
