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

#include "rtt/analysis.hpp"

#include <set>

#include <gtest/gtest.h>

#include "rtt/testing/oracles.hpp"

namespace rtt {
namespace {

Objective set_cover(std::vector<std::vector<int>> covers) {
  return Objective([covers = std::move(covers)](const TrajectorySet& s) {
    std::set<int> seen;
    for (auto id : s) seen.insert(covers[id].begin(), covers[id].end());
    return double(seen.size());
  });
}

TEST(CurvatureTest, DisjointCoverageIsModular) {
  const PartitionMatroid m({2, 2, 2});
  const Objective f = set_cover({{1}, {2, 3}, {4}, {5}, {6, 7}, {8}});
  const auto report = constrained_curvature(m, f);
  EXPECT_DOUBLE_EQ(report.value, 0.0);
  EXPECT_TRUE(report.skipped_zero_elements.empty());
}

TEST(CurvatureTest, DuplicatedTrajectoriesAreFullyCurved) {
  // Every trajectory of every robot sees the same single target.
  const PartitionMatroid m({2, 2});
  const Objective f = set_cover({{1}, {1}, {1}, {1}});
  const auto report = constrained_curvature(m, f);
  EXPECT_DOUBLE_EQ(report.value, 1.0);
  EXPECT_TRUE(m.is_basis(report.witness_set));
  EXPECT_TRUE(report.witness_set.contains(report.witness_element));
}

TEST(CurvatureTest, PartialOverlapHandComputed) {
  // Bases {0,2}: ratios (3-2)/2=1/2, (3-2)/2=1/2; {0,3}: 1, 1;
  // {1,2}: 1, 1; {1,3}: 1, 1. Minimum 1/2 -> curvature 1/2.
  const PartitionMatroid m({2, 2});
  const Objective f = set_cover({{1, 2}, {5}, {2, 3}, {6}});
  EXPECT_DOUBLE_EQ(constrained_curvature(m, f).value, 0.5);
}

TEST(CurvatureTest, MatchesMaskEnumerationOracle) {
  Rng rng(41);
  for (int i = 0; i < 60; ++i) {
    const auto inst = testing::random_instance(4, 1, 3, 15, rng);
    const Objective f = i % 2 ? inst.coverage() : inst.expected();
    const auto oracle = testing::curvature(inst.block_sizes, f);
    if (!oracle) {
      EXPECT_THROW(constrained_curvature(inst.matroid(), f), DegenerateObjective);
      continue;
    }
    const auto report = constrained_curvature(inst.matroid(), f);
    EXPECT_NEAR(report.value, *oracle, 1e-12);
    EXPECT_GE(report.value, -1e-12);
    EXPECT_LE(report.value, 1.0 + 1e-12);
  }
}

TEST(CurvatureTest, SampledIsLowerBound) {
  Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const auto inst = testing::random_instance(5, 2, 4, 25, rng);
    const Objective f = inst.expected();
    const double exact = constrained_curvature(inst.matroid(), f).value;
    const auto sampled = constrained_curvature(
        inst.matroid(), f, CurvatureMode::kSampledLowerBound, 20, 1000 + i);
    EXPECT_EQ(sampled.mode, CurvatureMode::kSampledLowerBound);
    EXPECT_LE(sampled.value, exact + 1e-12);
  }
}

TEST(CurvatureTest, ZeroSingletonsAreSkippedAndReported) {
  const PartitionMatroid m({2, 2});
  const Objective f = set_cover({{1}, {}, {2}, {}});
  const auto report = constrained_curvature(m, f);
  EXPECT_EQ(report.skipped_zero_elements, (std::vector<TrajectoryId>{1, 3}));
  EXPECT_DOUBLE_EQ(report.value, 0.0);
}

TEST(CurvatureTest, AllZeroIsDegenerate) {
  const PartitionMatroid m({2, 1});
  const Objective f([](const TrajectorySet&) { return 0.0; });
  EXPECT_THROW(constrained_curvature(m, f), DegenerateObjective);
}

TEST(CurvatureTest, SampledNeedsBudget) {
  const PartitionMatroid m({2});
  const Objective f = set_cover({{1}, {2}});
  EXPECT_THROW(constrained_curvature(m, f, CurvatureMode::kSampledLowerBound, 0),
               ArgumentError);
}

TEST(HBoundTest, Endpoints) {
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_EQ(h_bound_denominator(n, 0), 1u) << n;
    EXPECT_DOUBLE_EQ(h_bound(n, n - 1), 1.0) << n;
  }
  EXPECT_DOUBLE_EQ(h_bound(10, 9), 1.0);
  EXPECT_DOUBLE_EQ(h_bound(10, 4), 1.0 / 5);
  EXPECT_DOUBLE_EQ(h_bound(10, 5), 1.0 / 5);
  EXPECT_DOUBLE_EQ(h_bound(7, 3), 1.0 / 4);
}

TEST(HBoundTest, MinimumOverAlpha) {
  // Scan alpha and compare max(1/(1+a), 1/(n-a)) written out directly.
  for (std::size_t n = 1; n <= 40; ++n) {
    std::size_t worst = 0;
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t d = std::min(1 + a, n - a);
      EXPECT_DOUBLE_EQ(h_bound(n, a), std::max(1.0 / double(1 + a), 1.0 / double(n - a)));
      worst = std::max(worst, d);
    }
    // Largest denominator: (n + 1) / 2 rounded down, i.e. min h = 2/n for even n.
    EXPECT_EQ(worst, (n + 1) / 2) << n;
  }
}

TEST(HBoundTest, Quasiconvex) {
  for (std::size_t n = 2; n <= 30; ++n) {
    // Denominator rises then falls, so h falls then rises.
    bool falling = false;
    for (std::size_t a = 1; a < n; ++a) {
      const auto prev = h_bound_denominator(n, a - 1);
      const auto cur = h_bound_denominator(n, a);
      if (cur < prev) falling = true;
      if (falling) {
        EXPECT_LE(cur, prev) << n << " " << a;
      }
    }
  }
}

TEST(HBoundTest, RejectsAlphaAtLeastN) {
  EXPECT_THROW(h_bound(5, 5), ArgumentError);
  EXPECT_THROW(h_bound(0, 0), ArgumentError);
}

TEST(BoundCheckTest, AlphaZeroGivesAtLeastHalf) {
  const PartitionMatroid m({2, 2});
  const Objective f = set_cover({{1, 2}, {5}, {2, 3}, {6}});
  const auto r = check_approximation_bound(m, f, 0);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(*r.h, 1.0);
  EXPECT_DOUBLE_EQ(r.guaranteed_fraction, 0.5);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.worst_removal.empty());
}

TEST(BoundCheckTest, AlphaAllRobotsIsDegenerate) {
  const PartitionMatroid m({2, 2});
  const Objective f = set_cover({{1, 2}, {5}, {2, 3}, {6}});
  const auto r = check_approximation_bound(m, f, 2);
  EXPECT_TRUE(r.degenerate);
  EXPECT_EQ(r.optimal_value, 0.0);
  EXPECT_EQ(r.attacked_value, 0.0);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.h.has_value());
}

TEST(BoundCheckTest, HoldsOnRandomInstances) {
  Rng rng(43);
  for (int i = 0; i < 80; ++i) {
    const auto inst = testing::random_instance(4, 2, 3, 20, rng);
    const Objective f = i % 2 ? inst.coverage() : inst.expected();
    for (std::size_t alpha = 0; alpha <= 3; ++alpha) {
      if (testing::maxmin_value(inst.block_sizes, f, alpha) > 0.0 &&
          !testing::curvature(inst.block_sizes, f)) {
        continue;
      }
      const auto r = check_approximation_bound(inst.matroid(), f, alpha);
      EXPECT_TRUE(r.holds) << i << " alpha=" << alpha << " slack=" << r.slack();
      EXPECT_NEAR(r.optimal_value, testing::maxmin_value(inst.block_sizes, f, alpha),
                  1e-12);
    }
  }
}

}  // namespace
}  // namespace rtt
