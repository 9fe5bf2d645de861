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

#include "rtt/planner.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "rtt/adversary.hpp"
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

// Two robots; robot r has a_r (ids 0, 2) covering the same three targets
// and b_r (ids 1, 3) covering one private target each.
struct BaitInstance {
  PartitionMatroid m{{2, 2}};
  Objective f = set_cover({{0, 1, 2}, {3}, {0, 1, 2}, {4}});
};

TEST(PlanResilientTest, HandTracedBaitInstance) {
  BaitInstance inst;
  const auto plan = plan_resilient(inst.m, inst.f, 1);
  // Phase 1 scans 0, 2 (value 3) then 1, 3 (value 1); only 0 fits |S1| <= 1.
  EXPECT_EQ(plan.trace.bait, (TrajectorySet{0}));
  EXPECT_EQ(plan.trace.scanned_bait, (TrajectorySet{0, 1, 2, 3}));
  // Phase 2 from S2 = {}: gains 1 (id 1), 3 (id 2), 1 (id 3) -> take 2; then
  // 1 and 3 are scanned but blocked by the one-per-robot constraint.
  EXPECT_EQ(plan.trace.greedy_fill, (TrajectorySet{2}));
  EXPECT_EQ(plan.trace.scanned_fill, (TrajectorySet{1, 2, 3}));
  EXPECT_EQ(plan.selected, (TrajectorySet{0, 2}));
  EXPECT_EQ(attack_optimal(inst.f, plan.selected, 1).surviving_value, 3.0);

  const auto greedy = plan_greedy(inst.m, inst.f);
  EXPECT_EQ(greedy.selected, (TrajectorySet{0, 3}));
  EXPECT_EQ(attack_optimal(inst.f, greedy.selected, 1).surviving_value, 1.0);

  const auto ref = testing::reference_resilient({2, 2}, inst.f, 1);
  EXPECT_EQ(ref.bait, plan.trace.bait);
  EXPECT_EQ(ref.fill, plan.trace.greedy_fill);
}

TEST(PlanResilientTest, AlphaZeroIsGreedy) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const auto inst = testing::random_instance(5, 1, 4, 25, rng);
    const Objective f = i % 2 ? inst.coverage() : inst.expected();
    const auto plan = plan_resilient(inst.matroid(), f, 0);
    EXPECT_TRUE(plan.trace.bait.empty());
    EXPECT_EQ(plan.selected, plan_greedy(inst.matroid(), f).selected);
  }
}

TEST(PlanResilientTest, MatchesLiteralTranscription) {
  Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<std::size_t> robots(1, 6);
    const std::size_t r = robots(rng);
    const auto inst = testing::random_instance(r, 1, 4, 20, rng);
    const Objective f = i % 2 ? inst.coverage() : inst.expected();
    std::uniform_int_distribution<std::size_t> alphas(0, r);
    const std::size_t alpha = alphas(rng);
    const auto plan = plan_resilient(inst.matroid(), f, alpha);
    const auto ref = testing::reference_resilient(inst.block_sizes, f, alpha);
    EXPECT_EQ(plan.trace.bait, ref.bait);
    EXPECT_EQ(plan.trace.greedy_fill, ref.fill);
  }
}

TEST(PlanResilientTest, TraceInvariants) {
  Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto inst = testing::random_instance(6, 1, 4, 30, rng);
    const auto m = inst.matroid();
    const Objective f = inst.coverage();
    for (std::size_t alpha = 0; alpha <= 6; ++alpha) {
      const auto plan = plan_resilient(m, f, alpha);
      const auto& t = plan.trace;
      EXPECT_TRUE(m.is_basis(plan.selected));
      EXPECT_TRUE(t.bait.intersection(t.greedy_fill).empty());
      EXPECT_EQ(t.bait.set_union(t.greedy_fill), plan.selected);
      EXPECT_LE(t.bait.size(), alpha);
      EXPECT_TRUE(m.is_independent(t.bait));
      EXPECT_EQ(t.scanned_bait, m.ground_set());
      EXPECT_EQ(t.scanned_fill, m.ground_set().difference(t.bait));
      // Replay: the bait is the first min(alpha, |R|) trajectories of the
      // value-sorted scan that keep one per robot.
      std::vector<TrajectoryId> order(m.ground_size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return f.singleton(a) > f.singleton(b);
      });
      TrajectorySet replay;
      for (auto id : order) {
        if (replay.size() < alpha && m.can_add(replay, id)) replay.insert(id);
      }
      EXPECT_EQ(replay, t.bait);
    }
  }
}

TEST(PlanResilientTest, OracleCallsWithinQuadraticBudget) {
  Rng rng(34);
  for (int i = 0; i < 20; ++i) {
    const auto inst = testing::random_instance(6, 4, 4, 30 + i, rng);
    for (std::size_t alpha = 0; alpha <= 6; ++alpha) {
      const Objective f = inst.coverage();
      const auto plan = plan_resilient(inst.matroid(), f, alpha);
      EXPECT_LE(plan.oracle_calls, 2u * 24 * 24 + 24);
      EXPECT_EQ(plan.oracle_calls, f.eval_count());
    }
  }
}

TEST(PlanResilientTest, RejectsAlphaAboveRobotCount) {
  BaitInstance inst;
  EXPECT_THROW(plan_resilient(inst.m, inst.f, 3), ArgumentError);
  EXPECT_NO_THROW(plan_resilient(inst.m, inst.f, 2));
}

TEST(PlanGreedyTest, SingleRobotTakesBestSingleton) {
  const PartitionMatroid m({4});
  const Objective f = set_cover({{1}, {1, 2, 3}, {4, 5}, {}});
  EXPECT_EQ(plan_greedy(m, f).selected, (TrajectorySet{1}));
}

TEST(PlanGreedyTest, DisjointWorldReachesOptimum) {
  // Three robots with private targets: f is additive over bases.
  const PartitionMatroid m({2, 2, 2});
  const Objective f = set_cover({{1}, {2, 3}, {4, 5, 6}, {7}, {8}, {9, 10}});
  double best = 0;
  for (const auto& s : enumerate_bases(m)) best = std::max(best, f(s));
  EXPECT_EQ(f(plan_greedy(m, f).selected), best);
}

TEST(PlanGreedyTest, HalfApproximationOnRandomInstances) {
  Rng rng(35);
  for (int i = 0; i < 100; ++i) {
    const auto inst = testing::random_instance(4, 2, 3, 15, rng);
    const Objective f = i % 2 ? inst.coverage() : inst.expected();
    const double best = testing::maxmin_value(inst.block_sizes, f, 0);
    EXPECT_GE(f(plan_greedy(inst.matroid(), f).selected), 0.5 * best - 1e-9);
  }
}

TEST(PlanRandomTest, TrivialAndDeterministic) {
  EXPECT_EQ(plan_random(PartitionMatroid({1}), std::uint64_t{5}).selected, (TrajectorySet{0}));
  const PartitionMatroid m({4, 4, 4});
  EXPECT_EQ(plan_random(m, std::uint64_t{17}).selected,
            plan_random(m, std::uint64_t{17}).selected);
  EXPECT_TRUE(m.is_basis(plan_random(m, std::uint64_t{17}).selected));
}

TEST(PlanRandomTest, UniformPerRobot) {
  const PartitionMatroid m({4, 3});
  Rng rng(36);
  std::map<TrajectoryId, int> hits;
  const int draws = 10'000;
  for (int i = 0; i < draws; ++i) {
    for (auto id : plan_random(m, rng).selected) ++hits[id];
  }
  for (std::size_t r = 0; r < 2; ++r) {
    const double p = 1.0 / double(m.block_size(r));
    const double sd = std::sqrt(draws * p * (1 - p));
    for (auto id : m.block(r)) {
      EXPECT_LE(std::fabs(hits[id] - draws * p), 5 * sd) << id;
    }
  }
}

TEST(PlanBruteForceTest, AlphaZeroIsBestBasis) {
  Rng rng(37);
  const auto inst = testing::random_instance(4, 3, 3, 20, rng);
  const Objective f = inst.coverage();
  const auto plan = plan_bruteforce_maxmin(inst.matroid(), f, 0);
  double best = -1;
  TrajectorySet arg;
  for (const auto& s : enumerate_bases(inst.matroid())) {
    if (f(s) > best) best = f(s), arg = s;
  }
  EXPECT_EQ(*plan.optimal_value, best);
  EXPECT_EQ(plan.selected, arg);
}

TEST(PlanBruteForceTest, AlphaAllRobotsGivesZero) {
  BaitInstance inst;
  const auto plan = plan_bruteforce_maxmin(inst.m, inst.f, 2);
  EXPECT_EQ(*plan.optimal_value, 0.0);
  EXPECT_TRUE(inst.m.is_basis(plan.selected));
}

TEST(PlanBruteForceTest, MatchesNestedEnumerationOracle) {
  Rng rng(38);
  for (int i = 0; i < 50; ++i) {
    const auto inst = testing::random_instance(3, 2, 2, 12, rng);
    const Objective f = i % 2 ? inst.coverage() : inst.expected();
    const auto plan = plan_bruteforce_maxmin(inst.matroid(), f, 1);
    EXPECT_EQ(*plan.optimal_value, testing::maxmin_value(inst.block_sizes, f, 1));
    EXPECT_EQ(attack_optimal(f, plan.selected, 1).surviving_value, *plan.optimal_value);
  }
  BaitInstance bait;
  EXPECT_EQ(*plan_bruteforce_maxmin(bait.m, bait.f, 1).optimal_value, 3.0);
}

TEST(PlanBruteForceTest, CapExceeded) {
  const PartitionMatroid m(std::vector<std::size_t>(6, 4));
  const Objective f([](const TrajectorySet& s) { return double(s.size()); });
  EXPECT_THROW(plan_bruteforce_maxmin(m, f, 3, AttackSearch::kExactCardinality, 10'000),
               EnumerationTooLarge);
}

TEST(PlannerTest, DeterministicAcrossRuns) {
  Rng a(39), b(39);
  const auto ia = testing::random_instance(6, 4, 4, 30, a);
  const auto ib = testing::random_instance(6, 4, 4, 30, b);
  for (std::size_t alpha = 0; alpha <= 3; ++alpha) {
    const auto pa = plan_resilient(ia.matroid(), ia.expected(), alpha);
    const auto pb = plan_resilient(ib.matroid(), ib.expected(), alpha);
    EXPECT_EQ(pa.selected.to_string(), pb.selected.to_string());
    EXPECT_EQ(pa.oracle_calls, pb.oracle_calls);
  }
}

}  // namespace
}  // namespace rtt
