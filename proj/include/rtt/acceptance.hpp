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

// Acceptance criteria, runnable from the test suite and from `rtt check`.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "rtt/adversary.hpp"
#include "rtt/analysis.hpp"
#include "rtt/experiment.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/planner.hpp"
#include "rtt/testing/oracles.hpp"

namespace rtt::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kMasterSeed = 20190520;

// 1. Bound f(S \ A*) >= max(1 - nu, h)/2 * f* - 1e-9 on 200 random instances,
//    with f* and nu from the mask-enumeration oracles, in under 60 s.
inline CriterionResult bound_suite() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(derive_seed(kMasterSeed, 1));
  std::uniform_int_distribution<std::size_t> robots(2, 5);
  std::uniform_int_distribution<std::size_t> targets(1, 15);
  std::size_t violations = 0, degenerate = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = robots(rng);
    std::uniform_int_distribution<std::size_t> alphas(0, r - 1);
    const std::size_t alpha = alphas(rng);
    const auto inst = testing::random_instance(r, 2, 3, targets(rng), rng);
    const Objective f = (i % 2 == 0) ? inst.coverage() : inst.expected();
    const auto m = inst.matroid();
    const TrajectorySet s = plan_resilient(m, f, alpha).selected;
    const double attacked =
        testing::worst_case_value(f, [&] {
          testing::Mask mask = 0;
          for (auto id : s) mask |= testing::Mask{1} << id;
          return mask;
        }(), alpha);
    const double f_star = testing::maxmin_value(inst.block_sizes, f, alpha);
    if (f_star == 0.0) {
      ++degenerate;
      if (attacked < 0.0) ++violations;
      continue;
    }
    const double nu = *testing::curvature(inst.block_sizes, f);
    const double factor = std::max(1.0 - nu, h_bound(r, alpha)) / 2.0;
    const double slack = attacked - factor * f_star;
    min_slack = std::min(min_slack, slack);
    if (slack < -kBoundSlack) ++violations;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << "200 instances, " << violations << " violations, " << degenerate
    << " with f*=0, min slack " << min_slack << ", " << secs << " s";
  return {1, "approximation bound on random instances", violations == 0 && secs < 60.0, d.str()};
}

// 2. alpha = 0 makes the resilient planner identical to greedy.
inline CriterionResult alpha_zero_equivalence() {
  Rng rng(derive_seed(kMasterSeed, 2));
  std::uniform_int_distribution<std::size_t> robots(1, 6);
  std::uniform_int_distribution<std::size_t> targets(0, 40);
  std::size_t mismatches = 0;
  for (int i = 0; i < 100; ++i) {
    const auto inst = testing::random_instance(robots(rng), 1, 4, targets(rng), rng);
    const Objective f = (i % 2 == 0) ? inst.coverage() : inst.expected();
    const auto m = inst.matroid();
    const auto res = plan_resilient(m, f, 0);
    const auto greedy = plan_greedy(m, f);
    if (res.selected != greedy.selected || !res.trace.bait.empty()) ++mismatches;
  }
  return {2, "alpha = 0 equals greedy", mismatches == 0,
          "100 instances, " + std::to_string(mismatches) + " mismatches"};
}

inline ExperimentSpec one_step_reference_spec() {
  ExperimentSpec spec;
  spec.protocol = Protocol::kOneStep;
  spec.planners = {PlannerKind::kResilient, PlannerKind::kGreedy,
                   PlannerKind::kRandom, PlannerKind::kBruteForce};
  spec.attackers = {AttackerKind::kOptimal, AttackerKind::kGreedy,
                    AttackerKind::kRandom};
  spec.trials = 30;
  spec.seed = kMasterSeed;
  spec.num_robots = 6;
  spec.targets_min = spec.targets_max = 30;
  spec.alphas = {3};
  spec.fov_side = 3.0;
  spec.fly_length = 7.0;  // l_t = 10
  spec.arena = {0.0, 10.0, 0.0, 10.0};
  return spec;
}

inline double mean_of(const std::vector<RecordRow>& rows, const std::string& planner,
                      const std::string& attacker, double RecordRow::*column) {
  std::vector<double> v;
  for (const auto& r : rows) {
    if (r.planner == planner && r.attacker == attacker) v.push_back(r.*column);
  }
  return compute_stats(v).mean;
}

// 3. One-step comparison under worst-case attacks.
inline CriterionResult one_step_comparison(const std::vector<RecordRow>& rows) {
  const double res = mean_of(rows, "resilient", "optimal", &RecordRow::f_attacked);
  const double greedy = mean_of(rows, "greedy", "optimal", &RecordRow::f_attacked);
  const double brute = mean_of(rows, "brute-force", "optimal", &RecordRow::f_attacked);
  std::ostringstream d;
  d << "optimal attack, m=30, alpha=3, 30 trials: resilient " << res << ", greedy "
    << greedy << ", brute-force " << brute << " (need resilient >= greedy and >= "
    << 0.85 * brute << ")";
  return {3, "one-step comparison under optimal attack",
          res >= greedy && res >= 0.85 * brute, d.str()};
}

// 4. Optimal attack never leaves more than the greedy or random ones.
inline CriterionResult attack_ordering(const std::vector<RecordRow>& rows) {
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::string>;
  std::map<Key, std::map<std::string, double>> by_plan;
  for (const auto& r : rows) by_plan[{r.trial, r.m, r.alpha, r.planner}][r.attacker] = r.f_attacked;
  std::size_t checked = 0, violations = 0;
  for (const auto& [key, vals] : by_plan) {
    const double opt = vals.at("optimal");
    for (const char* other : {"greedy", "random"}) {
      ++checked;
      if (opt > vals.at(other)) ++violations;
    }
  }
  return {4, "per-instance attack ordering", violations == 0 && checked > 0,
          std::to_string(checked) + " comparisons, " + std::to_string(violations) + " violations"};
}

// 5. Monotonicity / submodularity sampling with negative controls.
inline CriterionResult property_suite() {
  Rng rng(derive_seed(kMasterSeed, 5));
  const auto inst = testing::random_instance(5, 4, 4, 25, rng);
  const auto m = inst.matroid();
  std::ostringstream d;
  bool ok = true;
  for (const auto& [name, f] : {std::pair{"coverage", inst.coverage()},
                                std::pair{"expected_detections", inst.expected()}}) {
    const auto mono = check_monotone(f, m, 1000, kMasterSeed + 51);
    const auto sub = check_submodular(f, m, 1000, kMasterSeed + 52);
    ok = ok && mono.passed() && sub.passed();
    d << name << ": " << mono.violations.size() << "/1000 monotone, "
      << sub.violations.size() << "/1000 submodular violations; ";
  }
  const Objective neg([](const TrajectorySet& s) { return -static_cast<double>(s.size()); },
                      "minus_size");
  const Objective sq([](const TrajectorySet& s) {
                       return static_cast<double>(s.size() * s.size());
                     },
                     "size_squared");
  const auto neg_report = check_monotone(neg, m, 1000, kMasterSeed + 53);
  const auto sq_report = check_submodular(sq, m, 1000, kMasterSeed + 54);
  ok = ok && !neg_report.passed() && !sq_report.passed();
  d << "controls: -|S| " << neg_report.violations.size() << " monotone violations, |S|^2 "
    << sq_report.violations.size() << " submodular violations";
  return {5, "monotone submodular property suite", ok, d.str()};
}

// 6. Inclusion-exclusion union mass against 1e5-sample Monte Carlo.
inline CriterionResult expected_detections_oracle() {
  Rng rng(derive_seed(kMasterSeed, 6));
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  std::uniform_real_distribution<double> spread(0.3, 3.0);
  std::uniform_real_distribution<double> side(0.5, 6.0);
  std::uniform_int_distribution<std::size_t> count(1, 5);
  constexpr std::size_t kSamples = 100'000;
  std::size_t failures = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    CoverageMap rects;
    const std::size_t k = count(rng);
    for (std::size_t j = 0; j < k; ++j) {
      const double x = coord(rng), y = coord(rng);
      const double w = side(rng);
      rects.push_back({x - 1.5, x + w, y - 1.5, y + side(rng)});
    }
    const double mx = coord(rng);
    GaussianTargetBelief b{0, {mx, coord(rng)}, spread(rng), spread(rng)};
    std::vector<TrajectoryId> ids(k);
    for (std::size_t j = 0; j < k; ++j) ids[j] = j;
    const TrajectorySet s(ids);
    const double exact = expected_detections(std::span(&b, 1), rects, s);
    const auto mc = testing::monte_carlo_union_mass(b, rects, s, kSamples, rng);
    // Binomial standard error at the value under test; floor of 1/N for
    // masses pinned at 0 or 1.
    const double se = std::max(std::sqrt(exact * (1.0 - exact) / kSamples), 1.0 / kSamples);
    const double z = std::fabs(exact - mc.mean) / se;
    worst = std::max(worst, z);
    if (z > 4.0) ++failures;
  }
  std::ostringstream d;
  d << "50 cases, " << failures << " beyond 4 standard errors, worst " << worst << " SE";
  return {6, "expected detections vs Monte Carlo", failures == 0, d.str()};
}

// 7. Oracle calls <= 2|T_R|^2 + |T_R| at 6 robots x 4 trajectories.
inline CriterionResult complexity_contract() {
  Rng rng(derive_seed(kMasterSeed, 7));
  const std::size_t budget = 2 * 24 * 24 + 24;
  std::size_t worst = 0;
  for (int i = 0; i < 30; ++i) {
    const auto inst = testing::random_instance(6, 4, 4, 30 + i, rng);
    const auto m = inst.matroid();
    for (std::size_t alpha = 0; alpha <= 6; ++alpha) {
      for (const Objective& f : {inst.coverage(), inst.expected()}) {
        const auto plan = plan_resilient(m, f, alpha);
        worst = std::max(worst, plan.oracle_calls);
      }
    }
  }
  return {7, "oracle-call budget", worst <= budget,
          "max " + std::to_string(worst) + " calls, budget " + std::to_string(budget)};
}

// 8. Curvature 0 for disjoint coverage, 1 for two identical robots.
inline CriterionResult curvature_endpoints() {
  // Robots 40 m apart: no two robots' rectangles can meet.
  std::vector<Point2> targets;
  CoverageMap rects;
  for (int r = 0; r < 3; ++r) {
    RobotSpec spec{r, {40.0 * r, 0.0}, 3.0, 7.0};
    for (Direction d : kAllDirections) {
      rects.push_back(coverage_rect(spec, d));
      const Point2 e = end_position(spec, d);
      targets.push_back(e);
    }
  }
  const PartitionMatroid m(std::vector<std::size_t>(3, 4));
  const double disjoint = constrained_curvature(m, make_coverage_objective(targets, rects)).value;

  std::vector<Point2> shared_targets;
  CoverageMap dup_rects;
  for (int r = 0; r < 2; ++r) {
    RobotSpec spec{r, {5.0, 5.0}, 3.0, 7.0};
    for (Direction d : kAllDirections) dup_rects.push_back(coverage_rect(spec, d));
  }
  for (Direction d : kAllDirections) {
    shared_targets.push_back(end_position({0, {5.0, 5.0}, 3.0, 7.0}, d));
  }
  const PartitionMatroid m2(std::vector<std::size_t>(2, 4));
  const double duplicated =
      constrained_curvature(m2, make_coverage_objective(shared_targets, dup_rects)).value;
  std::ostringstream d;
  d << "disjoint nu = " << disjoint << ", duplicated nu = " << duplicated;
  return {8, "curvature endpoints", disjoint == 0.0 && duplicated == 1.0, d.str()};
}

// 9. h(n, 0) = 1 for n in 1..20, and for even n in 2..20 the minimum of
//    h(n, alpha) over alpha in [0, n-1] equals 2/(n+2), attained at n/2.
inline CriterionResult h_bound_facts() {
  bool at_zero = true;
  for (std::size_t n = 1; n <= 20; ++n) at_zero = at_zero && h_bound_denominator(n, 0) == 1;
  bool minimum = true;
  std::ostringstream d;
  d << "h(n,0) = 1 for n in 1..20: " << (at_zero ? "yes" : "NO") << "; minimum over alpha:";
  for (std::size_t n = 2; n <= 20; n += 2) {
    std::size_t max_den = 0;
    for (std::size_t a = 0; a < n; ++a) max_den = std::max(max_den, h_bound_denominator(n, a));
    // min h = 1/max_den; 1/max_den == 2/(n+2)  <=>  2 * max_den == n + 2.
    const bool ok = 2 * max_den == n + 2 && h_bound_denominator(n, n / 2) == max_den;
    minimum = minimum && ok;
    if (!ok) d << " n=" << n << " min 1/" << max_den << " vs 2/" << n + 2 << ";";
  }
  if (minimum) d << " 2/(n+2) for every even n";
  return {9, "h(n, alpha) facts", at_zero && minimum, d.str()};
}

inline ExperimentSpec multi_round_reference_spec() {
  ExperimentSpec spec;
  spec.protocol = Protocol::kMultiRound;
  spec.planners = {PlannerKind::kResilient, PlannerKind::kGreedy,
                   PlannerKind::kRandom, PlannerKind::kBruteForce};
  spec.attackers = {AttackerKind::kOptimal};
  spec.trials = 1;
  spec.seed = kMasterSeed;
  spec.num_robots = 4;
  spec.targets_min = spec.targets_max = 30;
  spec.alphas = {2};
  spec.fov_side = 3.0;
  spec.fly_length = 3.0;  // l_t = 6
  spec.sim.rounds = 50;
  return spec;
}

// 10. Multi-round: resilient attack rate <= greedy, byte-deterministic.
inline CriterionResult multi_round_robustness() {
  const auto spec = multi_round_reference_spec();
  RunOptions opts;
  opts.record_wall_time = false;
  const auto rows = run_multi_round_suite(spec, opts);
  const std::string first = to_csv(rows);
  const std::string second = to_csv(run_multi_round_suite(spec, opts));
  const double res = mean_of(rows, "resilient", "optimal", &RecordRow::attack_rate);
  const double greedy = mean_of(rows, "greedy", "optimal", &RecordRow::attack_rate);
  std::ostringstream d;
  d << "50 rounds: mean attack rate resilient " << res << ", greedy " << greedy
    << "; repeated run " << (first == second ? "byte-identical" : "DIFFERS");
  return {10, "multi-round attack rate", res <= greedy && first == second, d.str()};
}

inline std::vector<CriterionResult> run_bounds_suite() {
  std::vector<CriterionResult> out;
  out.push_back(bound_suite());
  out.push_back(alpha_zero_equivalence());
  const auto rows = run_one_step_suite(one_step_reference_spec(), {1, false});
  out.push_back(one_step_comparison(rows));
  out.push_back(attack_ordering(rows));
  out.push_back(complexity_contract());
  out.push_back(curvature_endpoints());
  out.push_back(h_bound_facts());
  out.push_back(multi_round_robustness());
  return out;
}

inline std::vector<CriterionResult> run_properties_suite() {
  return {property_suite(), expected_detections_oracle()};
}

inline void print(std::ostream& os, const CriterionResult& r) {
  os << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name
     << " -- " << r.detail << '\n';
}

}  // namespace rtt::acceptance
