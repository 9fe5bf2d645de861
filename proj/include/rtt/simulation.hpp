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

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtt/adversary.hpp"
#include "rtt/errors.hpp"
#include "rtt/geometry.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/planner.hpp"
#include "rtt/rng.hpp"

namespace rtt {

// Headless multi-round tracking world. One round lasts one time unit, so
// velocities are in meters per round.
struct SimConfig {
  std::size_t num_robots = 4;
  std::size_t num_targets = 30;
  std::size_t alpha = 2;
  double fov_side = 3.0;    // l_o
  double fly_length = 3.0;  // l_f; l_t = l_f + l_o
  Rect arena{0.0, 10.0, 0.0, 10.0};
  std::size_t rounds = 50;
  double measurement_std = 0.1;   // sigma_z
  double process_var = 0.01;      // q, per axis
  double initial_var = 1.0;
  double target_speed = 0.3;
  double velocity_perturb_std = 0.0;
  std::vector<PlannerKind> planners = {PlannerKind::kResilient,
                                       PlannerKind::kGreedy};
  std::vector<AttackerKind> attackers = {AttackerKind::kOptimal};
  std::uint64_t seed = 0;

  double track_length() const { return fov_side + fly_length; }

  void validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
      throw ArgumentError("SimConfig." + field + ": " + why);
    };
    if (num_robots == 0) fail("num_robots", "must be >= 1");
    if (alpha > num_robots) fail("alpha", "must not exceed num_robots");
    if (!(fov_side > 0.0)) fail("fov_side", "must be > 0");
    if (!(fly_length > 0.0)) fail("fly_length", "must be > 0");
    if (!(arena.x_max > arena.x_min) || !(arena.y_max > arena.y_min)) {
      fail("arena", "must have positive extent");
    }
    if (rounds == 0) fail("rounds", "must be >= 1");
    if (!(measurement_std > 0.0)) fail("measurement_std", "must be > 0");
    if (!(process_var >= 0.0)) fail("process_var", "must be >= 0");
    if (!(initial_var > 0.0)) fail("initial_var", "must be > 0");
    if (!(target_speed >= 0.0)) fail("target_speed", "must be >= 0");
    if (!(velocity_perturb_std >= 0.0)) {
      fail("velocity_perturb_std", "must be >= 0");
    }
    if (planners.empty()) fail("planners", "needs at least one planner");
    if (attackers.empty()) fail("attackers", "needs at least one attacker");
  }
};

struct TimedMeasurement {
  std::size_t round = 0;
  Point2 z;
};

struct TargetTrack {
  int target_id = 0;
  Point2 true_position;
  Point2 true_velocity;
  Point2 estimate_mean;
  double estimate_var_x = 1.0;
  double estimate_var_y = 1.0;
  // Finite difference of the last two raw measurements; zero until a second
  // measurement arrives.
  Point2 velocity_estimate;
  std::optional<TimedMeasurement> previous;
  std::optional<TimedMeasurement> latest;

  GaussianTargetBelief belief() const {
    return {target_id, estimate_mean, std::sqrt(estimate_var_x),
            std::sqrt(estimate_var_y)};
  }
};

inline std::vector<GaussianTargetBelief> beliefs_of(
    const std::vector<TargetTrack>& tracks) {
  std::vector<GaussianTargetBelief> out;
  out.reserve(tracks.size());
  for (const auto& t : tracks) out.push_back(t.belief());
  return out;
}

inline std::vector<Point2> true_positions(const std::vector<TargetTrack>& tracks) {
  std::vector<Point2> out;
  out.reserve(tracks.size());
  for (const auto& t : tracks) out.push_back(t.true_position);
  return out;
}

inline Point2 uniform_point(const Rect& area, Rng& rng) {
  std::uniform_real_distribution<double> ux(area.x_min, area.x_max);
  std::uniform_real_distribution<double> uy(area.y_min, area.y_max);
  const double x = ux(rng);
  return {x, uy(rng)};
}

namespace detail {

// Mirrors a coordinate back into [lo, hi], flipping the velocity component
// once per crossing.
inline void reflect(double& pos, double& vel, double lo, double hi) {
  const double span = hi - lo;
  for (int guard = 0; (pos < lo || pos > hi) && guard < 64; ++guard) {
    if (pos < lo) pos = 2 * lo - pos;
    if (pos > hi) pos = 2 * hi - pos;
    vel = -vel;
  }
  if (pos < lo || pos > hi) {
    // Displacement larger than many arena widths; fold directly.
    pos = lo + std::fmod(std::fabs(pos - lo), span);
  }
}

}  // namespace detail

// Single-integrator step p <- p + v, reflecting at the arena walls, then an
// optional Gaussian perturbation of v.
inline void step_targets(std::vector<TargetTrack>& tracks, const SimConfig& config,
                         Rng& rng) {
  std::normal_distribution<double> jitter(0.0, config.velocity_perturb_std);
  for (auto& t : tracks) {
    t.true_position.x += t.true_velocity.x;
    t.true_position.y += t.true_velocity.y;
    detail::reflect(t.true_position.x, t.true_velocity.x, config.arena.x_min,
                    config.arena.x_max);
    detail::reflect(t.true_position.y, t.true_velocity.y, config.arena.y_min,
                    config.arena.y_max);
    if (config.velocity_perturb_std > 0.0) {
      t.true_velocity.x += jitter(rng);
      t.true_velocity.y += jitter(rng);
    }
  }
}

// z = p_true + N(0, sigma^2 I) for every target.
inline std::vector<Point2> measure(const std::vector<TargetTrack>& tracks,
                                   double sigma, Rng& rng) {
  std::vector<Point2> z;
  z.reserve(tracks.size());
  if (sigma == 0.0) {
    for (const auto& t : tracks) z.push_back(t.true_position);
    return z;
  }
  std::normal_distribution<double> noise(0.0, sigma);
  for (const auto& t : tracks) {
    const double nx = noise(rng);
    const double ny = noise(rng);
    z.push_back({t.true_position.x + nx, t.true_position.y + ny});
  }
  return z;
}

// Per-axis Kalman filter with identity dynamics plus the velocity estimate as
// a known input, identity observation and noise variance sigma_z^2.
inline TargetTrack kalman_update(TargetTrack track, const Point2& z,
                                 std::size_t round, double measurement_std,
                                 double process_var) {
  const double r = measurement_std * measurement_std;
  auto axis = [&](double& mean, double& var, double velocity, double obs) {
    mean += velocity;
    var += process_var;
    const double gain = var / (var + r);
    mean += gain * (obs - mean);
    var = (1.0 - gain) * var;
  };
  axis(track.estimate_mean.x, track.estimate_var_x, track.velocity_estimate.x, z.x);
  axis(track.estimate_mean.y, track.estimate_var_y, track.velocity_estimate.y, z.y);

  track.previous = track.latest;
  track.latest = TimedMeasurement{round, z};
  if (track.previous && track.latest->round > track.previous->round) {
    const double dk =
        static_cast<double>(track.latest->round - track.previous->round);
    track.velocity_estimate = {(track.latest->z.x - track.previous->z.x) / dk,
                               (track.latest->z.y - track.previous->z.y) / dk};
  }
  return track;
}

inline TargetTrack kalman_update(const TargetTrack& track, const Point2& z,
                                 std::size_t round, const SimConfig& config) {
  return kalman_update(track, z, round, config.measurement_std,
                       config.process_var);
}

// Targets start uniformly in the arena with constant-speed velocities in
// uniformly random directions. The filter is seeded from one round-0
// measurement with variance `initial_var` and zero velocity.
inline std::vector<TargetTrack> init_tracks(const SimConfig& config, Rng& rng) {
  std::vector<TargetTrack> tracks(config.num_targets);
  std::uniform_real_distribution<double> heading(0.0, 2.0 * std::numbers::pi);
  for (std::size_t j = 0; j < tracks.size(); ++j) {
    auto& t = tracks[j];
    t.target_id = static_cast<int>(j);
    t.true_position = uniform_point(config.arena, rng);
    const double th = heading(rng);
    t.true_velocity = {config.target_speed * std::cos(th),
                       config.target_speed * std::sin(th)};
  }
  const auto z = measure(tracks, config.measurement_std, rng);
  for (std::size_t j = 0; j < tracks.size(); ++j) {
    auto& t = tracks[j];
    t.estimate_mean = z[j];
    t.estimate_var_x = config.initial_var;
    t.estimate_var_y = config.initial_var;
    t.latest = TimedMeasurement{0, z[j]};
  }
  return tracks;
}

// Four candidate trajectories per robot, ids laid out robot-major in
// kAllDirections order.
struct RoundWorld {
  std::vector<RobotSpec> robots;
  PartitionMatroid matroid;
  CoverageMap rects;
  std::vector<Direction> direction_of;  // by trajectory id
};

inline RoundWorld build_round_world(const std::vector<Point2>& robot_positions,
                                    double fov_side, double fly_length) {
  std::vector<RobotSpec> robots;
  CoverageMap rects;
  std::vector<Direction> dirs;
  for (std::size_t r = 0; r < robot_positions.size(); ++r) {
    RobotSpec spec{static_cast<int>(r), robot_positions[r], fov_side, fly_length};
    for (Direction d : kAllDirections) {
      rects.push_back(coverage_rect(spec, d));
      dirs.push_back(d);
    }
    robots.push_back(spec);
  }
  return {std::move(robots),
          PartitionMatroid(std::vector<std::size_t>(robot_positions.size(),
                                                    kAllDirections.size())),
          std::move(rects), std::move(dirs)};
}

// Dispatches to a planner. `rng` is only drawn from by the random planner.
inline PlanResult run_planner(PlannerKind kind, const PartitionMatroid& m,
                              const Objective& f, std::size_t alpha, Rng& rng) {
  switch (kind) {
    case PlannerKind::kResilient: return plan_resilient(m, f, alpha);
    case PlannerKind::kGreedy: return plan_greedy(m, f);
    case PlannerKind::kRandom: return plan_random(m, rng);
    case PlannerKind::kBruteForce: return plan_bruteforce_maxmin(m, f, alpha);
  }
  throw ArgumentError("unknown planner");
}

// f_full / f_attacked are expected detections under the planning beliefs;
// truth_* count targets whose true position lies in the covered union.
struct RoundRecord {
  std::size_t round = 0;
  PlannerKind planner = PlannerKind::kResilient;
  AttackerKind attacker = AttackerKind::kOptimal;
  double f_full = 0.0;
  double f_attacked = 0.0;
  double attack_rate = 0.0;
  std::size_t truth_full = 0;
  std::size_t truth_attacked = 0;
  std::size_t oracle_calls = 0;
  std::int64_t wall_time_micros = 0;
  TrajectorySet selected;
  TrajectorySet removed;
};

// (f_full - f_attacked) / f_full, or 0 when nothing is covered.
inline double relative_loss(double full, double attacked) {
  return full > 0.0 ? (full - attacked) / full : 0.0;
}

// Runs every configured planner against the same target motion and
// measurement noise. Each planner steers its own fleet; all fleets start
// from the same positions. Per round and planner:
//   plan on expected detections over the current beliefs, apply every
//   attacker (attacked robots still fly but sense nothing), score, and fly
//   l_f along the selected trajectory.
// After all planners: targets step, are measured, and filters update.
inline std::vector<RoundRecord> run_rounds(const SimConfig& config) {
  config.validate();
  Rng world = make_rng(config.seed, Stream::kWorld);
  std::vector<Point2> start(config.num_robots);
  for (auto& p : start) p = uniform_point(config.arena, world);
  std::vector<TargetTrack> tracks = init_tracks(config, world);

  const std::size_t np = config.planners.size();
  std::vector<std::vector<Point2>> fleets(np, start);
  std::vector<Rng> planner_rngs;
  std::vector<Rng> attacker_rngs;
  for (std::size_t p = 0; p < np; ++p) {
    planner_rngs.emplace_back(
        derive_seed(derive_seed(config.seed, std::uint64_t(Stream::kPlanner)), p));
    attacker_rngs.emplace_back(
        derive_seed(derive_seed(config.seed, std::uint64_t(Stream::kAttacker)), p));
  }

  std::vector<RoundRecord> records;
  for (std::size_t round = 0; round < config.rounds; ++round) {
    const auto beliefs = beliefs_of(tracks);
    const auto truth = true_positions(tracks);
    for (std::size_t p = 0; p < np; ++p) {
      RoundWorld rw = build_round_world(fleets[p], config.fov_side, config.fly_length);
      const Objective f = make_expected_detections_objective(beliefs, rw.rects);
      const auto t0 = std::chrono::steady_clock::now();
      const PlanResult plan =
          run_planner(config.planners[p], rw.matroid, f, config.alpha, planner_rngs[p]);
      const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
      const double full = f(plan.selected);
      const std::size_t truth_full = coverage_count(truth, rw.rects, plan.selected);
      for (AttackerKind a : config.attackers) {
        const AttackResult attack =
            run_attack(a, f, plan.selected, config.alpha, attacker_rngs[p]);
        RoundRecord rec;
        rec.round = round;
        rec.planner = config.planners[p];
        rec.attacker = a;
        rec.f_full = full;
        rec.f_attacked = attack.surviving_value;
        rec.attack_rate = relative_loss(full, attack.surviving_value);
        rec.truth_full = truth_full;
        rec.truth_attacked = coverage_count(
            truth, rw.rects, plan.selected.difference(attack.removed));
        rec.oracle_calls = plan.oracle_calls;
        rec.wall_time_micros = micros;
        rec.selected = plan.selected;
        rec.removed = attack.removed;
        records.push_back(std::move(rec));
      }
      for (TrajectoryId id : plan.selected) {
        const std::size_t r = rw.matroid.robot_of(id);
        fleets[p][r] = end_position(rw.robots[r], rw.direction_of[id]);
      }
    }
    step_targets(tracks, config, world);
    const auto z = measure(tracks, config.measurement_std, world);
    for (std::size_t j = 0; j < tracks.size(); ++j) {
      tracks[j] = kalman_update(tracks[j], z[j], round + 1, config);
    }
  }
  return records;
}

}  // namespace rtt
