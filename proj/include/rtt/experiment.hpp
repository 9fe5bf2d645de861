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
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "rtt/adversary.hpp"
#include "rtt/errors.hpp"
#include "rtt/geometry.hpp"
#include "rtt/objective.hpp"
#include "rtt/planner.hpp"
#include "rtt/rng.hpp"
#include "rtt/simulation.hpp"

namespace rtt {

enum class Protocol { kOneStep, kMultiRound };

// What the one-step protocol plans and scores on.
enum class OneStepObjective {
  kCoverage,  // target count on true positions
  kExpected,  // expected detections over beliefs centered on a noisy fix
};

struct ExperimentSpec {
  Protocol protocol = Protocol::kOneStep;
  std::vector<PlannerKind> planners = {PlannerKind::kResilient,
                                       PlannerKind::kGreedy,
                                       PlannerKind::kRandom,
                                       PlannerKind::kBruteForce};
  std::vector<AttackerKind> attackers = {AttackerKind::kOptimal};
  std::size_t trials = 30;
  std::uint64_t seed = 0;

  std::size_t num_robots = 6;
  std::size_t targets_min = 30;
  std::size_t targets_max = 60;
  std::vector<std::size_t> alphas = {3};
  double fov_side = 3.0;
  double fly_length = 7.0;
  Rect arena{0.0, 10.0, 0.0, 10.0};
  OneStepObjective objective = OneStepObjective::kCoverage;
  double belief_std = 0.5;  // kExpected only

  // Multi-round only; num_robots, alpha, fov_side, fly_length, arena,
  // planners, attackers and seed come from the fields above.
  SimConfig sim;

  void validate() const {
    auto fail = [](const std::string& field, const std::string& why) {
      throw ArgumentError("invalid experiment spec: field '" + field + "' " + why);
    };
    if (planners.empty()) fail("planners", "must list at least one planner");
    if (attackers.empty()) fail("attackers", "must list at least one attacker");
    if (trials == 0) fail("trials", "must be >= 1");
    if (num_robots == 0) fail("num_robots", "must be >= 1");
    if (targets_min > targets_max) fail("targets", "has min > max");
    if (alphas.empty()) fail("alphas", "must list at least one value");
    for (std::size_t a : alphas) {
      if (a > num_robots) fail("alphas", "contains a value above num_robots");
    }
    if (!(fov_side > 0.0)) fail("fov_side", "must be > 0");
    if (!(fly_length >= 0.0)) fail("fly_length", "must be >= 0");
    if (!(arena.x_max > arena.x_min) || !(arena.y_max > arena.y_min)) {
      fail("arena", "must have positive extent");
    }
    if (objective == OneStepObjective::kExpected && !(belief_std > 0.0)) {
      fail("belief_std", "must be > 0");
    }
    if (protocol == Protocol::kMultiRound) {
      if (targets_min != targets_max) {
        fail("targets", "must be a single count for the multi-round protocol");
      }
      if (!(fly_length > 0.0)) fail("fly_length", "must be > 0 for multi-round");
      sim_config(alphas.front(), 0).validate();
    }
  }

  SimConfig sim_config(std::size_t alpha, std::uint64_t trial_seed) const {
    SimConfig c = sim;
    c.num_robots = num_robots;
    c.num_targets = targets_min;
    c.alpha = alpha;
    c.fov_side = fov_side;
    c.fly_length = fly_length;
    c.arena = arena;
    c.planners = planners;
    c.attackers = attackers;
    c.seed = trial_seed;
    return c;
  }
};

// ---------------------------------------------------------------------------
// Spec files are JSON objects. Unknown keys are rejected.

namespace detail {

template <typename Enum, std::size_t N>
Enum parse_enum(const std::string& field, const std::string& text,
                const std::array<Enum, N>& values) {
  for (Enum v : values) {
    if (to_string(v) == text) return v;
  }
  throw ArgumentError("invalid experiment spec: field '" + field +
                      "' has unknown value '" + text + "'");
}

inline constexpr std::array kPlannerKinds = {
    PlannerKind::kResilient, PlannerKind::kGreedy, PlannerKind::kRandom,
    PlannerKind::kBruteForce};
inline constexpr std::array kAttackerKinds = {
    AttackerKind::kOptimal, AttackerKind::kGreedy, AttackerKind::kRandom,
    AttackerKind::kNone};

}  // namespace detail

inline PlannerKind parse_planner(const std::string& s) {
  return detail::parse_enum("planners", s, detail::kPlannerKinds);
}
inline AttackerKind parse_attacker(const std::string& s) {
  return detail::parse_enum("attackers", s, detail::kAttackerKinds);
}

inline ExperimentSpec parse_experiment_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("invalid experiment spec: expected a JSON object");
  ExperimentSpec spec;
  auto field_error = [](const std::string& key, const std::exception& e) {
    return ArgumentError("invalid experiment spec: field '" + key + "': " + e.what());
  };
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "protocol") {
        const auto p = value.get<std::string>();
        if (p == "one-step") spec.protocol = Protocol::kOneStep;
        else if (p == "multi-round") spec.protocol = Protocol::kMultiRound;
        else throw ArgumentError("unknown protocol '" + p + "'");
      } else if (key == "planners") {
        spec.planners.clear();
        for (const auto& p : value) spec.planners.push_back(parse_planner(p.get<std::string>()));
      } else if (key == "attackers") {
        spec.attackers.clear();
        for (const auto& a : value) spec.attackers.push_back(parse_attacker(a.get<std::string>()));
      } else if (key == "trials") {
        spec.trials = value.get<std::size_t>();
      } else if (key == "seed") {
        spec.seed = value.get<std::uint64_t>();
      } else if (key == "num_robots") {
        spec.num_robots = value.get<std::size_t>();
      } else if (key == "targets") {
        if (value.is_number()) {
          spec.targets_min = spec.targets_max = value.get<std::size_t>();
        } else {
          spec.targets_min = value.at("min").get<std::size_t>();
          spec.targets_max = value.at("max").get<std::size_t>();
        }
      } else if (key == "alphas") {
        spec.alphas = value.get<std::vector<std::size_t>>();
      } else if (key == "alpha") {
        spec.alphas = {value.get<std::size_t>()};
      } else if (key == "fov_side") {
        spec.fov_side = value.get<double>();
      } else if (key == "fly_length") {
        spec.fly_length = value.get<double>();
      } else if (key == "arena") {
        spec.arena = {value.at("x_min").get<double>(), value.at("x_max").get<double>(),
                      value.at("y_min").get<double>(), value.at("y_max").get<double>()};
      } else if (key == "objective") {
        const auto o = value.get<std::string>();
        if (o == "coverage") spec.objective = OneStepObjective::kCoverage;
        else if (o == "expected_detections") spec.objective = OneStepObjective::kExpected;
        else throw ArgumentError("unknown objective '" + o + "'");
      } else if (key == "belief_std") {
        spec.belief_std = value.get<double>();
      } else if (key == "rounds") {
        spec.sim.rounds = value.get<std::size_t>();
      } else if (key == "measurement_std") {
        spec.sim.measurement_std = value.get<double>();
      } else if (key == "process_var") {
        spec.sim.process_var = value.get<double>();
      } else if (key == "initial_var") {
        spec.sim.initial_var = value.get<double>();
      } else if (key == "target_speed") {
        spec.sim.target_speed = value.get<double>();
      } else if (key == "velocity_perturb_std") {
        spec.sim.velocity_perturb_std = value.get<double>();
      } else {
        throw ArgumentError("invalid experiment spec: unknown field '" + key + "'");
      }
    } catch (const ArgumentError& e) {
      if (std::string(e.what()).starts_with("invalid experiment spec")) throw;
      throw field_error(key, e);
    } catch (const nlohmann::json::exception& e) {
      throw field_error(key, e);
    }
  }
  spec.validate();
  return spec;
}

inline ExperimentSpec load_experiment_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open spec file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError("spec file '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_experiment_spec(j);
}

// ---------------------------------------------------------------------------
// Records and CSV.

inline constexpr std::string_view kCsvVersionLine = "# rtt-records v1";
inline constexpr std::string_view kCsvHeader =
    "trial,round,planner,attacker,objective,m,alpha,f_full,f_attacked,"
    "attack_rate,truth_full,truth_attacked,oracle_calls,wall_time_micros,seed";
inline constexpr std::string_view kCsvCompletePrefix = "# complete rows=";

struct RecordRow {
  std::size_t trial = 0;
  std::size_t round = 0;
  std::string planner;
  std::string attacker;
  std::string objective;
  std::size_t m = 0;
  std::size_t alpha = 0;
  double f_full = 0.0;
  double f_attacked = 0.0;
  double attack_rate = 0.0;
  std::size_t truth_full = 0;
  std::size_t truth_attacked = 0;
  std::size_t oracle_calls = 0;
  std::int64_t wall_time_micros = 0;
  std::uint64_t seed = 0;
};

// Shortest round-trip decimal form.
inline std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline void write_row(std::ostream& os, const RecordRow& r) {
  os << r.trial << ',' << r.round << ',' << r.planner << ',' << r.attacker
     << ',' << r.objective << ',' << r.m << ',' << r.alpha << ','
     << format_double(r.f_full) << ',' << format_double(r.f_attacked) << ','
     << format_double(r.attack_rate) << ',' << r.truth_full << ','
     << r.truth_attacked << ',' << r.oracle_calls << ',' << r.wall_time_micros
     << ',' << r.seed << '\n';
}

inline void write_csv(std::ostream& os, const std::vector<RecordRow>& rows) {
  os << kCsvVersionLine << '\n' << kCsvHeader << '\n';
  for (const auto& r : rows) write_row(os, r);
  os << kCsvCompletePrefix << rows.size() << '\n';
}

inline std::string to_csv(const std::vector<RecordRow>& rows) {
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

namespace detail {

template <typename T>
T parse_number(const std::string& cell, const char* column, std::size_t line) {
  T value{};
  const char* end = cell.data() + cell.size();
  auto res = std::from_chars(cell.data(), end, value);
  if (res.ec != std::errc() || res.ptr != end) {
    throw ParseError(std::string("bad value '") + cell + "' in column " + column, line);
  }
  return value;
}

}  // namespace detail

// Parses a complete record file; rejects missing/foreign headers, malformed
// rows, and files without the trailing completeness marker.
inline std::vector<RecordRow> parse_csv(std::istream& in) {
  std::vector<RecordRow> rows;
  std::string text;
  std::size_t line_no = 0;
  bool complete = false;
  auto next = [&]() -> bool {
    if (!std::getline(in, text)) return false;
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    return true;
  };
  if (!next() || text != kCsvVersionLine) {
    throw ParseError("missing schema line '" + std::string(kCsvVersionLine) + "'", line_no);
  }
  if (!next() || text != kCsvHeader) {
    throw ParseError("header row does not match the v1 schema", line_no);
  }
  while (next()) {
    if (complete) throw ParseError("data after completeness marker", line_no);
    if (text.starts_with(kCsvCompletePrefix)) {
      const auto n = detail::parse_number<std::size_t>(
          text.substr(kCsvCompletePrefix.size()), "rows", line_no);
      if (n != rows.size()) {
        throw ParseError("completeness marker says " + std::to_string(n) +
                             " rows, found " + std::to_string(rows.size()),
                         line_no);
      }
      complete = true;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!text.empty() && text.back() == ',') cells.emplace_back();
    if (cells.size() != 15) {
      throw ParseError("expected 15 columns, found " + std::to_string(cells.size()), line_no);
    }
    RecordRow r;
    using detail::parse_number;
    r.trial = parse_number<std::size_t>(cells[0], "trial", line_no);
    r.round = parse_number<std::size_t>(cells[1], "round", line_no);
    r.planner = cells[2];
    r.attacker = cells[3];
    r.objective = cells[4];
    if (r.planner.empty() || r.attacker.empty()) {
      throw ParseError("empty planner or attacker", line_no);
    }
    r.m = parse_number<std::size_t>(cells[5], "m", line_no);
    r.alpha = parse_number<std::size_t>(cells[6], "alpha", line_no);
    r.f_full = parse_number<double>(cells[7], "f_full", line_no);
    r.f_attacked = parse_number<double>(cells[8], "f_attacked", line_no);
    r.attack_rate = parse_number<double>(cells[9], "attack_rate", line_no);
    r.truth_full = parse_number<std::size_t>(cells[10], "truth_full", line_no);
    r.truth_attacked = parse_number<std::size_t>(cells[11], "truth_attacked", line_no);
    r.oracle_calls = parse_number<std::size_t>(cells[12], "oracle_calls", line_no);
    r.wall_time_micros = parse_number<std::int64_t>(cells[13], "wall_time_micros", line_no);
    r.seed = parse_number<std::uint64_t>(cells[14], "seed", line_no);
    rows.push_back(std::move(r));
  }
  if (!complete) throw ParseError("missing completeness marker; file is partial", line_no);
  return rows;
}

inline std::vector<RecordRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

// ---------------------------------------------------------------------------
// Protocol drivers.

struct RunOptions {
  std::size_t jobs = 1;
  // Off: wall_time_micros is written as 0 so output is byte-reproducible.
  bool record_wall_time = true;
};

namespace detail {

// Runs trial_fn(i) for i in [0, trials) on `jobs` threads and concatenates
// the per-trial row buffers in trial order.
template <typename TrialFn>
std::vector<RecordRow> run_trials(std::size_t trials, std::size_t jobs,
                                  TrialFn&& trial_fn) {
  std::vector<std::vector<RecordRow>> per_trial(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
      try {
        per_trial[i] = trial_fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, trials));
  std::vector<std::thread> pool;
  for (std::size_t k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<RecordRow> rows;
  for (auto& buf : per_trial) {
    rows.insert(rows.end(), std::make_move_iterator(buf.begin()),
                std::make_move_iterator(buf.end()));
  }
  return rows;
}

}  // namespace detail

// A random one-step instance: robots and targets uniform in the arena.
struct OneStepInstance {
  std::vector<Point2> targets;
  RoundWorld world;
};

inline OneStepInstance sample_one_step_instance(const ExperimentSpec& spec,
                                                std::size_t m, Rng& rng) {
  std::vector<Point2> robots(spec.num_robots);
  for (auto& p : robots) p = uniform_point(spec.arena, rng);
  std::vector<Point2> targets(m);
  for (auto& p : targets) p = uniform_point(spec.arena, rng);
  return {std::move(targets), build_round_world(robots, spec.fov_side, spec.fly_length)};
}

// One round on static targets. Trial i has seed derive_seed(master, i). The
// instance for (trial, m) is drawn from derive_seed(world stream, m), so it
// is shared across alphas, planners and attackers.
inline std::vector<RecordRow> run_one_step_suite(const ExperimentSpec& spec,
                                                 const RunOptions& options = {}) {
  spec.validate();
  const std::string objective_name =
      spec.objective == OneStepObjective::kCoverage ? "coverage" : "expected_detections";
  return detail::run_trials(spec.trials, options.jobs, [&](std::size_t trial) {
    const std::uint64_t trial_seed = derive_seed(spec.seed, trial);
    const std::uint64_t world_seed = derive_seed(trial_seed, std::uint64_t(Stream::kWorld));
    const std::uint64_t planner_seed = derive_seed(trial_seed, std::uint64_t(Stream::kPlanner));
    const std::uint64_t attacker_seed = derive_seed(trial_seed, std::uint64_t(Stream::kAttacker));
    std::vector<RecordRow> rows;
    for (std::size_t m = spec.targets_min; m <= spec.targets_max; ++m) {
      Rng world_rng(derive_seed(world_seed, m));
      const OneStepInstance inst = sample_one_step_instance(spec, m, world_rng);
      Objective f = make_coverage_objective(inst.targets, inst.world.rects);
      if (spec.objective == OneStepObjective::kExpected) {
        const auto fixes = measure(
            [&] {
              std::vector<TargetTrack> t(inst.targets.size());
              for (std::size_t j = 0; j < t.size(); ++j) t[j].true_position = inst.targets[j];
              return t;
            }(),
            spec.belief_std, world_rng);
        std::vector<GaussianTargetBelief> beliefs;
        for (std::size_t j = 0; j < fixes.size(); ++j) {
          beliefs.push_back({static_cast<int>(j), fixes[j], spec.belief_std, spec.belief_std});
        }
        f = make_expected_detections_objective(std::move(beliefs), inst.world.rects);
      }
      for (std::size_t alpha : spec.alphas) {
        for (std::size_t p = 0; p < spec.planners.size(); ++p) {
          const std::uint64_t cell = (m * 64 + alpha) * 16 + p;
          Rng planner_rng(derive_seed(planner_seed, cell));
          Rng attacker_rng(derive_seed(attacker_seed, cell));
          const auto t0 = std::chrono::steady_clock::now();
          const PlanResult plan =
              run_planner(spec.planners[p], inst.world.matroid, f, alpha, planner_rng);
          const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
          const double full = f(plan.selected);
          const std::size_t truth_full =
              coverage_count(inst.targets, inst.world.rects, plan.selected);
          for (AttackerKind a : spec.attackers) {
            const AttackResult attack = run_attack(a, f, plan.selected, alpha, attacker_rng);
            RecordRow r;
            r.trial = trial;
            r.round = 0;
            r.planner = std::string(to_string(spec.planners[p]));
            r.attacker = std::string(to_string(a));
            r.objective = objective_name;
            r.m = m;
            r.alpha = alpha;
            r.f_full = full;
            r.f_attacked = attack.surviving_value;
            r.attack_rate = relative_loss(full, attack.surviving_value);
            r.truth_full = truth_full;
            r.truth_attacked = coverage_count(inst.targets, inst.world.rects,
                                              plan.selected.difference(attack.removed));
            r.oracle_calls = plan.oracle_calls;
            r.wall_time_micros = options.record_wall_time ? micros : 0;
            r.seed = trial_seed;
            rows.push_back(std::move(r));
          }
        }
      }
    }
    return rows;
  });
}

// Multi-round runs; every planner in a run sees the same targets and noise.
inline std::vector<RecordRow> run_multi_round_suite(const ExperimentSpec& spec,
                                                    const RunOptions& options = {}) {
  spec.validate();
  return detail::run_trials(spec.trials, options.jobs, [&](std::size_t trial) {
    const std::uint64_t trial_seed = derive_seed(spec.seed, trial);
    std::vector<RecordRow> rows;
    for (std::size_t alpha : spec.alphas) {
      for (const RoundRecord& rec : run_rounds(spec.sim_config(alpha, trial_seed))) {
        RecordRow r;
        r.trial = trial;
        r.round = rec.round;
        r.planner = std::string(to_string(rec.planner));
        r.attacker = std::string(to_string(rec.attacker));
        r.objective = "expected_detections";
        r.m = spec.targets_min;
        r.alpha = alpha;
        r.f_full = rec.f_full;
        r.f_attacked = rec.f_attacked;
        r.attack_rate = rec.attack_rate;
        r.truth_full = rec.truth_full;
        r.truth_attacked = rec.truth_attacked;
        r.oracle_calls = rec.oracle_calls;
        r.wall_time_micros = options.record_wall_time ? rec.wall_time_micros : 0;
        r.seed = trial_seed;
        rows.push_back(std::move(r));
      }
    }
    return rows;
  });
}

inline std::vector<RecordRow> run_experiment(const ExperimentSpec& spec,
                                             const RunOptions& options = {}) {
  return spec.protocol == Protocol::kOneStep ? run_one_step_suite(spec, options)
                                             : run_multi_round_suite(spec, options);
}

// ---------------------------------------------------------------------------
// Summaries.

struct Stats {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation; 0 for a single value
};

// Values are sorted before summation so the result does not depend on input
// order.
inline Stats compute_stats(std::vector<double> values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

struct SummaryCell {
  std::string planner;
  std::string attacker;
  std::size_t m = 0;
  std::size_t alpha = 0;
  Stats f_attacked;
  Stats f_full;
  Stats attack_rate;
};

struct SummaryDiff {
  std::string attacker;
  std::size_t m = 0;
  std::size_t alpha = 0;
  std::string baseline;  // "greedy" or "brute-force"
  double mean_difference = 0.0;  // mean(resilient) - mean(baseline), f_attacked
};

struct Summary {
  std::vector<SummaryCell> cells;
  std::vector<SummaryDiff> diffs;
};

inline Summary summarize(const std::vector<RecordRow>& rows) {
  using Key = std::tuple<std::string, std::string, std::size_t, std::size_t>;
  struct Acc {
    std::vector<double> attacked, full, rate;
  };
  std::map<Key, Acc> groups;
  for (const auto& r : rows) {
    auto& g = groups[{r.planner, r.attacker, r.m, r.alpha}];
    g.attacked.push_back(r.f_attacked);
    g.full.push_back(r.f_full);
    g.rate.push_back(r.attack_rate);
  }
  Summary out;
  std::map<Key, double> mean_of;
  for (auto& [key, acc] : groups) {
    SummaryCell c{std::get<0>(key), std::get<1>(key), std::get<2>(key),
                  std::get<3>(key), compute_stats(acc.attacked),
                  compute_stats(acc.full), compute_stats(acc.rate)};
    mean_of[key] = c.f_attacked.mean;
    out.cells.push_back(std::move(c));
  }
  for (const auto& [key, mean] : mean_of) {
    if (std::get<0>(key) != "resilient") continue;
    for (const char* baseline : {"greedy", "brute-force"}) {
      auto it = mean_of.find({baseline, std::get<1>(key), std::get<2>(key), std::get<3>(key)});
      if (it == mean_of.end()) continue;
      out.diffs.push_back({std::get<1>(key), std::get<2>(key), std::get<3>(key),
                           baseline, mean - it->second});
    }
  }
  return out;
}

inline void write_summary(std::ostream& os, const Summary& s) {
  os << "planner,attacker,m,alpha,count,f_attacked_mean,f_attacked_std,"
        "f_full_mean,f_full_std,attack_rate_mean,attack_rate_std\n";
  for (const auto& c : s.cells) {
    os << c.planner << ',' << c.attacker << ',' << c.m << ',' << c.alpha << ','
       << c.f_attacked.count << ',' << format_double(c.f_attacked.mean) << ','
       << format_double(c.f_attacked.std) << ',' << format_double(c.f_full.mean)
       << ',' << format_double(c.f_full.std) << ','
       << format_double(c.attack_rate.mean) << ','
       << format_double(c.attack_rate.std) << '\n';
  }
  os << '\n' << "attacker,m,alpha,baseline,resilient_minus_baseline\n";
  for (const auto& d : s.diffs) {
    os << d.attacker << ',' << d.m << ',' << d.alpha << ',' << d.baseline << ','
       << format_double(d.mean_difference) << '\n';
  }
}

}  // namespace rtt
