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

// Command-line harness:
//   rtt run --spec <file> --out <csv> [--seed N] [--jobs N] [--no-wall-time]
//   rtt summarize --in <csv>
//   rtt check --suite {bounds|properties}

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rtt/acceptance.hpp"
#include "rtt/experiment.hpp"

namespace {

int run_command(const std::string& spec_path, const std::string& out_path,
                std::optional<std::uint64_t> seed, std::size_t jobs,
                bool no_wall_time) {
  rtt::ExperimentSpec spec = rtt::load_experiment_spec(spec_path);
  if (seed) spec.seed = *seed;
  rtt::RunOptions options;
  options.jobs = jobs;
  options.record_wall_time = !no_wall_time;
  const auto rows = rtt::run_experiment(spec, options);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  rtt::write_csv(out, rows);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return 1;
  }
  rtt::write_summary(std::cout, rtt::summarize(rows));
  return 0;
}

int summarize_command(const std::string& in_path) {
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << in_path << "'\n";
    return 1;
  }
  rtt::write_summary(std::cout, rtt::summarize(rtt::parse_csv(in)));
  return 0;
}

int check_command(const std::string& suite) {
  const auto results = suite == "bounds" ? rtt::acceptance::run_bounds_suite()
                                         : rtt::acceptance::run_properties_suite();
  bool ok = true;
  for (const auto& r : results) {
    rtt::acceptance::print(std::cout, r);
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resilient multi-robot target tracking experiments"};
  app.require_subcommand(1);

  std::string spec_path, out_path, in_path, suite;
  std::optional<std::uint64_t> seed;
  std::size_t jobs = 1;
  bool no_wall_time = false;

  auto* run = app.add_subcommand("run", "Run an experiment spec and write records as CSV");
  run->add_option("--spec", spec_path, "Experiment spec (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_path, "Output CSV path")->required();
  run->add_option("--seed", seed, "Override the spec's master seed");
  run->add_option("--jobs", jobs, "Worker threads for trials")->check(CLI::PositiveNumber);
  run->add_flag("--no-wall-time", no_wall_time, "Write 0 in the wall_time_micros column");

  auto* summarize = app.add_subcommand("summarize", "Summarize a record CSV");
  summarize->add_option("--in", in_path, "Record CSV")->required();

  auto* check = app.add_subcommand("check", "Run an acceptance suite");
  check->add_option("--suite", suite, "bounds or properties")
      ->required()
      ->check(CLI::IsMember({"bounds", "properties"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return run_command(spec_path, out_path, seed, jobs, no_wall_time);
    if (*summarize) return summarize_command(in_path);
    if (*check) return check_command(suite);
  } catch (const rtt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
