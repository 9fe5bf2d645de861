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

#include <cstdint>
#include <random>

namespace rtt {

using Rng = std::mt19937_64;

// SplitMix64 finalizer. Used only to derive independent stream seeds; the
// streams themselves are Mersenne Twister engines.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Seed of stream `index` under `parent`:
//   derive_seed(parent, index) = splitmix64(splitmix64(parent) ^ (index + 1))
// Trial i of a run with master seed M uses derive_seed(M, i), so adding
// trials never perturbs the streams of earlier ones.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  return splitmix64(splitmix64(parent) ^ (index + 1));
}

// Purpose tags for sub-streams within a trial.
enum class Stream : std::uint64_t {
  kWorld = 0,     // robot/target placement, target motion, measurement noise
  kPlanner = 1,   // random planner
  kAttacker = 2,  // random attacker
};

inline Rng make_rng(std::uint64_t trial_seed, Stream purpose) {
  return Rng(derive_seed(trial_seed, static_cast<std::uint64_t>(purpose)));
}

}  // namespace rtt
