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

#include "rtt/adversary.hpp"
#include "rtt/analysis.hpp"
#include "rtt/errors.hpp"
#include "rtt/experiment.hpp"
#include "rtt/geometry.hpp"
#include "rtt/matroid.hpp"
#include "rtt/objective.hpp"
#include "rtt/planner.hpp"
#include "rtt/rng.hpp"
#include "rtt/simulation.hpp"
