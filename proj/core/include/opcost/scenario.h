// Copyright 2026 The opcost Authors
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

// Deterministic synthetic instances: clinic scheduling, property purchase,
// call-center staffing and a small bilinear game.

#ifndef OPCOST_SCENARIO_H_
#define OPCOST_SCENARIO_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "opcost/model.h"
#include "opcost/problems.h"
#include "opcost/simultaneous.h"

namespace opcost {

enum class ScenarioKind { kScheduling, kHousing, kCallCenter, kRoDemo };

std::string_view ScenarioKindName(ScenarioKind kind);
ScenarioKind ParseScenarioKind(std::string_view name);

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::kScheduling;
  int n_train = 0;        // 0 selects the scenario default
  int n_test = 0;         // 0 selects the scenario default
  double noise = -1.0;    // negative selects the scenario default
  std::uint64_t seed = 1;

  void Validate() const;
};

struct Scenario {
  Dataset train;
  Dataset test;
  UnlabeledSet unlabeled;
  OpCostProblem problem;
  Vector true_beta;
  // Settings the scenario was designed around.
  double c2 = 0.0;
  double c1_ceiling = 1.0;
  Bias bias = Bias::kOptimistic;
};

Scenario GenerateScenario(const ScenarioSpec& spec);

}  // namespace opcost

#endif  // OPCOST_SCENARIO_H_
