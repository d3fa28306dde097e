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

#include "opcost/scenario.h"

#include <gtest/gtest.h>

#include <sstream>

#include "opcost/error.h"
#include "opcost/io.h"
#include "opcost/simultaneous.h"

namespace opcost {
namespace {

std::string Serialize(const Scenario& s) {
  std::ostringstream out;
  WriteTable(out, DatasetTable(s.train));
  WriteTable(out, DatasetTable(s.test));
  WriteTable(out, UnlabeledTable(s.unlabeled));
  return out.str();
}

TEST(ScenarioTest, DeterministicBySeed) {
  for (ScenarioKind kind : {ScenarioKind::kScheduling, ScenarioKind::kHousing,
                            ScenarioKind::kCallCenter, ScenarioKind::kRoDemo}) {
    ScenarioSpec spec;
    spec.kind = kind;
    spec.seed = 42;
    EXPECT_EQ(Serialize(GenerateScenario(spec)), Serialize(GenerateScenario(spec)))
        << ScenarioKindName(kind);
    ScenarioSpec other = spec;
    other.seed = 43;
    EXPECT_NE(Serialize(GenerateScenario(spec)), Serialize(GenerateScenario(other)));
  }
}

TEST(ScenarioTest, SchedulingShape) {
  const Scenario s = GenerateScenario({ScenarioKind::kScheduling, 0, 0, -1.0, 1});
  EXPECT_EQ(s.train.p(), 2);
  EXPECT_EQ(s.unlabeled.m(), 6);
  EXPECT_EQ(s.problem.kind(), ProblemKind::kScheduling);
}

TEST(ScenarioTest, NoiselessSchedulingRecoversTruth) {
  const Scenario s = GenerateScenario({ScenarioKind::kScheduling, 0, 0, 0.0, 3});
  const LinearModel fit = FitSequential(s.train, 0.0, NelderMeadConfig{});
  EXPECT_LT((fit.beta - s.true_beta).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(ScenarioTest, HousingKnapsackHasSixItemsCapacityThree) {
  const Scenario s = GenerateScenario({ScenarioKind::kHousing, 0, 0, -1.0, 1});
  EXPECT_EQ(s.train.p(), 13);
  const auto& spec = std::get<KnapsackSpec>(s.problem.spec);
  EXPECT_EQ(spec.fixed_costs.size(), 6);
  EXPECT_EQ(spec.capacity, 3);
  EXPECT_EQ(s.unlabeled.m(), 6);
}

TEST(ScenarioTest, CallCenterShape) {
  const Scenario s = GenerateScenario({ScenarioKind::kCallCenter, 0, 0, -1.0, 1});
  EXPECT_EQ(s.train.p(), 36);
  EXPECT_EQ(s.unlabeled.m(), 24);
  EXPECT_EQ(std::get<StaffingSpec>(s.problem.spec).coverage.rows(), 24);
}

TEST(ScenarioTest, InvalidSizesRejected) {
  EXPECT_THROW(GenerateScenario({ScenarioKind::kScheduling, -3, 0, -1.0, 1}), Error);
  EXPECT_THROW(ParseScenarioKind("boston"), Error);
}

}  // namespace
}  // namespace opcost
