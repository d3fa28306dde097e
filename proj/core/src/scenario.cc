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

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "opcost/error.h"
#include "opcost/random.h"

namespace opcost {

std::string_view ScenarioKindName(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kScheduling:
      return "scheduling";
    case ScenarioKind::kHousing:
      return "housing";
    case ScenarioKind::kCallCenter:
      return "callcenter";
    case ScenarioKind::kRoDemo:
      return "ro-demo";
  }
  return "unknown";
}

ScenarioKind ParseScenarioKind(std::string_view name) {
  for (ScenarioKind kind : {ScenarioKind::kScheduling, ScenarioKind::kHousing,
                            ScenarioKind::kCallCenter, ScenarioKind::kRoDemo}) {
    if (name == ScenarioKindName(kind)) return kind;
  }
  Fail(ErrorCode::kInvalidInput, "unknown scenario '" + std::string(name) + "'");
}

void ScenarioSpec::Validate() const {
  Require(n_train >= 0 && n_test >= 0, ErrorCode::kInvalidInput,
          "sample sizes must be nonnegative");
  Require(std::isfinite(noise), ErrorCode::kInvalidInput, "noise must be finite");
}

namespace {

struct Sizes {
  int n_train;
  int n_test;
  double noise;
};

Sizes Resolve(const ScenarioSpec& spec, int n_train, int n_test, double noise) {
  return {spec.n_train > 0 ? spec.n_train : n_train, spec.n_test > 0 ? spec.n_test : n_test,
          spec.noise >= 0.0 ? spec.noise : noise};
}

Dataset Label(Matrix X, const Vector& beta, double noise, Rng& rng,
              std::vector<std::string> names) {
  Vector y = X * beta;
  for (Eigen::Index i = 0; i < y.size(); ++i) y(i) += noise * rng.Normal();
  return Dataset::Make(std::move(X), std::move(y), std::move(names));
}

// Two strongly correlated workload features on the training side; the
// unlabeled activities mix them in varying proportions, so the poorly
// identified direction of beta moves the makespan.
Scenario Scheduling(const ScenarioSpec& spec) {
  const Sizes s = Resolve(spec, 40, 40, 0.5);
  Rng rng(spec.seed);
  Scenario out;
  out.true_beta = Vector(2);
  out.true_beta << 0.5, 0.5;
  auto sample = [&](int n) {
    Matrix X(n, 2);
    for (int i = 0; i < n; ++i) {
      const double load = rng.Uniform(2.0, 8.0);
      X(i, 0) = load;
      X(i, 1) = load * rng.Uniform(0.9, 1.1);
    }
    return X;
  };
  const std::vector<std::string> names = {"new_patients", "current_patients"};
  out.train = Label(sample(s.n_train), out.true_beta, s.noise, rng, names);
  out.test = Label(sample(s.n_test), out.true_beta, s.noise, rng, names);
  Matrix unlabeled(6, 2);
  for (int i = 0; i < 6; ++i) {
    unlabeled(i, 0) = rng.Uniform(1.0, 7.0);
    unlabeled(i, 1) = rng.Uniform(1.0, 7.0);
  }
  out.unlabeled = UnlabeledSet::Make(std::move(unlabeled));
  out.problem.spec = PrecedenceDag::ClinicExample();
  out.c2 = 1.0;
  out.c1_ceiling = 2.0;
  out.bias = Bias::kOptimistic;
  return out;
}

// Thirteen positive property attributes; six candidate properties with
// remodeling costs, three of which are bought.
Scenario Housing(const ScenarioSpec& spec) {
  const Sizes s = Resolve(spec, 200, 100, 1.0);
  Rng rng(spec.seed);
  Scenario out;
  out.true_beta = Vector(13);
  for (int j = 0; j < 13; ++j) out.true_beta(j) = rng.Uniform(-1.0, 3.0);
  auto sample = [&](int n) {
    Matrix X(n, 13);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < 13; ++j) X(i, j) = rng.Uniform(0.0, 2.0);
    }
    return X;
  };
  std::vector<std::string> names;
  for (int j = 0; j < 13; ++j) names.push_back("attr" + std::to_string(j + 1));
  out.train = Label(sample(s.n_train), out.true_beta, s.noise, rng, names);
  out.test = Label(sample(s.n_test), out.true_beta, s.noise, rng, names);
  out.unlabeled = UnlabeledSet::Make(sample(6));
  KnapsackSpec knapsack;
  knapsack.fixed_costs = Vector(6);
  for (int i = 0; i < 6; ++i) knapsack.fixed_costs(i) = -rng.Uniform(1.0, 4.0);
  knapsack.capacity = 3;
  out.problem.spec = knapsack;
  out.c2 = 1.0;
  out.c1_ceiling = 5.0;
  out.bias = Bias::kPessimistic;
  return out;
}

// 36 features: intercept, 6 weekday indicators, 23 half-hour period
// indicators, holiday, billing day, trend and 3 pure-noise columns. Labels
// model the square root of the arrival rate, so staffing demand is the
// squared prediction.
Scenario CallCenter(const ScenarioSpec& spec) {
  const Sizes s = Resolve(spec, 600, 300, 0.2);
  Rng rng(spec.seed);
  Scenario out;
  out.true_beta = Vector::Zero(36);
  out.true_beta(0) = 2.0;
  for (int d = 0; d < 6; ++d) out.true_beta(1 + d) = rng.Uniform(-0.3, 0.3);
  for (int t = 1; t < 24; ++t) {
    out.true_beta(6 + t) = 1.5 * std::sin(std::numbers::pi * t / 24.0);
  }
  out.true_beta(30) = -0.8;  // holiday
  out.true_beta(31) = 0.5;   // billing day
  out.true_beta(32) = 0.3;   // trend
  auto row = [&](int weekday, int period, bool holiday, bool billing, double trend) {
    Vector x = Vector::Zero(36);
    x(0) = 1.0;
    if (weekday > 0) x(weekday) = 1.0;  // weekday 0 is the baseline
    if (period > 0) x(6 + period) = 1.0;
    x(30) = holiday ? 1.0 : 0.0;
    x(31) = billing ? 1.0 : 0.0;
    x(32) = trend;
    for (int k = 0; k < 3; ++k) x(33 + k) = rng.Normal();
    return x;
  };
  auto sample = [&](int n) {
    Matrix X(n, 36);
    for (int i = 0; i < n; ++i) {
      const int weekday = static_cast<int>(rng.Below(7));
      const int period = static_cast<int>(rng.Below(24));
      const bool holiday = rng.Uniform() < 0.05;
      const bool billing = rng.Uniform() < 0.2;
      X.row(i) = row(weekday, period, holiday, billing, rng.Uniform()).transpose();
    }
    return X;
  };
  std::vector<std::string> names = {"intercept"};
  for (int d = 1; d <= 6; ++d) names.push_back("weekday" + std::to_string(d));
  for (int t = 1; t < 24; ++t) names.push_back("period" + std::to_string(t));
  for (const char* n : {"holiday", "billing", "trend", "noise1", "noise2", "noise3"}) {
    names.push_back(n);
  }
  out.train = Label(sample(s.n_train), out.true_beta, s.noise, rng, names);
  out.test = Label(sample(s.n_test), out.true_beta, s.noise, rng, names);
  Matrix day(24, 36);
  for (int t = 0; t < 24; ++t) day.row(t) = row(3, t, false, true, 1.0).transpose();
  out.unlabeled = UnlabeledSet::Make(std::move(day));
  out.problem.spec = StaffingSpec::CallCenter();
  out.c2 = 1.0;
  out.c1_ceiling = 2.0;
  out.bias = Bias::kOptimistic;
  return out;
}

// Two features, three policy vertices. The first vertex is cheapest for
// every beta near the data, so the game has a pure saddle point.
Scenario RoDemo(const ScenarioSpec& spec) {
  const Sizes s = Resolve(spec, 30, 30, 0.3);
  Rng rng(spec.seed);
  Scenario out;
  out.true_beta = Vector(2);
  out.true_beta << 1.0, -0.5;
  auto sample = [&](int n) {
    Matrix X(n, 2);
    for (int i = 0; i < n; ++i) {
      X(i, 0) = rng.Normal();
      X(i, 1) = rng.Normal();
    }
    return X;
  };
  out.train = Label(sample(s.n_train), out.true_beta, s.noise, rng, {"u", "v"});
  out.test = Label(sample(s.n_test), out.true_beta, s.noise, rng, {"u", "v"});
  Matrix unlabeled(3, 2);
  unlabeled << 1.0, 0.5, 0.5, 1.0, -0.5, 0.8;
  out.unlabeled = UnlabeledSet::Make(std::move(unlabeled));
  BilinearSpec game;
  game.costs = Vector(3);
  game.costs << 0.0, 5.0, 5.0;
  game.policy_set = PolicySetKind::kSimplex;
  out.problem.spec = game;
  out.c2 = 1.0;
  out.c1_ceiling = 1.0;
  out.bias = Bias::kPessimistic;
  return out;
}

}  // namespace

Scenario GenerateScenario(const ScenarioSpec& spec) {
  spec.Validate();
  switch (spec.kind) {
    case ScenarioKind::kScheduling:
      return Scheduling(spec);
    case ScenarioKind::kHousing:
      return Housing(spec);
    case ScenarioKind::kCallCenter:
      return CallCenter(spec);
    case ScenarioKind::kRoDemo:
      return RoDemo(spec);
  }
  Fail(ErrorCode::kInternal, "unknown scenario kind");
}

}  // namespace opcost
