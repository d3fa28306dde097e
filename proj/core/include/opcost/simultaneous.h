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

// Fitting with an operational-cost term: the objective is
//   loss(beta) + C2 ||beta||^2 + s * C1 * (optimal inner value at beta)
// where s = +1 for (min-cost, optimistic) and (max-value, pessimistic), and
// s = -1 for the other two pairings.

#ifndef OPCOST_SIMULTANEOUS_H_
#define OPCOST_SIMULTANEOUS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opcost/model.h"
#include "opcost/nelder_mead.h"
#include "opcost/problems.h"

namespace opcost {

enum class Bias { kOptimistic, kPessimistic };

std::string_view BiasName(Bias bias);

// The signed coefficient s described above.
int BiasSign(Bias bias, InnerSense sense);

struct SimultaneousConfig {
  double c1 = 0.0;
  double c2 = 0.0;
  Bias bias = Bias::kOptimistic;
  OpCostProblem problem;

  void Validate() const;
};

double ObjectiveValue(const Vector& beta, const Dataset& data,
                      const UnlabeledSet& unlabeled, const SimultaneousConfig& config);

struct FitResult {
  LinearModel model;
  PolicySolution policy;
  double objective = 0.0;
  bool converged = false;
};

// Step 1 minimizes ObjectiveValue by multi-start Nelder-Mead (the ridge
// solution is always one of the starts); step 2 re-solves the inner problem at
// the fitted beta. `extra_starts` are additional Nelder-Mead starting points.
FitResult FitSimultaneous(const Dataset& data, const UnlabeledSet& unlabeled,
                          const SimultaneousConfig& config, const NelderMeadConfig& nm,
                          const std::vector<Vector>& extra_starts = {});

// FitSimultaneous with C1 = 0. The inner problem is never consulted.
LinearModel FitSequential(const Dataset& data, double c2, const NelderMeadConfig& nm);

struct SweepRow {
  double c1 = 0.0;
  Vector beta;
  double opcost = 0.0;
  double train_loss = 0.0;
  double penalized_objective = 0.0;  // train_loss + C2 ||beta||^2
  double r2_train = 0.0;
  std::optional<double> r2_test;
  bool converged = false;
  std::string error;  // non-empty when this grid point failed
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double cost_range = 0.0;           // max - min opcost over successful rows
  double relative_cost_range = 0.0;  // cost_range / |opcost at the first row|
  double r2_train_range = 0.0;
};

struct SweepOptions {
  bool warm_start = true;
  const Dataset* test = nullptr;
};

SweepResult SweepC1(const Dataset& data, const UnlabeledSet& unlabeled,
                    const std::vector<double>& c1_grid, double c2, Bias bias,
                    const OpCostProblem& problem, const NelderMeadConfig& nm,
                    const SweepOptions& options = {});

// 0 followed by `points - 1` log-spaced values from ceiling * 1e-3 to ceiling.
std::vector<double> DefaultC1Grid(double ceiling, int points = 21);

}  // namespace opcost

#endif  // OPCOST_SIMULTANEOUS_H_
