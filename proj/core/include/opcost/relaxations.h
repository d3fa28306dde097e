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

// Outer relaxations of operational-cost budgets. Each routine turns the
// statement "the optimal inner cost at beta is at most alpha" into a
// constraint that every such beta also satisfies.

#ifndef OPCOST_RELAXATIONS_H_
#define OPCOST_RELAXATIONS_H_

#include <cstdint>
#include <vector>

#include "opcost/model.h"
#include "opcost/problems.h"

namespace opcost {

// z^T beta <= alpha.
struct LinearConstraintOnBeta {
  Vector z;
  double alpha = 0.0;

  bool Satisfied(const Vector& beta, double slack = 0.0) const {
    return z.dot(beta) <= alpha + slack;
  }
};

// beta^T Q beta <= bound.
struct QuadraticConstraintOnBeta {
  Matrix Q;
  double bound = 0.0;

  bool Satisfied(const Vector& beta, double slack = 0.0) const {
    return beta.dot(Q * beta) <= bound + slack;
  }
};

// Number of source-to-sink paths; saturates at `cap` + 1.
std::int64_t CountDagPaths(const PrecedenceDag& dag, std::int64_t cap);

// Every source-to-sink path as a list of edge indices. Throws kTooLarge when
// there are more than `max_paths` paths.
std::vector<std::vector<int>> EnumerateDagPaths(const PrecedenceDag& dag,
                                                std::int64_t max_paths);

// Averages the path-length constraints over all paths: the makespan is at
// least the mean path length, which is linear in beta.
LinearConstraintOnBeta RelaxSchedulingConstraint(const PrecedenceDag& dag,
                                                 const UnlabeledSet& unlabeled,
                                                 double alpha);

// Evaluates the knapsack objective at the fractional selection
// pi_i = min(1/2, capacity/m), a lower bound on the optimal value.
LinearConstraintOnBeta RelaxKnapsackConstraint(const KnapsackSpec& spec,
                                               const UnlabeledSet& unlabeled,
                                               double alpha);

// Uses the dual-feasible weights w_i = 1 / (longest shift length) to bound the
// staffing optimum from below by a quadratic form in beta.
QuadraticConstraintOnBeta RelaxStaffingConstraint(const StaffingSpec& spec,
                                                  const UnlabeledSet& unlabeled,
                                                  double alpha);

}  // namespace opcost

#endif  // OPCOST_RELAXATIONS_H_
