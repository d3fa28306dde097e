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

#ifndef OPCOST_LP_H_
#define OPCOST_LP_H_

#include <vector>

#include "opcost/model.h"

namespace opcost {

// A policy returned by any decision subproblem together with the objective
// value the subproblem assigns to it.
struct PolicySolution {
  Vector policy;
  double objective_value = 0.0;
};

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearRow {
  Vector coefficients;
  double bound = 0.0;
  RowSense sense = RowSense::kLessEqual;
};

// Dense two-phase tableau simplex over x >= 0 with Bland's anti-cycling rule.
// Intended for desk-scale problems (tens of variables, a few hundred rows).
// Throws kInfeasible or kUnbounded accordingly.
PolicySolution SolveLp(const Vector& objective, const std::vector<LinearRow>& rows,
                       bool maximize);

}  // namespace opcost

#endif  // OPCOST_LP_H_
