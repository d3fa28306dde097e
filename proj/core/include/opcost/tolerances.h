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

#ifndef OPCOST_TOLERANCES_H_
#define OPCOST_TOLERANCES_H_

#include <cstdint>

namespace opcost {

// Every numeric tolerance and size cap used by the library lives here so that
// tests, docs and code agree on the same numbers.
struct Tolerances {
  // model-core
  static constexpr double kSymmetry = 1e-10;
  static constexpr double kEigenClamp = 1e-10;
  static constexpr double kJacobiOffDiagonal = 1e-12;
  static constexpr int kJacobiMaxSweeps = 100;

  // Decision subproblems.
  static constexpr double kFeasibility = 1e-8;
  static constexpr double kDemandSlack = 1e-9;
  static constexpr double kSimplexPivot = 1e-9;
  static constexpr double kSimplexOptimality = 1e-9;
  static constexpr int kSimplexMaxPivots = 50000;
  static constexpr std::int64_t kMaxPaths = 1000000;

  // Lattice counting and covering bounds.
  static constexpr double kMaxLatticePoints = 1e9;
  static constexpr double kLambdaMinVacuous = 1e-10;
  static constexpr double kNormCheckRelative = 1e-12;
  static constexpr double kRationalizeMargin = 1e-9;
  static constexpr std::int64_t kDefaultPrecisionDenominator = 1000;
  static constexpr double kDudleyEnumerationBudget = 1e7;
  static constexpr int kDefaultDudleyGrid = 512;
  static constexpr double kConstraintCheck = 1e-12;
  static constexpr int kMaureyMaxAttempts = 100;

  // Grid minimax.
  static constexpr int kDefaultGridResolution = 201;
};

}  // namespace opcost

#endif  // OPCOST_TOLERANCES_H_
