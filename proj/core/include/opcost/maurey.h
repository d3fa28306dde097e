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

// Constructive sparse approximation of l1-ball combinations of scaled
// features by K-term integer combinations.

#ifndef OPCOST_MAUREY_H_
#define OPCOST_MAUREY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "opcost/bounds.h"
#include "opcost/model.h"

namespace opcost {

struct MaureyResult {
  std::vector<std::int64_t> k;  // sum |k_j| <= K
  Vector y;                     // h_tilde beta_tilde
  Vector y_K;                   // h_tilde k / K
  double sq_error = 0.0;        // ||y - y_K||^2
  double b = 0.0;               // the constant in the guarantee sq_error <= b^2 / K
  int attempts = 0;
};

// Draws K indices from (|beta_1|, ..., |beta_p|, 1 - sum |beta_j|), where the
// last outcome adds nothing, and sets k_j = sign(beta_j) * (times j drawn).
// Retries with seeds seed, seed + 1, ... until sq_error <= b^2 / K; b defaults
// to the largest column l2 norm of h_tilde. Throws kInternal if 100 attempts
// all fail.
MaureyResult MaureyApproximation(const Vector& beta_tilde, const Matrix& h_tilde,
                                 std::int64_t K, std::uint64_t seed,
                                 std::optional<double> b = std::nullopt);

struct ConstraintPreservationCheck {
  double threshold = 0.0;        // n X_b^2 B_b^2 / (rho^2 lambda_min); inf if vacuous
  bool threshold_met = false;    // K >= threshold
  bool constraints_hold = false; // sum_j c_tilde_j nu k_j / K <= 1 for all nu

  // The guarantee: at or above the threshold the constraints must hold.
  bool holds() const { return !threshold_met || constraints_hold; }
};

ConstraintPreservationCheck VerifyConstraintPreservation(const std::vector<std::int64_t>& k, std::int64_t K,
                                  const ScaledData& scaled, const HypothesisClassSpec& spec);

}  // namespace opcost

#endif  // OPCOST_MAUREY_H_
