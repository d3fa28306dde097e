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

#include "opcost/maurey.h"

#include <cmath>
#include <limits>
#include <string>

#include "opcost/error.h"
#include "opcost/random.h"
#include "opcost/tolerances.h"

namespace opcost {

MaureyResult MaureyApproximation(const Vector& beta_tilde, const Matrix& h_tilde,
                                 std::int64_t K, std::uint64_t seed, std::optional<double> b) {
  const Eigen::Index p = beta_tilde.size();
  Require(p >= 1 && h_tilde.cols() == p, ErrorCode::kInvalidInput,
          "beta and feature matrix dimensions differ");
  Require(K >= 1, ErrorCode::kInvalidInput, "K must be >= 1");
  Require(beta_tilde.allFinite(), ErrorCode::kInvalidInput, "non-finite coefficients");
  const double mass = beta_tilde.cwiseAbs().sum();
  Require(mass <= 1.0 + 1e-12, ErrorCode::kInvalidInput,
          "||beta_tilde||_1 = " + std::to_string(mass) + " exceeds 1");

  MaureyResult result;
  result.b = b ? *b : h_tilde.colwise().norm().maxCoeff();
  result.y = h_tilde * beta_tilde;
  const double target = result.b * result.b / static_cast<double>(K);

  std::vector<double> cumulative(p);
  double running = 0.0;
  for (Eigen::Index j = 0; j < p; ++j) {
    running += std::abs(beta_tilde(j));
    cumulative[j] = running;
  }

  for (int attempt = 0; attempt < Tolerances::kMaureyMaxAttempts; ++attempt) {
    Rng rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<std::int64_t> draws(p, 0);
    for (std::int64_t s = 0; s < K; ++s) {
      const double u = rng.Uniform();
      for (Eigen::Index j = 0; j < p; ++j) {
        if (u < cumulative[j]) {
          ++draws[j];
          break;
        }
      }
    }
    Vector coef(p);
    result.k.assign(p, 0);
    for (Eigen::Index j = 0; j < p; ++j) {
      result.k[j] = beta_tilde(j) < 0.0 ? -draws[j] : draws[j];
      coef(j) = static_cast<double>(result.k[j]) / static_cast<double>(K);
    }
    result.y_K = h_tilde * coef;
    result.sq_error = (result.y - result.y_K).squaredNorm();
    result.attempts = attempt + 1;
    if (result.sq_error <= target) return result;
  }
  Fail(ErrorCode::kInternal, "no Maurey draw met the error bound in " +
                                 std::to_string(Tolerances::kMaureyMaxAttempts) + " attempts");
}

ConstraintPreservationCheck VerifyConstraintPreservation(const std::vector<std::int64_t>& k, std::int64_t K,
                                  const ScaledData& scaled, const HypothesisClassSpec& spec) {
  Require(static_cast<int>(k.size()) == spec.p, ErrorCode::kInvalidInput,
          "k has wrong dimension");
  Require(K >= 1, ErrorCode::kInvalidInput, "K must be >= 1");
  ConstraintPreservationCheck check;
  if (spec.V() == 0) {
    check.threshold = 0.0;
    check.threshold_met = true;
    check.constraints_hold = true;
    return check;
  }
  double rho = std::numeric_limits<double>::infinity();
  for (int nu = 0; nu < spec.V(); ++nu) {
    const double row_mass = scaled.c_tilde.row(nu).cwiseAbs().sum();
    if (row_mass > 0.0) rho = std::min(rho, spec.constraints[nu].delta / row_mass);
  }
  if (std::isinf(rho)) {
    check.threshold = 0.0;
  } else if (scaled.lambda_min < Tolerances::kLambdaMinVacuous) {
    check.threshold = std::numeric_limits<double>::infinity();
  } else {
    check.threshold = scaled.column_bound * scaled.column_bound /
                      (rho * rho * scaled.lambda_min);
  }
  check.threshold_met = static_cast<double>(K) >= check.threshold;
  check.constraints_hold = true;
  for (int nu = 0; nu < spec.V(); ++nu) {
    double lhs = 0.0;
    for (int j = 0; j < spec.p; ++j) {
      lhs += scaled.c_tilde(nu, j) * static_cast<double>(k[j]) / static_cast<double>(K);
    }
    if (lhs > 1.0 + Tolerances::kConstraintCheck) check.constraints_hold = false;
  }
  return check;
}

}  // namespace opcost
