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

#include "opcost/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {

double HypothesisClassSpec::q() const {
  if (std::isinf(r)) return 1.0;
  return r / (r - 1.0);
}

void HypothesisClassSpec::Validate() const {
  Require(p >= 1, ErrorCode::kInvalidInput, "class dimension must be >= 1");
  Require(r >= 2.0, ErrorCode::kInvalidInput, "data norm index r must be >= 2");
  Require(x_bound > 0.0 && std::isfinite(x_bound), ErrorCode::kInvalidInput,
          "X_b must be positive");
  Require(b_bound > 0.0 && std::isfinite(b_bound), ErrorCode::kInvalidInput,
          "B_b must be positive");
  for (size_t nu = 0; nu < constraints.size(); ++nu) {
    Require(constraints[nu].c.size() == p && constraints[nu].c.allFinite(),
            ErrorCode::kInvalidInput,
            "constraint " + std::to_string(nu) + " has wrong length or non-finite entries");
    Require(constraints[nu].delta > 0.0 && std::isfinite(constraints[nu].delta),
            ErrorCode::kInvalidInput,
            "constraint " + std::to_string(nu) + " needs a positive margin");
  }
}

bool HypothesisClassSpec::Contains(const Vector& beta) const {
  if (beta.size() != p) return false;
  if (NormR(beta, q()) > b_bound * (1.0 + Tolerances::kNormCheckRelative)) return false;
  for (const MarginConstraint& con : constraints) {
    if (con.c.dot(beta) + con.delta > 1.0 + Tolerances::kConstraintCheck) return false;
  }
  return true;
}

double NormR(const Vector& v, double r) {
  Require(r >= 1.0, ErrorCode::kInvalidInput, "norm index must be >= 1");
  if (v.size() == 0) return 0.0;
  if (std::isinf(r)) return v.cwiseAbs().maxCoeff();
  if (r == 1.0) return v.cwiseAbs().sum();
  if (r == 2.0) return v.norm();
  const double top = v.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  return top * std::pow((v.cwiseAbs() / top).array().pow(r).sum(), 1.0 / r);
}

Vector ScaledData::ScaleBeta(const Vector& beta) const {
  Require(beta.size() == scale.size(), ErrorCode::kInvalidInput,
          "beta has wrong dimension");
  return beta.cwiseQuotient(scale);
}

ScaledData ScaleData(const Matrix& X, const HypothesisClassSpec& spec) {
  spec.Validate();
  Require(X.cols() == spec.p, ErrorCode::kInvalidInput,
          "sample has " + std::to_string(X.cols()) + " columns, class has p = " +
              std::to_string(spec.p));
  Require(X.rows() >= 1 && X.allFinite(), ErrorCode::kInvalidInput,
          "sample must be non-empty and finite");
  const double n = static_cast<double>(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const double norm = NormR(X.row(i).transpose(), spec.r);
    Require(norm <= spec.x_bound * (1.0 + Tolerances::kNormCheckRelative),
            ErrorCode::kInvalidInput,
            "row " + std::to_string(i) + " has norm " + std::to_string(norm) +
                " above X_b = " + std::to_string(spec.x_bound));
  }
  const double target =
      (std::isinf(spec.r) ? 1.0 : std::pow(n, 1.0 / spec.r)) * spec.x_bound * spec.b_bound;
  ScaledData scaled;
  scaled.scale = Vector(spec.p);
  for (int j = 0; j < spec.p; ++j) {
    const double norm = NormR(X.col(j), spec.r);
    Require(norm > 0.0, ErrorCode::kDegenerateInput,
            "feature column " + std::to_string(j) + " is identically zero");
    scaled.scale(j) = target / norm;
  }
  scaled.h_tilde = X * scaled.scale.asDiagonal();
  scaled.c_tilde = Matrix::Zero(spec.V(), spec.p);
  for (int nu = 0; nu < spec.V(); ++nu) {
    scaled.c_tilde.row(nu) = spec.constraints[nu].c.cwiseProduct(scaled.scale).transpose();
  }
  scaled.lambda_min = SmallestEigenvalue(scaled.h_tilde.transpose() * scaled.h_tilde);
  scaled.column_bound = std::sqrt(n) * spec.x_bound * spec.b_bound;
  return scaled;
}

namespace {

constexpr double kMaxRadius = 1e18;

std::int64_t CeilToRadius(double value) {
  const double c = std::ceil(value);
  if (!(c < kMaxRadius)) return static_cast<std::int64_t>(kMaxRadius);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(c));
}

}  // namespace

std::int64_t ComputeK0(double epsilon, double x_bound, double b_bound) {
  Require(epsilon > 0.0 && std::isfinite(epsilon), ErrorCode::kInvalidInput,
          "epsilon must be positive");
  Require(x_bound > 0.0 && b_bound > 0.0, ErrorCode::kInvalidInput,
          "X_b and B_b must be positive");
  const double ratio = x_bound * b_bound / epsilon;
  return CeilToRadius(ratio * ratio);
}

std::optional<std::int64_t> ComputeK(double epsilon, int n, const HypothesisClassSpec& spec,
                                     const ScaledData& scaled) {
  const std::int64_t k0 = ComputeK0(epsilon, spec.x_bound, spec.b_bound);
  double rho = std::numeric_limits<double>::infinity();
  for (int nu = 0; nu < spec.V(); ++nu) {
    const double mass = scaled.c_tilde.row(nu).cwiseAbs().sum();
    if (mass > 0.0) rho = std::min(rho, spec.constraints[nu].delta / mass);
  }
  if (std::isinf(rho)) return k0;
  if (scaled.lambda_min < Tolerances::kLambdaMinVacuous) return std::nullopt;
  const double numerator =
      static_cast<double>(n) * spec.x_bound * spec.x_bound * spec.b_bound * spec.b_bound;
  return std::max(k0, CeilToRadius(numerator / (scaled.lambda_min * rho * rho)));
}

LatticeCountQuery ConstrainedQuery(std::int64_t K, const ScaledData& scaled,
                                   std::int64_t precision_denominator) {
  LatticeCountQuery query;
  query.p = static_cast<int>(scaled.c_tilde.cols());
  query.K = K;
  for (Eigen::Index nu = 0; nu < scaled.c_tilde.rows(); ++nu) {
    query.constraints.push_back(
        RationalizeConstraint(scaled.c_tilde.row(nu).transpose(), K, precision_denominator));
  }
  return query;
}

CoveringRecord CoveringNumberBound(double epsilon, int n, const HypothesisClassSpec& spec,
                                   const ScaledData& scaled, const CoveringOptions& options) {
  CoveringRecord record;
  record.epsilon = epsilon;
  record.K0 = ComputeK0(epsilon, spec.x_bound, spec.b_bound);
  if (epsilon >= spec.x_bound * spec.b_bound) {
    record.K = record.K0;
    record.log_covering_bound = 0.0;
    return record;
  }
  const int p = spec.p;
  const double log_p_k0 = LogL1LatticeSize(p, record.K0);
  if (std::exp(log_p_k0) <= options.max_points) {
    record.count_P_K0 = CountL1Lattice(p, record.K0, options.max_points);
    record.log_covering_bound = std::log(static_cast<double>(*record.count_P_K0));
  } else {
    record.estimated = true;
    record.log_covering_bound = log_p_k0;
  }

  record.K = ComputeK(epsilon, n, spec, scaled);
  if (!record.K) {
    record.vacuous = true;
    return record;
  }
  if (spec.V() == 0) {
    record.count_Pc_K = record.count_P_K0;
    return record;
  }
  if (std::exp(LogL1LatticeSize(p, *record.K)) > options.max_points) return record;
  for (std::int64_t d = options.precision_denominator; d >= 1; d /= 10) {
    try {
      const LatticeCountQuery query = ConstrainedQuery(*record.K, scaled, d);
      record.count_Pc_K = CountConstrainedLattice(query, options.max_points);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
    }
  }
  if (record.count_Pc_K) {
    record.log_covering_bound =
        std::min(record.log_covering_bound, std::log(static_cast<double>(*record.count_Pc_K)));
  }
  return record;
}

double DudleyIntegral(const std::function<double(double)>& log_covering, double upper,
                      int n, int p, int grid_size) {
  Require(upper > 0.0 && std::isfinite(upper), ErrorCode::kInvalidInput,
          "integration range must be positive");
  Require(n >= 1 && p >= 1, ErrorCode::kInvalidInput, "n and p must be positive");
  Require(grid_size >= 1, ErrorCode::kInvalidInput, "grid size must be positive");
  const double head = upper * 1e-6;
  const double a = std::log(3.0 + 2.0 * (upper / head) * (upper / head));
  const double head_bound =
      std::sqrt(2.0 * p / n) * head * (std::sqrt(a) + 1.0 / std::sqrt(a));
  const double width = (upper - head) / grid_size;
  double body = 0.0;
  for (int k = 0; k < grid_size; ++k) {
    const double log_n = std::max(0.0, log_covering(head + k * width));
    body += std::sqrt(2.0 * log_n / n);
  }
  return head_bound + width * body;
}

double DudleyRademacherBound(const HypothesisClassSpec& spec, const Matrix& X_S,
                             int grid_size, const CoveringOptions& options) {
  spec.Validate();
  Require(X_S.cols() == spec.p && X_S.rows() >= 1, ErrorCode::kInvalidInput,
          "sample has wrong shape");
  // Every function vanishes on an all-zero sample, so one ball covers F|S.
  if (X_S.isZero(0.0)) return 0.0;
  const int n = static_cast<int>(X_S.rows());
  const ScaledData scaled = ScaleData(X_S, spec);
  CoveringOptions budgeted = options;
  budgeted.max_points = std::min(options.max_points, Tolerances::kDudleyEnumerationBudget);
  std::map<std::int64_t, double> cache;  // keyed by K0, which determines K
  const double a = spec.x_bound * spec.b_bound;
  auto log_covering = [&](double alpha) {
    if (alpha >= a) return 0.0;
    const std::int64_t k0 = ComputeK0(alpha, spec.x_bound, spec.b_bound);
    auto it = cache.find(k0);
    if (it != cache.end()) return it->second;
    const double value =
        CoveringNumberBound(alpha, n, spec, scaled, budgeted).log_covering_bound;
    cache.emplace(k0, value);
    return value;
  };
  return a * 12.0 * DudleyIntegral(log_covering, a, n, spec.p, grid_size);
}

double DeviationTerm(int n, double confidence_delta) {
  Require(n >= 1, ErrorCode::kInvalidInput, "n must be positive");
  Require(confidence_delta > 0.0 && confidence_delta <= 1.0, ErrorCode::kInvalidInput,
          "confidence delta must lie in (0, 1]");
  return 3.0 / std::sqrt(2.0) * std::sqrt(std::log(1.0 / confidence_delta) / n);
}

double GeneralizationBound(double r_emp, double lipschitz, int n, double confidence_delta,
                           const HypothesisClassSpec& spec, const Matrix& X_S,
                           int grid_size, const CoveringOptions& options) {
  Require(lipschitz > 0.0, ErrorCode::kInvalidInput, "Lipschitz constant must be positive");
  Require(X_S.rows() == n, ErrorCode::kInvalidInput, "n must equal the sample size");
  return r_emp + lipschitz * DudleyRademacherBound(spec, X_S, grid_size, options) +
         DeviationTerm(n, confidence_delta);
}

BoundReport ComputeBoundReport(const HypothesisClassSpec& spec, const Matrix& X_S,
                               const std::vector<double>& epsilon_grid, double lipschitz,
                               double confidence_delta, int grid_size,
                               const CoveringOptions& options) {
  spec.Validate();
  Require(lipschitz > 0.0, ErrorCode::kInvalidInput, "Lipschitz constant must be positive");
  const int n = static_cast<int>(X_S.rows());
  BoundReport report;
  report.lipschitz = lipschitz;
  report.confidence_delta = confidence_delta;
  std::vector<double> grid = epsilon_grid;
  std::sort(grid.begin(), grid.end());
  const bool zero_sample = X_S.isZero(0.0);
  std::optional<ScaledData> scaled;
  if (!zero_sample) {
    scaled = ScaleData(X_S, spec);
    report.lambda_min = scaled->lambda_min;
  }
  for (double eps : grid) {
    if (zero_sample) {
      CoveringRecord record;
      record.epsilon = eps;
      record.K0 = ComputeK0(eps, spec.x_bound, spec.b_bound);
      record.K = record.K0;
      report.records.push_back(record);
    } else {
      report.records.push_back(CoveringNumberBound(eps, n, spec, *scaled, options));
    }
  }
  report.dudley_value = DudleyRademacherBound(spec, X_S, grid_size, options);
  report.deviation = DeviationTerm(n, confidence_delta);
  report.final_bound_excess = lipschitz * report.dudley_value + report.deviation;
  return report;
}

}  // namespace opcost
