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

// Covering-number and generalization bounds for linear classes
// F = {beta : ||beta||_q <= B_b, c_nu^T beta + delta_nu <= 1 for all nu}
// evaluated on a sample whose rows satisfy ||x_i||_r <= X_b.

#ifndef OPCOST_BOUNDS_H_
#define OPCOST_BOUNDS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "opcost/lattice.h"
#include "opcost/model.h"

namespace opcost {

struct MarginConstraint {
  Vector c;
  double delta = 0.0;  // c^T beta + delta <= 1
};

struct HypothesisClassSpec {
  int p = 1;
  double r = 2.0;  // data norm index in [2, inf]
  double x_bound = 1.0;
  double b_bound = 1.0;
  std::vector<MarginConstraint> constraints;

  // Conjugate index: 1/r + 1/q = 1, with q = 1 for r = inf.
  double q() const;
  int V() const { return static_cast<int>(constraints.size()); }
  void Validate() const;
  // True when beta lies in F (to a relative tolerance of 1e-12).
  bool Contains(const Vector& beta) const;
};

// ||v||_r for r >= 1 including r = inf.
double NormR(const Vector& v, double r);

struct ScaledData {
  Matrix h_tilde;   // n x p, column j scaled by scale(j)
  Matrix c_tilde;   // V x p, constraint coefficients scaled by scale(j)
  Vector scale;     // n^{1/r} X_b B_b / ||h_j||_r
  double lambda_min = 0.0;  // smallest eigenvalue of h_tilde^T h_tilde
  double column_bound = 0.0;  // sqrt(n) X_b B_b

  // beta_tilde_j = beta_j / scale(j), so h_tilde beta_tilde = X beta and
  // c_tilde beta_tilde = c beta.
  Vector ScaleBeta(const Vector& beta) const;
};

// Throws kDegenerateInput for a zero column and kInvalidInput when a row
// exceeds X_b in r-norm.
ScaledData ScaleData(const Matrix& X, const HypothesisClassSpec& spec);

std::int64_t ComputeK0(double epsilon, double x_bound, double b_bound);

// The constrained radius max{K0, ceil(n X_b^2 B_b^2 / (lambda_min rho^2))},
// rho = min_nu delta_nu / sum_j |c_tilde_j nu|. Returns nullopt (vacuous)
// when lambda_min is numerically zero. Without constraints, or when every
// c_tilde row is zero, K = K0.
std::optional<std::int64_t> ComputeK(double epsilon, int n, const HypothesisClassSpec& spec,
                                     const ScaledData& scaled);

struct CoveringOptions {
  std::int64_t precision_denominator = 1000;
  double max_points = 1e9;
};

struct CoveringRecord {
  double epsilon = 0.0;
  std::int64_t K0 = 0;
  std::optional<std::int64_t> K;
  std::optional<std::uint64_t> count_P_K0;   // absent when out of budget
  std::optional<std::uint64_t> count_Pc_K;   // absent when vacuous or out of budget
  double log_covering_bound = 0.0;           // natural log of the bound
  bool vacuous = false;                      // lambda_min numerically zero
  bool estimated = false;                    // |P^K0| taken from the closed form
};

// The integer constraints of P_c^K after rationalization.
LatticeCountQuery ConstrainedQuery(std::int64_t K, const ScaledData& scaled,
                                   std::int64_t precision_denominator);

// N(sqrt(n) eps, F|S, l2) <= 1 for eps >= X_b B_b, else min{|P^K0|, |P_c^K|}.
// Counts are enumerated when within `max_points`; |P^K0| falls back to the
// closed form otherwise (still an upper bound). Retries smaller precision
// denominators when rationalization overflows.
CoveringRecord CoveringNumberBound(double epsilon, int n, const HypothesisClassSpec& spec,
                                   const ScaledData& scaled,
                                   const CoveringOptions& options = {});

// Upper bound on  integral_0^upper sqrt(2 log N(a) / n) da  for a
// non-increasing N: left-endpoint sums on a uniform grid of `grid_size` cells
// over [head, upper] with head = upper * 1e-6, plus an analytic bound on
// [0, head] that uses log N(a) <= p log(3 + 2 upper^2 / a^2).
double DudleyIntegral(const std::function<double(double)>& log_covering, double upper,
                      int n, int p, int grid_size);

// X_b B_b * 12 * integral_0^{X_b B_b} sqrt(2 log N(sqrt(n) a) / n) da.
double DudleyRademacherBound(const HypothesisClassSpec& spec, const Matrix& X_S,
                             int grid_size = 512, const CoveringOptions& options = {});

// (3 / sqrt 2) sqrt(log(1/delta) / n).
double DeviationTerm(int n, double confidence_delta);

// R_emp + L * Dudley + deviation.
double GeneralizationBound(double r_emp, double lipschitz, int n, double confidence_delta,
                           const HypothesisClassSpec& spec, const Matrix& X_S,
                           int grid_size = 512, const CoveringOptions& options = {});

struct BoundReport {
  std::vector<CoveringRecord> records;
  double dudley_value = 0.0;
  double lipschitz = 0.0;
  double confidence_delta = 1.0;
  double deviation = 0.0;
  double final_bound_excess = 0.0;  // L * dudley + deviation
  double lambda_min = 0.0;
};

BoundReport ComputeBoundReport(const HypothesisClassSpec& spec, const Matrix& X_S,
                               const std::vector<double>& epsilon_grid, double lipschitz,
                               double confidence_delta, int grid_size = 512,
                               const CoveringOptions& options = {});

}  // namespace opcost

#endif  // OPCOST_BOUNDS_H_
