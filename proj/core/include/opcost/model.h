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

// Linear prediction, least-squares loss, the ridge baseline, goodness-of-fit
// statistics and the symmetric eigenvalue routine shared with the bound
// engine.

#ifndef OPCOST_MODEL_H_
#define OPCOST_MODEL_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace opcost {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Labeled training data. Rows of X are instances, columns are features.
struct Dataset {
  Matrix X;
  Vector y;
  std::vector<std::string> feature_names;

  // Validates shape and finiteness; fills default feature names x1..xp when
  // none are given.
  static Dataset Make(Matrix X, Vector y,
                      std::vector<std::string> feature_names = {});

  int n() const { return static_cast<int>(X.rows()); }
  int p() const { return static_cast<int>(X.cols()); }
};

// Future instances on which the downstream policy is computed.
struct UnlabeledSet {
  Matrix X;

  static UnlabeledSet Make(Matrix X);

  int m() const { return static_cast<int>(X.rows()); }
  int p() const { return static_cast<int>(X.cols()); }
  Vector row(int i) const { return X.row(i).transpose(); }
};

struct LinearModel {
  Vector beta;

  int p() const { return static_cast<int>(beta.size()); }
};

double Predict(const LinearModel& model, const Vector& x);

// Predictions for every row of `X`.
Vector PredictAll(const LinearModel& model, const Matrix& X);

// Sum over i of (y_i - beta^T x_i)^2.
double LeastSquaresLoss(const LinearModel& model, const Dataset& data);

// 1 - SSE / SST. Throws kDegenerateInput when y is constant, since the
// statistic is undefined there.
double RSquared(const Vector& predictions, const Vector& y);

// Minimizer of sum (y_i - beta^T x_i)^2 + c2 * ||beta||_2^2 via the normal
// equations. Throws kSingular when X^T X + c2 I is not invertible.
LinearModel RidgeClosedForm(const Dataset& data, double c2);

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// ascending.
Vector SymmetricEigenvalues(const Matrix& M);

// Smallest eigenvalue of a symmetric positive semidefinite matrix; tiny
// negative round-off is clamped to zero.
double SmallestEigenvalue(const Matrix& M);

}  // namespace opcost

#endif  // OPCOST_MODEL_H_
