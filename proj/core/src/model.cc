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

#include "opcost/model.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {

Dataset Dataset::Make(Matrix X, Vector y,
                      std::vector<std::string> feature_names) {
  Require(X.rows() >= 1 && X.cols() >= 1, ErrorCode::kInvalidInput,
          "dataset needs at least one row and one feature");
  Require(y.size() == X.rows(), ErrorCode::kInvalidInput,
          "label count " + std::to_string(y.size()) + " != row count " +
              std::to_string(X.rows()));
  Require(X.allFinite() && y.allFinite(), ErrorCode::kInvalidInput,
          "dataset contains non-finite entries");
  if (feature_names.empty()) {
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      feature_names.push_back("x" + std::to_string(j + 1));
    }
  }
  Require(static_cast<Eigen::Index>(feature_names.size()) == X.cols(),
          ErrorCode::kInvalidInput, "feature name count mismatch");
  return Dataset{std::move(X), std::move(y), std::move(feature_names)};
}

UnlabeledSet UnlabeledSet::Make(Matrix X) {
  Require(X.rows() >= 1 && X.cols() >= 1, ErrorCode::kInvalidInput,
          "unlabeled set needs at least one row and one feature");
  Require(X.allFinite(), ErrorCode::kInvalidInput,
          "unlabeled set contains non-finite entries");
  return UnlabeledSet{std::move(X)};
}

double Predict(const LinearModel& model, const Vector& x) {
  Require(model.beta.size() == x.size(), ErrorCode::kInvalidInput,
          "predict: beta has " + std::to_string(model.beta.size()) +
              " coefficients, x has " + std::to_string(x.size()));
  return model.beta.dot(x);
}

Vector PredictAll(const LinearModel& model, const Matrix& X) {
  Require(model.beta.size() == X.cols(), ErrorCode::kInvalidInput,
          "predict: dimension mismatch");
  return X * model.beta;
}

double LeastSquaresLoss(const LinearModel& model, const Dataset& data) {
  Require(model.beta.size() == data.X.cols(), ErrorCode::kInvalidInput,
          "loss: dimension mismatch");
  return (data.y - data.X * model.beta).squaredNorm();
}

double RSquared(const Vector& predictions, const Vector& y) {
  Require(predictions.size() == y.size(), ErrorCode::kInvalidInput,
          "r_squared: length mismatch");
  Require(y.size() >= 2, ErrorCode::kDegenerateInput,
          "r_squared needs at least two labels");
  const double mean = y.mean();
  const double total = (y.array() - mean).square().sum();
  Require(total > 0.0, ErrorCode::kDegenerateInput,
          "r_squared undefined for constant labels");
  const double residual = (y - predictions).squaredNorm();
  return 1.0 - residual / total;
}

LinearModel RidgeClosedForm(const Dataset& data, double c2) {
  Require(c2 >= 0.0 && std::isfinite(c2), ErrorCode::kInvalidInput,
          "ridge penalty must be a finite nonnegative number");
  const Eigen::Index p = data.X.cols();
  Matrix gram = data.X.transpose() * data.X;
  gram.diagonal().array() += c2;
  const Vector rhs = data.X.transpose() * data.y;
  Eigen::FullPivLU<Matrix> lu(gram);
  Require(lu.isInvertible(), ErrorCode::kSingular,
          "X^T X + c2 I is singular (rank " + std::to_string(lu.rank()) +
              " < " + std::to_string(p) + ")");
  return LinearModel{lu.solve(rhs)};
}

namespace {

double OffDiagonalNorm(const Matrix& A) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (i != j) sum += A(i, j) * A(i, j);
    }
  }
  return std::sqrt(sum);
}

}  // namespace

Vector SymmetricEigenvalues(const Matrix& M) {
  Require(M.rows() == M.cols() && M.rows() >= 1, ErrorCode::kInvalidInput,
          "eigenvalues need a non-empty square matrix");
  Require(M.allFinite(), ErrorCode::kInvalidInput, "matrix has non-finite entries");
  const double scale = std::max(1.0, M.norm());
  Require((M - M.transpose()).cwiseAbs().maxCoeff() <= Tolerances::kSymmetry * scale,
          ErrorCode::kInvalidInput, "matrix is not symmetric");

  const Eigen::Index p = M.rows();
  Matrix A = 0.5 * (M + M.transpose());
  const double threshold = Tolerances::kJacobiOffDiagonal * scale;
  for (int sweep = 0; sweep < Tolerances::kJacobiMaxSweeps; ++sweep) {
    if (OffDiagonalNorm(A) < threshold) break;
    for (Eigen::Index i = 0; i < p - 1; ++i) {
      for (Eigen::Index j = i + 1; j < p; ++j) {
        const double aij = A(i, j);
        if (aij == 0.0) continue;
        // Rotation angle that annihilates A(i, j).
        const double theta = (A(j, j) - A(i, i)) / (2.0 * aij);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < p; ++k) {
          const double aki = A(k, i);
          const double akj = A(k, j);
          A(k, i) = c * aki - s * akj;
          A(k, j) = s * aki + c * akj;
        }
        for (Eigen::Index k = 0; k < p; ++k) {
          const double aik = A(i, k);
          const double ajk = A(j, k);
          A(i, k) = c * aik - s * ajk;
          A(j, k) = s * aik + c * ajk;
        }
      }
    }
  }
  Vector eig = A.diagonal();
  std::sort(eig.data(), eig.data() + eig.size());
  return eig;
}

double SmallestEigenvalue(const Matrix& M) {
  const double lambda = SymmetricEigenvalues(M)(0);
  if (lambda >= 0.0) return lambda;
  const double clamp = Tolerances::kEigenClamp * std::max(1.0, M.norm());
  Require(lambda >= -clamp, ErrorCode::kInvalidInput,
          "matrix is not positive semidefinite (smallest eigenvalue " +
              std::to_string(lambda) + ")");
  return 0.0;
}

}  // namespace opcost
