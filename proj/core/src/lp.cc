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

#include "opcost/lp.h"

#include <cmath>
#include <string>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {
namespace {

// Row-major tableau; the last row holds reduced costs, the last column the
// right-hand side. The objective row stores -z in its rhs cell.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), data_(Matrix::Zero(rows + 1, cols + 1)),
        basis_(rows, -1) {}

  double& at(int r, int c) { return data_(r, c); }
  double at(int r, int c) const { return data_(r, c); }
  double& rhs(int r) { return data_(r, cols_); }
  double& cost(int c) { return data_(rows_, c); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::vector<int>& basis() { return basis_; }

  void Pivot(int row, int col) {
    const double pivot = data_(row, col);
    data_.row(row) /= pivot;
    for (int r = 0; r <= rows_; ++r) {
      if (r == row) continue;
      const double factor = data_(r, col);
      if (factor != 0.0) data_.row(r) -= factor * data_.row(row);
    }
    basis_[row] = col;
  }

  // Sets the objective row to the reduced costs of `costs` under the current
  // basis.
  void PriceOut(const Vector& costs) {
    data_.row(rows_).setZero();
    for (int c = 0; c < cols_; ++c) data_(rows_, c) = costs(c);
    for (int r = 0; r < rows_; ++r) {
      const double cb = costs(basis_[r]);
      if (cb != 0.0) data_.row(rows_) -= cb * data_.row(r);
    }
  }

  void RemoveRow(int row) {
    Matrix next(rows_, cols_ + 1);
    int out = 0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == row) continue;
      next.row(out++) = data_.row(r);
    }
    data_ = std::move(next);
    basis_.erase(basis_.begin() + row);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  Matrix data_;
  std::vector<int> basis_;
};

enum class Outcome { kOptimal, kUnbounded };

// Minimizes the priced-out objective with Bland's rule, never entering
// columns at index >= `allowed_cols`.
Outcome Iterate(Tableau& t, int allowed_cols) {
  for (int pivots = 0; pivots < Tolerances::kSimplexMaxPivots; ++pivots) {
    int entering = -1;
    for (int c = 0; c < allowed_cols; ++c) {
      if (t.cost(c) < -Tolerances::kSimplexOptimality) {
        entering = c;
        break;
      }
    }
    if (entering < 0) return Outcome::kOptimal;
    int leaving = -1;
    double best_ratio = 0.0;
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= Tolerances::kSimplexPivot) continue;
      const double ratio = t.rhs(r) / a;
      if (leaving < 0 || ratio < best_ratio - 1e-12 ||
          (std::abs(ratio - best_ratio) <= 1e-12 &&
           t.basis()[r] < t.basis()[leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) return Outcome::kUnbounded;
    t.Pivot(leaving, entering);
  }
  Fail(ErrorCode::kInternal, "simplex pivot limit reached");
}

}  // namespace

PolicySolution SolveLp(const Vector& objective, const std::vector<LinearRow>& rows,
                       bool maximize) {
  const int n = static_cast<int>(objective.size());
  const int m = static_cast<int>(rows.size());
  Require(n >= 1, ErrorCode::kInvalidInput, "LP needs at least one variable");
  Require(objective.allFinite(), ErrorCode::kInvalidInput,
          "LP objective has non-finite entries");

  // Normalize every row to a nonnegative right-hand side.
  std::vector<LinearRow> normalized = rows;
  int slack_count = 0;
  int artificial_count = 0;
  for (int i = 0; i < m; ++i) {
    LinearRow& row = normalized[i];
    Require(row.coefficients.size() == n, ErrorCode::kInvalidInput,
            "LP row " + std::to_string(i) + " has wrong length");
    Require(row.coefficients.allFinite() && std::isfinite(row.bound),
            ErrorCode::kInvalidInput, "LP row has non-finite entries");
    if (row.bound < 0.0) {
      row.coefficients = -row.coefficients;
      row.bound = -row.bound;
      if (row.sense == RowSense::kLessEqual) {
        row.sense = RowSense::kGreaterEqual;
      } else if (row.sense == RowSense::kGreaterEqual) {
        row.sense = RowSense::kLessEqual;
      }
    }
    if (row.sense != RowSense::kEqual) ++slack_count;
    if (row.sense != RowSense::kLessEqual) ++artificial_count;
  }

  const int first_slack = n;
  const int first_artificial = n + slack_count;
  const int cols = first_artificial + artificial_count;
  Tableau t(m, cols);
  int next_slack = first_slack;
  int next_artificial = first_artificial;
  for (int i = 0; i < m; ++i) {
    const LinearRow& row = normalized[i];
    for (int j = 0; j < n; ++j) t.at(i, j) = row.coefficients(j);
    t.rhs(i) = row.bound;
    switch (row.sense) {
      case RowSense::kLessEqual:
        t.at(i, next_slack) = 1.0;
        t.basis()[i] = next_slack++;
        break;
      case RowSense::kGreaterEqual:
        t.at(i, next_slack++) = -1.0;
        t.at(i, next_artificial) = 1.0;
        t.basis()[i] = next_artificial++;
        break;
      case RowSense::kEqual:
        t.at(i, next_artificial) = 1.0;
        t.basis()[i] = next_artificial++;
        break;
    }
  }

  if (artificial_count > 0) {
    Vector phase_one = Vector::Zero(cols);
    phase_one.tail(artificial_count).setOnes();
    t.PriceOut(phase_one);
    Iterate(t, cols);
    double scale = 1.0;
    for (const LinearRow& row : normalized) scale = std::max(scale, std::abs(row.bound));
    if (-t.rhs(t.rows()) > Tolerances::kFeasibility * scale) {
      Fail(ErrorCode::kInfeasible, "LP has no feasible point");
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (int r = t.rows() - 1; r >= 0; --r) {
      if (t.basis()[r] < first_artificial) continue;
      int column = -1;
      for (int c = 0; c < first_artificial; ++c) {
        if (std::abs(t.at(r, c)) > Tolerances::kSimplexPivot) {
          column = c;
          break;
        }
      }
      if (column >= 0) {
        t.Pivot(r, column);
      } else {
        t.RemoveRow(r);  // redundant equality
      }
    }
  }

  Vector costs = Vector::Zero(cols);
  costs.head(n) = maximize ? Vector(-objective) : objective;
  t.PriceOut(costs);
  if (Iterate(t, first_artificial) == Outcome::kUnbounded) {
    Fail(ErrorCode::kUnbounded, "LP objective is unbounded");
  }

  PolicySolution solution;
  solution.policy = Vector::Zero(n);
  for (int r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) solution.policy(t.basis()[r]) = t.rhs(r);
  }
  solution.objective_value = objective.dot(solution.policy);
  return solution;
}

}  // namespace opcost
