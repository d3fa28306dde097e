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

#include "opcost/rademacher.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "opcost/error.h"
#include "opcost/lp.h"
#include "opcost/random.h"

namespace opcost {
namespace {

bool Near(double a, double b) { return std::abs(a - b) < 1e-12; }

}  // namespace

RademacherSupremum::RademacherSupremum(const Matrix& X_S, const HypothesisClassSpec& spec,
                                       int grid_resolution)
    : X_(X_S), spec_(spec) {
  spec_.Validate();
  Require(X_.cols() == spec_.p && X_.rows() >= 1, ErrorCode::kInvalidInput,
          "sample has wrong shape");
  const double q = spec_.q();
  if (Near(q, 1.0)) {
    mode_ = Mode::kLinearProgram;
    return;
  }
  Require(Near(q, 2.0), ErrorCode::kUnsupported,
          "Rademacher supremum supports q = 1 and q = 2 only");
  if (spec_.V() == 0) {
    mode_ = Mode::kClosedForm;
    return;
  }
  Require(spec_.p <= 3, ErrorCode::kUnsupported,
          "q = 2 with margin constraints is supported for p <= 3 only");
  Require(grid_resolution >= 4, ErrorCode::kInvalidInput, "grid resolution too small");
  mode_ = Mode::kGrid;
  approximate_ = true;
  std::vector<Vector> points;
  const int res = grid_resolution;
  const double b = spec_.b_bound;
  auto keep = [&](const Vector& beta) {
    if (spec_.Contains(beta)) points.push_back(beta);
  };
  for (int ir = 1; ir <= res; ++ir) {
    const double radius = b * ir / res;
    if (spec_.p == 1) {
      keep(Vector::Constant(1, radius));
      keep(Vector::Constant(1, -radius));
    } else if (spec_.p == 2) {
      for (int ia = 0; ia < 4 * res; ++ia) {
        const double t = 2.0 * std::numbers::pi * ia / (4 * res);
        Vector beta(2);
        beta << radius * std::cos(t), radius * std::sin(t);
        keep(beta);
      }
    } else {
      for (int ip = 0; ip <= res; ++ip) {
        const double phi = std::numbers::pi * ip / res;
        const int ring = std::max(1, static_cast<int>(std::round(2 * res * std::sin(phi))));
        for (int ia = 0; ia < ring; ++ia) {
          const double t = 2.0 * std::numbers::pi * ia / ring;
          Vector beta(3);
          beta << radius * std::sin(phi) * std::cos(t), radius * std::sin(phi) * std::sin(t),
              radius * std::cos(phi);
          keep(beta);
        }
      }
    }
  }
  keep(Vector::Zero(spec_.p));
  Require(!points.empty(), ErrorCode::kInfeasible, "hypothesis class is empty on the grid");
  grid_ = Matrix(spec_.p, points.size());
  for (size_t k = 0; k < points.size(); ++k) grid_.col(k) = points[k];
}

double RademacherSupremum::operator()(const Vector& sigma) const {
  Require(sigma.size() == X_.rows(), ErrorCode::kInvalidInput, "sign vector has wrong length");
  const double n = static_cast<double>(X_.rows());
  const Vector g = (2.0 / n) * (X_.transpose() * sigma);
  switch (mode_) {
    case Mode::kClosedForm:
      return spec_.b_bound * g.norm();
    case Mode::kGrid:
      return (g.transpose() * grid_).maxCoeff();
    case Mode::kLinearProgram: {
      // beta = u - v with u, v >= 0.
      const int p = spec_.p;
      Vector objective(2 * p);
      objective << g, -g;
      std::vector<LinearRow> rows;
      rows.push_back({Vector::Ones(2 * p), spec_.b_bound, RowSense::kLessEqual});
      for (const MarginConstraint& con : spec_.constraints) {
        Vector row(2 * p);
        row << con.c, -con.c;
        rows.push_back({row, 1.0 - con.delta, RowSense::kLessEqual});
      }
      return SolveLp(objective, rows, /*maximize=*/true).objective_value;
    }
  }
  Fail(ErrorCode::kInternal, "unknown supremum mode");
}

RademacherEstimate EmpiricalRademacherMc(const Matrix& X_S, const HypothesisClassSpec& spec,
                                         int num_samples, std::uint64_t seed) {
  Require(num_samples >= 2, ErrorCode::kInvalidInput, "need at least two sign samples");
  const RademacherSupremum supremum(X_S, spec);
  Rng rng(seed);
  Vector sigma(X_S.rows());
  // Welford accumulation; identical samples give a standard error of exactly 0.
  double mean = 0.0, m2 = 0.0;
  for (int s = 0; s < num_samples; ++s) {
    for (Eigen::Index i = 0; i < sigma.size(); ++i) sigma(i) = rng.Rademacher();
    const double value = supremum(sigma);
    const double delta = value - mean;
    mean += delta / (s + 1);
    m2 += delta * (value - mean);
  }
  const double variance = std::max(0.0, m2 / (num_samples - 1));
  return RademacherEstimate{mean, std::sqrt(variance / num_samples), supremum.approximate()};
}

}  // namespace opcost
