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

#include <gtest/gtest.h>

#include <cmath>

#include "opcost/error.h"
#include "opcost/random.h"

namespace opcost {
namespace {

Matrix RandomSample(Rng& rng, int n, int p) {
  Matrix X(n, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) X(i, j) = rng.Normal();
  }
  return X;
}

Vector RandomL1Point(Rng& rng, int p) {
  Vector b(p);
  for (int j = 0; j < p; ++j) b(j) = rng.Normal();
  return b * (rng.Uniform() / b.cwiseAbs().sum());
}

TEST(MaureyTest, VertexIsExact) {
  Rng rng(137);
  const Matrix H = RandomSample(rng, 6, 3);
  const MaureyResult r = MaureyApproximation(Vector::Unit(3, 1), H, 7, 1);
  EXPECT_EQ(r.k, (std::vector<std::int64_t>{0, 7, 0}));
  EXPECT_EQ(r.sq_error, 0.0);
}

TEST(MaureyTest, ZeroIsExact) {
  Rng rng(139);
  const Matrix H = RandomSample(rng, 6, 3);
  const MaureyResult r = MaureyApproximation(Vector::Zero(3), H, 5, 1);
  EXPECT_EQ(r.k, (std::vector<std::int64_t>{0, 0, 0}));
  EXPECT_EQ(r.y_K.norm(), 0.0);
}

TEST(MaureyTest, InequalityHoldsOnRandomTrials) {
  Rng rng(149);
  for (int trial = 0; trial < 300; ++trial) {
    const int p = 1 + static_cast<int>(rng.Below(5));
    const Matrix H = RandomSample(rng, 4 + static_cast<int>(rng.Below(10)), p);
    const std::int64_t K = 1 + static_cast<std::int64_t>(rng.Below(50));
    const Vector bt = RandomL1Point(rng, p);
    const MaureyResult r = MaureyApproximation(bt, H, K, trial);
    const double b = H.colwise().norm().maxCoeff();
    EXPECT_LE(r.sq_error, b * b / static_cast<double>(K) * (1 + 1e-12));
    std::int64_t l1 = 0;
    for (std::int64_t v : r.k) l1 += std::abs(v);
    EXPECT_LE(l1, K);
    EXPECT_NEAR((r.y - H * bt).norm(), 0.0, 1e-12);
  }
}

TEST(MaureyTest, RejectsOutsideBall) {
  Rng rng(151);
  EXPECT_THROW(MaureyApproximation(Vector::Constant(2, 0.6), RandomSample(rng, 3, 2), 3, 1),
               Error);
}

TEST(ConstraintPreservationTest, NoConstraintsIsVacuous) {
  Rng rng(157);
  const Matrix X = RandomSample(rng, 5, 2);
  HypothesisClassSpec spec;
  spec.p = 2;
  spec.x_bound = 10.0;
  const ScaledData s = ScaleData(X, spec);
  EXPECT_TRUE(VerifyConstraintPreservation({1, -1}, 2, s, spec).holds());
}

TEST(ConstraintPreservationTest, BelowThresholdViolationExists) {
  // A constraint that is tight for the continuous point can be broken by a
  // coarse K-term approximation.
  Rng rng(163);
  bool violated = false;
  for (int trial = 0; trial < 2000 && !violated; ++trial) {
    const Matrix X = RandomSample(rng, 6, 2);
    HypothesisClassSpec spec;
    spec.p = 2;
    spec.x_bound = 0.0;
    for (Eigen::Index i = 0; i < X.rows(); ++i) spec.x_bound = std::max(spec.x_bound, X.row(i).norm());
    spec.constraints.push_back({Vector::Unit(2, 0) * 2.0, 0.05});
    const ScaledData s = ScaleData(X, spec);
    const Vector bt = RandomL1Point(rng, 2);
    if (s.c_tilde.row(0).dot(bt) > 0.95) continue;
    const MaureyResult r = MaureyApproximation(bt, s.h_tilde, 1, trial, s.column_bound);
    const ConstraintPreservationCheck check = VerifyConstraintPreservation(r.k, 1, s, spec);
    if (!check.threshold_met && !check.constraints_hold) violated = true;
  }
  EXPECT_TRUE(violated);
}

}  // namespace
}  // namespace opcost
