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

#include "opcost/robust.h"

#include <gtest/gtest.h>

#include <cmath>

#include "opcost/error.h"
#include "opcost/random.h"

namespace opcost {
namespace {

Dataset RegressionData(Rng& rng, int n, int p) {
  Matrix X(n, p);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < p; ++j) X(i, j) = rng.Normal();
    y(i) = X.row(i).sum() + rng.Normal(0.0, 0.3);
  }
  return Dataset::Make(X, y);
}

Dataset ClassificationData(Rng& rng, int n) {
  Matrix X(n, 2);
  Vector y(n);
  for (int i = 0; i < n; ++i) {
    X(i, 0) = rng.Normal();
    X(i, 1) = rng.Normal();
    y(i) = X(i, 0) + 0.3 * rng.Normal() > 0.0 ? 1.0 : -1.0;
  }
  return Dataset::Make(X, y);
}

TEST(LossTest, PointValues) {
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kLeastSquares, 1.0, 3.0), 4.0);
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kHinge, 0.25, 1.0), 0.75);
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kHinge, 2.0, 1.0), 0.0);
  EXPECT_NEAR(PointLoss(LossKind::kLogistic, 0.0, 1.0), std::log(2.0), 1e-15);
  EXPECT_NEAR(PointLoss(LossKind::kLogistic, -800.0, 1.0), 800.0, 1e-9);
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kExponential, 0.0, -1.0), 1.0);
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kRamp, -5.0, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kZeroOne, -0.1, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(PointLoss(LossKind::kZeroOne, 0.1, 1.0), 0.0);
}

TEST(LossTest, NamesRoundTrip) {
  for (LossKind k : {LossKind::kLeastSquares, LossKind::kHinge, LossKind::kLogistic,
                     LossKind::kExponential, LossKind::kRamp, LossKind::kZeroOne}) {
    EXPECT_EQ(ParseLossKind(LossKindName(k)), k);
  }
  EXPECT_THROW(ParseLossKind("huber"), Error);
}

TEST(FgoodTest, ReferenceIsMemberAndExcessIsNot) {
  Rng rng(1);
  const Dataset data = RegressionData(rng, 20, 2);
  const LinearModel ref = RidgeClosedForm(data, 0.0);
  const UncertaintySet set = BuildFgood(data, ref, 0.5, 100.0, LossKind::kLeastSquares);
  EXPECT_TRUE(MembershipFgood(ref.beta, set));
  EXPECT_NEAR(set.c1_star, LeastSquaresLoss(ref, data) + 0.5, 1e-12);
  // Shift along a direction until the loss exceeds the budget by 1.
  Vector d = Vector::Unit(2, 0);
  const double a = (data.X * d).squaredNorm();
  const Vector far = ref.beta + std::sqrt(1.5 / a) * d;
  EXPECT_FALSE(MembershipFgood(far, set));
}

TEST(FgoodTest, RayBisectionFindsAnalyticBoundary) {
  // At the least-squares minimizer, loss(beta* + t d) = loss(beta*) + t^2 ||X d||^2.
  Rng rng(2);
  const Dataset data = RegressionData(rng, 25, 3);
  const LinearModel ref = RidgeClosedForm(data, 0.0);
  const double eps = 0.8;
  const UncertaintySet set = BuildFgood(data, ref, eps, 1e6, LossKind::kLeastSquares);
  for (int trial = 0; trial < 20; ++trial) {
    Vector d(3);
    for (int j = 0; j < 3; ++j) d(j) = rng.Normal();
    d.normalize();
    const double analytic = std::sqrt(eps / (data.X * d).squaredNorm());
    double lo = 0.0, hi = 10.0 * analytic;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (MembershipFgood(ref.beta + mid * d, set) ? lo : hi) = mid;
    }
    EXPECT_NEAR(lo, analytic, 1e-9);
  }
}

TEST(FgoodTest, NormBudgetApplies) {
  Rng rng(3);
  const Dataset data = RegressionData(rng, 10, 2);
  const UncertaintySet set =
      BuildFgood(data, RidgeClosedForm(data, 0.0), 1e9, 1.0, LossKind::kLeastSquares);
  EXPECT_TRUE(MembershipFgood(Vector::Constant(2, 0.7), set));
  EXPECT_FALSE(MembershipFgood(Vector::Constant(2, 0.71), set));
}

TEST(FgoodTest, LeastSquaresSetIsConvex) {
  Rng rng(4);
  const Dataset data = RegressionData(rng, 15, 2);
  const LinearModel ref = RidgeClosedForm(data, 0.0);
  const UncertaintySet set = BuildFgood(data, ref, 2.0, 9.0, LossKind::kLeastSquares);
  std::vector<Vector> members;
  while (members.size() < 200) {
    Vector b = ref.beta + Vector::NullaryExpr(2, [&] { return rng.Uniform(-1, 1); });
    if (MembershipFgood(b, set)) members.push_back(b);
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const Vector& a = members[rng.Below(members.size())];
    const Vector& b = members[rng.Below(members.size())];
    EXPECT_TRUE(MembershipFgood(0.5 * (a + b), set));
  }
}

TEST(FgoodTest, ZeroOneSetHasNonConvexWitness) {
  // x = (1, -1), y = (1, 1): beta = +-1 each misclassify one point, while
  // beta = 0 predicts -1 everywhere and misclassifies both.
  Matrix X(2, 1);
  X << 1, -1;
  const Dataset data = Dataset::Make(X, Vector::Ones(2));
  const UncertaintySet set =
      BuildFgood(data, LinearModel{Vector::Ones(1)}, 0.0, 4.0, LossKind::kZeroOne);
  EXPECT_FALSE(set.convex());
  EXPECT_TRUE(MembershipFgood(Vector::Constant(1, 1.0), set));
  EXPECT_TRUE(MembershipFgood(Vector::Constant(1, -1.0), set));
  EXPECT_FALSE(MembershipFgood(Vector::Zero(1), set));
}

BilinearGame BoxGame(const Matrix& M, const Vector& c) {
  BilinearGame g;
  g.M = M;
  g.c = c;
  g.policy_set = PolicySetKind::kBox;
  g.pi_lo = -1.0;
  g.pi_hi = 1.0;
  g.beta_lo = Vector::Constant(M.cols(), -1.0);
  g.beta_hi = Vector::Constant(M.cols(), 1.0);
  return g;
}

TEST(GridMinimaxTest, AntisymmetricGameSaddleAtZero) {
  const SaddleResult r = GridMinimax(BoxGame(Matrix::Ones(1, 1), Vector::Zero(1)), 101, 101);
  EXPECT_NEAR(r.minimax_value, 0.0, 1e-15);
  EXPECT_NEAR(r.maximin_value, 0.0, 1e-15);
  EXPECT_NEAR(r.pi_star(0), 0.0, 1e-15);
}

TEST(GridMinimaxTest, ConstantGame) {
  const SaddleResult r =
      GridMinimax(BoxGame(Matrix::Zero(2, 2), Vector::Zero(2)), 21, 21);
  EXPECT_EQ(r.minimax_value, 0.0);
  EXPECT_EQ(r.maximin_value, 0.0);
}

TEST(GridMinimaxTest, RandomGamesHaveSmallGap) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    BilinearGame g;
    g.M = Matrix::NullaryExpr(2, 2, [&] { return rng.Uniform(-1, 1); });
    g.c = Vector::NullaryExpr(2, [&] { return rng.Uniform(-1, 1); });
    g.beta_lo = Vector::Constant(2, -1.0);
    g.beta_hi = Vector::Constant(2, 1.0);
    const int res = 101;
    const SaddleResult r = GridMinimax(g, res, res);
    // Lipschitz constants from M directly: over the simplex, ||M^T pi|| is
    // maximal at a vertex; over the box, ||M beta + c|| at a corner.
    double l_beta = 0.0, l_pi = 0.0;
    for (int i = 0; i < 2; ++i) l_beta = std::max(l_beta, g.M.row(i).norm());
    for (int s = 0; s < 4; ++s) {
      Vector b(2);
      b << (s & 1 ? 1 : -1), (s & 2 ? 1 : -1);
      l_pi = std::max(l_pi, (g.M * b + g.c).norm());
    }
    const double step = 2.0 / (res - 1);
    const double bound = 2.0 * step * std::sqrt(2.0) * std::max(l_pi, l_beta);
    EXPECT_GE(r.gap, -1e-12);
    EXPECT_LE(std::abs(r.gap), bound);
  }
}

TEST(GridMinimaxTest, MinimaxMonotoneInBudget) {
  Rng rng(7);
  const Dataset data = RegressionData(rng, 15, 2);
  const LinearModel ref = RidgeClosedForm(data, 0.0);
  BilinearGame g = BoxGame(Matrix::NullaryExpr(3, 2, [&] { return rng.Uniform(-1, 1); }),
                           Vector::Zero(3));
  g.policy_set = PolicySetKind::kSimplex;
  g.beta_lo = ref.beta.array() - 2.0;
  g.beta_hi = ref.beta.array() + 2.0;
  double previous = -std::numeric_limits<double>::infinity();
  for (double eps : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    g.beta_set = BuildFgood(data, ref, eps, 100.0, LossKind::kLeastSquares);
    const double value = GridMinimax(g, 21, 41).minimax_value;
    EXPECT_GE(value, previous);
    previous = value;
  }
}

TEST(GridMinimaxTest, EmptyBudgetIsInfeasible) {
  Rng rng(8);
  const Dataset data = RegressionData(rng, 10, 1);
  BilinearGame g = BoxGame(Matrix::Ones(1, 1), Vector::Zero(1));
  g.beta_lo = Vector::Constant(1, 50.0);
  g.beta_hi = Vector::Constant(1, 60.0);
  g.beta_set = BuildFgood(data, RidgeClosedForm(data, 0.0), 0.1, 1e6, LossKind::kLeastSquares);
  try {
    GridMinimax(g, 11, 11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(EquivalenceTest, NotClaimedForIntegerProblems) {
  Rng rng(9);
  const Dataset data = RegressionData(rng, 10, 2);
  const UnlabeledSet unl = UnlabeledSet::Make(Matrix::Ones(3, 2));
  const EquivalenceReport r = CheckEquivalence(
      data, unl, OpCostProblem{KnapsackSpec{Vector::Zero(3), 1}}, 1.0, 1.0, NelderMeadConfig{});
  EXPECT_FALSE(r.claimed);
  EXPECT_NE(r.reason.find("knapsack"), std::string::npos);
}

TEST(EquivalenceTest, NotClaimedForNonConvexLoss) {
  Rng rng(10);
  const Dataset data = RegressionData(rng, 10, 2);
  const UnlabeledSet unl = UnlabeledSet::Make(Matrix::Ones(3, 2));
  EquivalenceOptions opts;
  opts.loss_kind = LossKind::kZeroOne;
  const EquivalenceReport r =
      CheckEquivalence(data, unl, OpCostProblem{BilinearSpec{Vector::Zero(3)}}, 1.0, 1.0,
                       NelderMeadConfig{}, opts);
  EXPECT_FALSE(r.claimed);
}

TEST(EquivalenceTest, SymmetricGameGivesMatchingPolicies) {
  // Two mirrored rows with equal costs: both sides pick the same vertex.
  Rng rng(11);
  const Dataset data = RegressionData(rng, 20, 2);
  Matrix U(2, 2);
  U << 1.0, 0.0, 0.0, 1.0;
  const EquivalenceReport r =
      CheckEquivalence(data, UnlabeledSet::Make(U), OpCostProblem{BilinearSpec{Vector::Zero(2)}},
                       1.0, 1.0, NelderMeadConfig{}, {Bias::kPessimistic, 101, 101});
  ASSERT_TRUE(r.claimed);
  EXPECT_LE(r.policy_distance, 2.0 * r.grid_step * std::sqrt(2.0));
}

}  // namespace
}  // namespace opcost
