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

#include "opcost/problems.h"

#include <gtest/gtest.h>

#include "opcost/error.h"
#include "opcost/random.h"
#include "oracles.h"

namespace opcost {
namespace {

TEST(SchedulingTest, ClinicGraphIsValid) {
  const PrecedenceDag dag = PrecedenceDag::ClinicExample();
  EXPECT_NO_THROW(ValidateDag(dag, 6));
  EXPECT_THROW(ValidateDag(dag, 5), Error);
}

TEST(SchedulingTest, CycleRejected) {
  PrecedenceDag dag;
  dag.num_events = 3;
  dag.source = 0;
  dag.sink = 2;
  dag.edges = {{0, 1, 0}, {1, 2, 0}, {2, 1, 0}};
  EXPECT_THROW(ValidateDag(dag), Error);
}

TEST(SchedulingTest, DanglingEventRejected) {
  PrecedenceDag dag;
  dag.num_events = 4;
  dag.source = 0;
  dag.sink = 2;
  dag.edges = {{0, 1, 0}, {1, 2, 0}, {0, 3, 0}};
  EXPECT_THROW(ValidateDag(dag), Error);
}

TEST(SchedulingTest, ClinicLongestPath) {
  // Paths 0-1-4: w0+w4; 0-1-3-4: w0+w2+w5; 0-2-3-4: w1+w3+w5.
  Vector w(6);
  w << 1, 2, 3, 4, 10, 1;
  const PrecedenceDag dag = PrecedenceDag::ClinicExample();
  EXPECT_DOUBLE_EQ(DagLongestPath(dag, w), 11.0);
  const PolicySolution s = SolveSchedule(dag, w);
  EXPECT_DOUBLE_EQ(s.objective_value, 11.0);
  for (size_t k = 0; k < dag.edges.size(); ++k) {
    EXPECT_GE(s.policy(dag.edges[k].to) - s.policy(dag.edges[k].from), w(k) - 1e-12);
  }
}

TEST(SchedulingTest, LpAgreesWithLongestPathOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int events = 2 + static_cast<int>(rng.Below(7));
    const PrecedenceDag dag = oracle::RandomDag(rng, events, 4);
    Vector w(dag.edges.size());
    for (Eigen::Index k = 0; k < w.size(); ++k) w(k) = rng.Uniform(0.0, 5.0);
    const double expected = oracle::LongestPathByPaths(dag, w);
    EXPECT_NEAR(SolveScheduleLp(dag, w).objective_value, expected, 1e-8);
    EXPECT_NEAR(SolveSchedule(dag, w).objective_value, expected, 1e-12);
  }
}

TEST(SchedulingTest, NegativeDurationsKeepScheduleNonnegative) {
  Vector w(6);
  w << -1, -2, 3, -4, -5, 1;
  const PolicySolution s = SolveSchedule(PrecedenceDag::ClinicExample(), w);
  EXPECT_GE(s.policy.minCoeff(), 0.0);
  EXPECT_NEAR(s.objective_value,
              oracle::LongestPathByPaths(PrecedenceDag::ClinicExample(), w), 1e-12);
}

TEST(KnapsackTest, PicksTopPositiveValues) {
  Vector v(5);
  v << 3, -1, 5, 2, 0.5;
  const PolicySolution s = SolveKnapsack(v, 2);
  EXPECT_DOUBLE_EQ(s.objective_value, 8.0);
  EXPECT_DOUBLE_EQ(s.policy(0) + s.policy(2), 2.0);
}

TEST(KnapsackTest, NeverTakesNegativeItems) {
  Vector v(3);
  v << -3, -1, -2;
  EXPECT_DOUBLE_EQ(SolveKnapsack(v, 2).objective_value, 0.0);
}

TEST(KnapsackTest, MatchesBruteForce) {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng.Below(10));
    Vector v(m);
    for (int i = 0; i < m; ++i) v(i) = rng.Uniform(-3, 5);
    const int cap = static_cast<int>(rng.Below(m + 1));
    EXPECT_NEAR(SolveKnapsack(v, cap).objective_value, oracle::KnapsackBruteForce(v, cap),
                1e-12);
  }
}

TEST(KnapsackTest, CapacityOutOfRange) {
  EXPECT_THROW(SolveKnapsack(Vector::Ones(3), 4), Error);
  EXPECT_THROW(SolveKnapsack(Vector::Ones(3), -1), Error);
}

TEST(StaffingTest, CallCenterCoverageShape) {
  const StaffingSpec spec = StaffingSpec::CallCenter();
  EXPECT_EQ(spec.coverage.rows(), 24);
  EXPECT_EQ(spec.coverage.cols(), 3);
  EXPECT_EQ(spec.coverage.colwise().sum().maxCoeff(), 10);
  EXPECT_NO_THROW(ValidateStaffing(spec));
}

TEST(StaffingTest, CallCenterConstantDemand) {
  // Every period needs 2 staff; all three shifts must carry 2.
  const StaffingSpec spec = StaffingSpec::CallCenter();
  const PolicySolution s = SolveStaffing(spec.coverage, Vector::Constant(24, 2.0));
  EXPECT_DOUBLE_EQ(s.objective_value, 6.0);
}

TEST(StaffingTest, MatchesBruteForce) {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int periods = 2 + static_cast<int>(rng.Below(5));
    const int shifts = 1 + static_cast<int>(rng.Below(3));
    Eigen::MatrixXi a(periods, shifts);
    for (int i = 0; i < periods; ++i) {
      for (int j = 0; j < shifts; ++j) a(i, j) = rng.Uniform() < 0.5 ? 1 : 0;
      if (a.row(i).sum() == 0) a(i, rng.Below(shifts)) = 1;
    }
    Vector demand(periods);
    for (int i = 0; i < periods; ++i) demand(i) = rng.Uniform(-1.0, 4.0);
    const PolicySolution s = SolveStaffing(a, demand);
    EXPECT_DOUBLE_EQ(s.objective_value,
                     static_cast<double>(oracle::StaffingBruteForce(a, demand, 4)));
    const Vector covered = a.cast<double>() * s.policy;
    for (int i = 0; i < periods; ++i) EXPECT_GE(covered(i), std::ceil(demand(i) - 1e-9));
  }
}

TEST(StaffingTest, UncoveredPeriodIsInfeasible) {
  Eigen::MatrixXi a(2, 1);
  a << 1, 0;
  try {
    SolveStaffing(a, Vector::Ones(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasible);
  }
}

TEST(BilinearTest, SimplexPicksCheapestVertex) {
  BilinearSpec spec;
  Vector v(3);
  v << 2, -1, -1;
  const PolicySolution s = SolveBilinear(v, spec);
  EXPECT_DOUBLE_EQ(s.policy(1), 1.0);
  EXPECT_DOUBLE_EQ(s.objective_value, -1.0);
}

TEST(BilinearTest, BoxPicksBoundsBySign) {
  BilinearSpec spec;
  spec.policy_set = PolicySetKind::kBox;
  spec.box_lo = -1.0;
  spec.box_hi = 2.0;
  Vector v(2);
  v << 1, -3;
  const PolicySolution s = SolveBilinear(v, spec);
  EXPECT_DOUBLE_EQ(s.objective_value, -1.0 - 6.0);
}

TEST(OpCostProblemTest, SensesAndDispatch) {
  OpCostProblem knap{KnapsackSpec{Vector::Zero(2), 1}};
  EXPECT_EQ(knap.kind(), ProblemKind::kKnapsack);
  EXPECT_EQ(knap.sense(), InnerSense::kMaxValue);
  OpCostProblem sched{PrecedenceDag::ClinicExample()};
  EXPECT_EQ(sched.sense(), InnerSense::kMinCost);

  Matrix X(2, 1);
  X << 1, 2;
  const UnlabeledSet unl = UnlabeledSet::Make(X);
  const LinearModel model{Vector::Ones(1)};
  const PolicySolution s = SolveInner(knap, model, unl);
  EXPECT_DOUBLE_EQ(s.objective_value, 2.0);
  EXPECT_DOUBLE_EQ(EvaluatePolicy(knap, model, unl, s.policy), 2.0);
  EXPECT_LE(PolicyViolation(knap, model, unl, s.policy), 0.0);
}

TEST(OpCostProblemTest, ScheduleViolationDetected) {
  const OpCostProblem problem{PrecedenceDag::ClinicExample()};
  const UnlabeledSet unl = UnlabeledSet::Make(Matrix::Ones(6, 1));
  const LinearModel model{Vector::Ones(1)};
  EXPECT_GT(PolicyViolation(problem, model, unl, Vector::Zero(5)), 0.5);
  const PolicySolution s = SolveInner(problem, model, unl);
  EXPECT_LE(PolicyViolation(problem, model, unl, s.policy), 1e-12);
}

}  // namespace
}  // namespace opcost
