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

// Loss-induced uncertainty sets, exhaustive grid saddle-point solvers for
// small bilinear games, and a constructive check that the pessimistic fit and
// the robust policy coincide on convex instances.

#ifndef OPCOST_ROBUST_H_
#define OPCOST_ROBUST_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opcost/model.h"
#include "opcost/nelder_mead.h"
#include "opcost/problems.h"
#include "opcost/simultaneous.h"

namespace opcost {

enum class LossKind { kLeastSquares, kHinge, kLogistic, kExponential, kRamp, kZeroOne };

std::string_view LossKindName(LossKind kind);
LossKind ParseLossKind(std::string_view name);

// Loss of one prediction. Classification kinds expect labels in {-1, +1}; the
// zero-one loss compares sign(prediction) with the label.
double PointLoss(LossKind kind, double prediction, double label);
double TotalLoss(LossKind kind, const Vector& beta, const Dataset& data);

// {beta : total loss <= c1_star and ||beta||_q^2 <= c2_star}.
struct UncertaintySet {
  LossKind loss_kind = LossKind::kLeastSquares;
  Dataset data;
  LinearModel f_star;
  double epsilon_slack = 0.0;
  double c1_star = 0.0;
  double c2_star = 0.0;
  double q = 2.0;

  bool convex() const { return loss_kind != LossKind::kRamp && loss_kind != LossKind::kZeroOne; }
};

bool MembershipFgood(const Vector& beta, const UncertaintySet& set);

UncertaintySet BuildFgood(const Dataset& data, const LinearModel& f_star, double epsilon,
                          double c2_star, LossKind kind, double q = 2.0);

// OpCost(pi, beta) = pi^T (M beta + c). Policies range over the probability
// simplex or the box [pi_lo, pi_hi]^m; beta ranges over the box
// [beta_lo, beta_hi], optionally intersected with an uncertainty set.
struct BilinearGame {
  Matrix M;
  Vector c;
  PolicySetKind policy_set = PolicySetKind::kSimplex;
  double pi_lo = 0.0;
  double pi_hi = 1.0;
  Vector beta_lo;
  Vector beta_hi;
  std::optional<UncertaintySet> beta_set;

  double OpCost(const Vector& pi, const Vector& beta) const {
    return pi.dot(M * beta + c);
  }
  void Validate() const;
};

// Grid points as columns.
Matrix PolicyGrid(const BilinearGame& game, int resolution);
Matrix BetaGrid(const BilinearGame& game, int resolution);

struct SaddleResult {
  double minimax_value = 0.0;  // min over pi of max over beta
  double maximin_value = 0.0;  // max over beta of min over pi
  Vector pi_star;              // minimax policy
  Vector beta_star;            // maximin coefficients
  double gap = 0.0;            // minimax - maximin
  double pi_step = 0.0;
  double beta_step = 0.0;
  // 2 * max(step_pi sqrt(m), step_beta sqrt(p)) * max(L_pi, L_beta), where
  // L_pi = max ||M beta + c|| and L_beta = max ||M^T pi|| over the grids.
  double tolerance = 0.0;
};

// Exhaustive on the grids. Ties go to the earliest grid point. Throws
// kInfeasible when no beta grid point lies in the uncertainty set.
SaddleResult GridMinimax(const BilinearGame& game, int pi_resolution, int beta_resolution);

struct MinMinResult {
  double value = 0.0;
  Vector pi_star;
  Vector beta_star;
};

// min over pi and beta jointly (optimistic counterpart).
MinMinResult GridMinMin(const BilinearGame& game, int pi_resolution, int beta_resolution);

struct EquivalenceReport {
  bool claimed = false;  // false when the assumptions fail
  std::string reason;    // why equivalence is not claimed
  Vector fitted_beta;
  Vector fit_policy;     // policy from the biased fit
  Vector ro_policy;      // policy from the grid robust (or min-min) problem
  double policy_distance = 0.0;
  double value_gap = 0.0;
  double grid_step = 0.0;
  double c1_star = 0.0;
  double c2_star = 0.0;
  SaddleResult saddle;   // filled for the pessimistic check
};

struct EquivalenceOptions {
  Bias bias = Bias::kPessimistic;
  int pi_resolution = 201;
  int beta_resolution = 201;
  LossKind loss_kind = LossKind::kLeastSquares;
};

// Fits the biased simultaneous model, derives the loss and norm budgets from
// the fit, solves the robust (pessimistic) or min-min (optimistic) problem on
// grids and compares the two policies.
EquivalenceReport CheckEquivalence(const Dataset& data, const UnlabeledSet& unlabeled,
                                   const OpCostProblem& problem, double c1, double c2,
                                   const NelderMeadConfig& nm,
                                   const EquivalenceOptions& options = {});

}  // namespace opcost

#endif  // OPCOST_ROBUST_H_
