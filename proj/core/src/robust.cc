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

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {

std::string_view LossKindName(LossKind kind) {
  switch (kind) {
    case LossKind::kLeastSquares:
      return "least-squares";
    case LossKind::kHinge:
      return "hinge";
    case LossKind::kLogistic:
      return "logistic";
    case LossKind::kExponential:
      return "exponential";
    case LossKind::kRamp:
      return "ramp";
    case LossKind::kZeroOne:
      return "zero-one";
  }
  return "unknown";
}

LossKind ParseLossKind(std::string_view name) {
  for (LossKind kind : {LossKind::kLeastSquares, LossKind::kHinge, LossKind::kLogistic,
                        LossKind::kExponential, LossKind::kRamp, LossKind::kZeroOne}) {
    if (name == LossKindName(kind)) return kind;
  }
  Fail(ErrorCode::kInvalidInput, "unknown loss kind '" + std::string(name) + "'");
}

double PointLoss(LossKind kind, double prediction, double label) {
  const double margin = label * prediction;
  switch (kind) {
    case LossKind::kLeastSquares:
      return (label - prediction) * (label - prediction);
    case LossKind::kHinge:
      return std::max(0.0, 1.0 - margin);
    case LossKind::kLogistic:
      // log(1 + exp(-margin)) without overflow.
      return margin > 0.0 ? std::log1p(std::exp(-margin))
                          : -margin + std::log1p(std::exp(margin));
    case LossKind::kExponential:
      return std::exp(-margin);
    case LossKind::kRamp:
      return std::min(1.0, std::max(0.0, 1.0 - margin));
    case LossKind::kZeroOne:
      return (prediction > 0.0 ? 1.0 : -1.0) != label ? 1.0 : 0.0;
  }
  Fail(ErrorCode::kInvalidInput, "unknown loss kind");
}

double TotalLoss(LossKind kind, const Vector& beta, const Dataset& data) {
  Require(beta.size() == data.p(), ErrorCode::kInvalidInput, "loss: dimension mismatch");
  const Vector predictions = data.X * beta;
  double total = 0.0;
  for (Eigen::Index i = 0; i < predictions.size(); ++i) {
    total += PointLoss(kind, predictions(i), data.y(i));
  }
  return total;
}

namespace {

double NormQ(const Vector& v, double q) {
  if (std::isinf(q)) return v.cwiseAbs().maxCoeff();
  if (q == 2.0) return v.norm();
  if (q == 1.0) return v.cwiseAbs().sum();
  return std::pow(v.cwiseAbs().array().pow(q).sum(), 1.0 / q);
}

}  // namespace

bool MembershipFgood(const Vector& beta, const UncertaintySet& set) {
  Require(beta.size() == set.data.p(), ErrorCode::kInvalidInput,
          "membership: dimension mismatch");
  const double norm = NormQ(beta, set.q);
  if (norm * norm > set.c2_star) return false;
  return TotalLoss(set.loss_kind, beta, set.data) <= set.c1_star;
}

UncertaintySet BuildFgood(const Dataset& data, const LinearModel& f_star, double epsilon,
                          double c2_star, LossKind kind, double q) {
  Require(f_star.p() == data.p(), ErrorCode::kInvalidInput,
          "reference model dimension mismatch");
  Require(epsilon >= 0.0 && std::isfinite(epsilon), ErrorCode::kInvalidInput,
          "loss slack must be finite and nonnegative");
  Require(c2_star >= 0.0 && std::isfinite(c2_star), ErrorCode::kInvalidInput,
          "norm budget must be finite and nonnegative");
  Require(q >= 1.0, ErrorCode::kInvalidInput, "norm index must be >= 1");
  UncertaintySet set;
  set.loss_kind = kind;
  set.data = data;
  set.f_star = f_star;
  set.epsilon_slack = epsilon;
  set.c1_star = TotalLoss(kind, f_star.beta, data) + epsilon;
  set.c2_star = c2_star;
  set.q = q;
  return set;
}

void BilinearGame::Validate() const {
  Require(M.rows() >= 1 && M.cols() >= 1, ErrorCode::kInvalidInput, "empty game matrix");
  Require(c.size() == M.rows(), ErrorCode::kInvalidInput, "cost vector length mismatch");
  Require(beta_lo.size() == M.cols() && beta_hi.size() == M.cols(),
          ErrorCode::kInvalidInput, "beta box has wrong dimension");
  Require((beta_lo.array() <= beta_hi.array()).all(), ErrorCode::kInvalidInput,
          "empty beta box");
  Require(policy_set == PolicySetKind::kSimplex || pi_lo <= pi_hi,
          ErrorCode::kInvalidInput, "empty policy box");
  Require(M.allFinite() && c.allFinite(), ErrorCode::kInvalidInput,
          "non-finite game data");
  if (beta_set) {
    Require(beta_set->data.p() == M.cols(), ErrorCode::kInvalidInput,
            "uncertainty set dimension mismatch");
  }
}

namespace {

constexpr double kMaxGridPoints = 2e7;

double GridSize(int resolution, int dims) {
  return std::pow(static_cast<double>(resolution), dims);
}

// Calls visit(index vector) for every point of {0..resolution-1}^dims.
template <typename Visit>
void ForEachBoxIndex(int resolution, int dims, Visit visit) {
  std::vector<int> index(dims, 0);
  while (true) {
    visit(index);
    int d = dims - 1;
    while (d >= 0 && ++index[d] == resolution) index[d--] = 0;
    if (d < 0) return;
  }
}

}  // namespace

Matrix PolicyGrid(const BilinearGame& game, int resolution) {
  Require(resolution >= 2, ErrorCode::kInvalidInput, "grid resolution must be >= 2");
  const int m = static_cast<int>(game.M.rows());
  std::vector<Vector> points;
  if (game.policy_set == PolicySetKind::kSimplex) {
    const int total = resolution - 1;
    // Number of compositions of `total` into m parts.
    double count = 1.0;
    for (int i = 1; i < m; ++i) count = count * (total + i) / i;
    Require(count <= kMaxGridPoints, ErrorCode::kTooLarge, "policy grid too large");
    std::vector<int> parts(m, 0);
    // Enumerate compositions in lexicographic order of (parts[0], parts[1], ...).
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == m - 1) {
        parts[i] = left;
        Vector pi(m);
        for (int k = 0; k < m; ++k) pi(k) = static_cast<double>(parts[k]) / total;
        points.push_back(std::move(pi));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        parts[i] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, total);
  } else {
    Require(GridSize(resolution, m) <= kMaxGridPoints, ErrorCode::kTooLarge,
            "policy grid too large");
    const double step = (game.pi_hi - game.pi_lo) / (resolution - 1);
    ForEachBoxIndex(resolution, m, [&](const std::vector<int>& index) {
      Vector pi(m);
      for (int k = 0; k < m; ++k) pi(k) = game.pi_lo + step * index[k];
      points.push_back(std::move(pi));
    });
  }
  Matrix grid(m, points.size());
  for (size_t k = 0; k < points.size(); ++k) grid.col(k) = points[k];
  return grid;
}

Matrix BetaGrid(const BilinearGame& game, int resolution) {
  Require(resolution >= 2, ErrorCode::kInvalidInput, "grid resolution must be >= 2");
  const int p = static_cast<int>(game.M.cols());
  Require(GridSize(resolution, p) <= kMaxGridPoints, ErrorCode::kTooLarge,
          "beta grid too large");
  std::vector<Vector> points;
  ForEachBoxIndex(resolution, p, [&](const std::vector<int>& index) {
    Vector beta(p);
    for (int j = 0; j < p; ++j) {
      const double step = (game.beta_hi(j) - game.beta_lo(j)) / (resolution - 1);
      beta(j) = game.beta_lo(j) + step * index[j];
    }
    if (!game.beta_set || MembershipFgood(beta, *game.beta_set)) {
      points.push_back(std::move(beta));
    }
  });
  Require(!points.empty(), ErrorCode::kInfeasible,
          "no beta grid point lies in the uncertainty set");
  Matrix grid(p, points.size());
  for (size_t k = 0; k < points.size(); ++k) grid.col(k) = points[k];
  return grid;
}

SaddleResult GridMinimax(const BilinearGame& game, int pi_resolution,
                         int beta_resolution) {
  game.Validate();
  const Matrix pis = PolicyGrid(game, pi_resolution);
  const Matrix betas = BetaGrid(game, beta_resolution);
  // values(i, b) = OpCost(pi_i, beta_b) = pi_i^T V(:, b)
  const Matrix V = (game.M * betas).colwise() + game.c;
  const Eigen::Index num_pi = pis.cols();
  const Eigen::Index num_beta = betas.cols();

  SaddleResult result;
  result.minimax_value = std::numeric_limits<double>::infinity();
  Vector column_min = Vector::Constant(num_beta, std::numeric_limits<double>::infinity());
  Eigen::Index best_pi = 0;
  constexpr Eigen::Index kBlock = 256;
  for (Eigen::Index start = 0; start < num_pi; start += kBlock) {
    const Eigen::Index rows = std::min(kBlock, num_pi - start);
    const Matrix block = pis.middleCols(start, rows).transpose() * V;
    for (Eigen::Index r = 0; r < rows; ++r) {
      const double row_max = block.row(r).maxCoeff();
      if (row_max < result.minimax_value) {
        result.minimax_value = row_max;
        best_pi = start + r;
      }
    }
    column_min = column_min.cwiseMin(block.colwise().minCoeff().transpose());
  }
  Eigen::Index best_beta = 0;
  result.maximin_value = column_min.maxCoeff(&best_beta);
  for (Eigen::Index b = 0; b < num_beta; ++b) {
    if (column_min(b) == result.maximin_value) {
      best_beta = b;
      break;
    }
  }
  result.pi_star = pis.col(best_pi);
  result.beta_star = betas.col(best_beta);
  result.gap = result.minimax_value - result.maximin_value;

  const int m = static_cast<int>(game.M.rows());
  const int p = static_cast<int>(game.M.cols());
  result.pi_step = game.policy_set == PolicySetKind::kSimplex
                       ? 1.0 / (pi_resolution - 1)
                       : (game.pi_hi - game.pi_lo) / (pi_resolution - 1);
  result.beta_step = (game.beta_hi - game.beta_lo).maxCoeff() / (beta_resolution - 1);
  const double lipschitz_pi = V.colwise().norm().maxCoeff();
  const double lipschitz_beta = (game.M.transpose() * pis).colwise().norm().maxCoeff();
  result.tolerance = 2.0 *
                     std::max(result.pi_step * std::sqrt(m), result.beta_step * std::sqrt(p)) *
                     std::max(lipschitz_pi, lipschitz_beta);
  return result;
}

MinMinResult GridMinMin(const BilinearGame& game, int pi_resolution, int beta_resolution) {
  game.Validate();
  const Matrix pis = PolicyGrid(game, pi_resolution);
  const Matrix betas = BetaGrid(game, beta_resolution);
  const Matrix V = (game.M * betas).colwise() + game.c;
  MinMinResult result;
  result.value = std::numeric_limits<double>::infinity();
  Eigen::Index best_pi = 0, best_beta = 0;
  constexpr Eigen::Index kBlock = 256;
  for (Eigen::Index start = 0; start < pis.cols(); start += kBlock) {
    const Eigen::Index rows = std::min(kBlock, pis.cols() - start);
    const Matrix block = pis.middleCols(start, rows).transpose() * V;
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index b = 0; b < block.cols(); ++b) {
        if (block(r, b) < result.value) {
          result.value = block(r, b);
          best_pi = start + r;
          best_beta = b;
        }
      }
    }
  }
  result.pi_star = pis.col(best_pi);
  result.beta_star = betas.col(best_beta);
  return result;
}

EquivalenceReport CheckEquivalence(const Dataset& data, const UnlabeledSet& unlabeled,
                                   const OpCostProblem& problem, double c1, double c2,
                                   const NelderMeadConfig& nm,
                                   const EquivalenceOptions& options) {
  EquivalenceReport report;
  if (problem.kind() != ProblemKind::kBilinear) {
    report.reason = "inner problem '" + std::string(ProblemKindName(problem.kind())) +
                    "' is not a bilinear game over a convex policy set";
    return report;
  }
  if (options.loss_kind != LossKind::kLeastSquares) {
    report.reason = "the fit uses least-squares loss; a '" +
                    std::string(LossKindName(options.loss_kind)) +
                    "' uncertainty set does not correspond to it";
    return report;
  }
  Require(data.p() == unlabeled.p(), ErrorCode::kInvalidInput,
          "training and unlabeled feature counts differ");
  const auto& spec = std::get<BilinearSpec>(problem.spec);

  const SimultaneousConfig config{c1, c2, options.bias, problem};
  const FitResult fit = FitSimultaneous(data, unlabeled, config, nm);
  report.fitted_beta = fit.model.beta;
  report.fit_policy = fit.policy.policy;
  report.c1_star = LeastSquaresLoss(fit.model, data);
  report.c2_star = fit.model.beta.squaredNorm();

  LinearModel reference;
  try {
    reference = RidgeClosedForm(data, 0.0);
  } catch (const Error&) {
    reference = RidgeClosedForm(data, std::max(c2, 1e-8));
  }
  const double slack =
      std::max(0.0, report.c1_star - LeastSquaresLoss(reference, data));
  UncertaintySet set =
      BuildFgood(data, reference, slack, report.c2_star, LossKind::kLeastSquares);
  // Budgets sit exactly at the fitted model; the relative margin absorbs the
  // rounding of grid coordinates that reconstruct beta°.
  set.c1_star = report.c1_star * (1.0 + Tolerances::kNormCheckRelative);
  set.c2_star = report.c2_star * (1.0 + Tolerances::kNormCheckRelative);

  BilinearGame game;
  game.M = unlabeled.X;
  game.c = spec.costs;
  game.policy_set = spec.policy_set;
  game.pi_lo = spec.box_lo;
  game.pi_hi = spec.box_hi;
  // The beta grid is centred on beta° with an odd resolution, so beta° is a
  // grid point; the half-width 2R covers the whole ball of radius R.
  const double radius = std::max(std::sqrt(report.c2_star), 1e-12);
  game.beta_lo = report.fitted_beta.array() - 2.0 * radius;
  game.beta_hi = report.fitted_beta.array() + 2.0 * radius;
  game.beta_set = set;
  const int beta_resolution = options.beta_resolution | 1;

  double ro_value = 0.0;
  if (options.bias == Bias::kPessimistic) {
    report.saddle = GridMinimax(game, options.pi_resolution, beta_resolution);
    report.ro_policy = report.saddle.pi_star;
    ro_value = report.saddle.minimax_value;
    report.grid_step = report.saddle.pi_step;
  } else {
    const MinMinResult minmin = GridMinMin(game, options.pi_resolution, beta_resolution);
    report.ro_policy = minmin.pi_star;
    ro_value = minmin.value;
    report.grid_step = spec.policy_set == PolicySetKind::kSimplex
                           ? 1.0 / (options.pi_resolution - 1)
                           : (spec.box_hi - spec.box_lo) / (options.pi_resolution - 1);
  }
  report.policy_distance = (report.ro_policy - report.fit_policy).norm();
  report.value_gap = std::abs(ro_value - fit.policy.objective_value);
  report.claimed = true;
  return report;
}

}  // namespace opcost
