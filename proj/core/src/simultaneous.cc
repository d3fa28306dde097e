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

#include "opcost/simultaneous.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "opcost/error.h"

namespace opcost {

std::string_view BiasName(Bias bias) {
  return bias == Bias::kOptimistic ? "optimistic" : "pessimistic";
}

int BiasSign(Bias bias, InnerSense sense) {
  const bool min_cost = sense == InnerSense::kMinCost;
  const bool optimistic = bias == Bias::kOptimistic;
  return min_cost == optimistic ? 1 : -1;
}

void SimultaneousConfig::Validate() const {
  Require(c1 >= 0.0 && std::isfinite(c1), ErrorCode::kInvalidInput,
          "C1 must be a finite nonnegative number");
  Require(c2 >= 0.0 && std::isfinite(c2), ErrorCode::kInvalidInput,
          "C2 must be a finite nonnegative number");
}

double ObjectiveValue(const Vector& beta, const Dataset& data,
                      const UnlabeledSet& unlabeled, const SimultaneousConfig& config) {
  const LinearModel model{beta};
  double value = LeastSquaresLoss(model, data) + config.c2 * beta.squaredNorm();
  if (config.c1 != 0.0) {
    const double inner = SolveInner(config.problem, model, unlabeled).objective_value;
    value += BiasSign(config.bias, config.problem.sense()) * config.c1 * inner;
  }
  return value;
}

namespace {

Vector RidgeStart(const Dataset& data, double c2) {
  try {
    return RidgeClosedForm(data, c2).beta;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kSingular) throw;
    // Fall back to a tiny ridge so the start is still informative.
    return RidgeClosedForm(data, std::max(c2, 1e-8)).beta;
  }
}

FitResult FitImpl(const Dataset& data, const UnlabeledSet* unlabeled,
                  const SimultaneousConfig& config, const NelderMeadConfig& nm,
                  const std::vector<Vector>& extra_starts) {
  config.Validate();
  const Vector ridge = RidgeStart(data, config.c2);
  auto objective = [&](const Vector& beta) {
    if (config.c1 == 0.0) {
      const LinearModel model{beta};
      return LeastSquaresLoss(model, data) + config.c2 * beta.squaredNorm();
    }
    return ObjectiveValue(beta, data, *unlabeled, config);
  };
  const NelderMeadResult result =
      NelderMeadMinimize(objective, Vector::Zero(data.p()), nm,
                         [&] {
                           std::vector<Vector> starts = {ridge};
                           starts.insert(starts.end(), extra_starts.begin(),
                                         extra_starts.end());
                           return starts;
                         }());
  FitResult fit;
  fit.model = LinearModel{result.x};
  fit.objective = result.value;
  fit.converged = result.converged;
  if (unlabeled != nullptr) fit.policy = SolveInner(config.problem, fit.model, *unlabeled);
  return fit;
}

}  // namespace

FitResult FitSimultaneous(const Dataset& data, const UnlabeledSet& unlabeled,
                          const SimultaneousConfig& config, const NelderMeadConfig& nm,
                          const std::vector<Vector>& extra_starts) {
  Require(data.p() == unlabeled.p(), ErrorCode::kInvalidInput,
          "training and unlabeled feature counts differ");
  ValidateProblem(config.problem, unlabeled);
  return FitImpl(data, &unlabeled, config, nm, extra_starts);
}

LinearModel FitSequential(const Dataset& data, double c2, const NelderMeadConfig& nm) {
  SimultaneousConfig config;
  config.c2 = c2;
  return FitImpl(data, nullptr, config, nm, {}).model;
}

std::vector<double> DefaultC1Grid(double ceiling, int points) {
  Require(ceiling > 0.0 && std::isfinite(ceiling), ErrorCode::kInvalidInput,
          "C1 ceiling must be positive");
  Require(points >= 2, ErrorCode::kInvalidInput, "C1 grid needs at least two points");
  std::vector<double> grid = {0.0};
  const int logs = points - 1;
  const double lo = std::log10(ceiling * 1e-3);
  const double hi = std::log10(ceiling);
  for (int k = 0; k < logs; ++k) {
    const double t = logs == 1 ? 1.0 : static_cast<double>(k) / (logs - 1);
    grid.push_back(k == logs - 1 ? ceiling : std::pow(10.0, lo + t * (hi - lo)));
  }
  return grid;
}

SweepResult SweepC1(const Dataset& data, const UnlabeledSet& unlabeled,
                    const std::vector<double>& c1_grid, double c2, Bias bias,
                    const OpCostProblem& problem, const NelderMeadConfig& nm,
                    const SweepOptions& options) {
  Require(!c1_grid.empty(), ErrorCode::kInvalidInput, "C1 grid is empty");
  Require(std::is_sorted(c1_grid.begin(), c1_grid.end()), ErrorCode::kInvalidInput,
          "C1 grid must be sorted");
  Require(c1_grid.front() >= 0.0, ErrorCode::kInvalidInput, "C1 values must be >= 0");
  Require(data.p() == unlabeled.p(), ErrorCode::kInvalidInput,
          "training and unlabeled feature counts differ");
  ValidateProblem(problem, unlabeled);

  SweepResult result;
  std::optional<Vector> previous;
  for (double c1 : c1_grid) {
    SweepRow row;
    row.c1 = c1;
    try {
      SimultaneousConfig config{c1, c2, bias, problem};
      std::vector<Vector> extra;
      if (options.warm_start && previous) extra.push_back(*previous);
      const FitResult fit = FitSimultaneous(data, unlabeled, config, nm, extra);
      row.beta = fit.model.beta;
      row.opcost = fit.policy.objective_value;
      row.train_loss = LeastSquaresLoss(fit.model, data);
      row.penalized_objective = row.train_loss + c2 * row.beta.squaredNorm();
      row.r2_train = RSquared(PredictAll(fit.model, data.X), data.y);
      if (options.test != nullptr) {
        row.r2_test = RSquared(PredictAll(fit.model, options.test->X), options.test->y);
      }
      row.converged = fit.converged;
      previous = row.beta;
    } catch (const Error& e) {
      row.beta = Vector::Constant(data.p(), std::numeric_limits<double>::quiet_NaN());
      row.error = e.what();
    }
    result.rows.push_back(std::move(row));
  }

  bool any = false;
  double lo = 0.0, hi = 0.0, r2_lo = 0.0, r2_hi = 0.0;
  for (const SweepRow& row : result.rows) {
    if (!row.error.empty()) continue;
    if (!any) {
      lo = hi = row.opcost;
      r2_lo = r2_hi = row.r2_train;
      any = true;
    }
    lo = std::min(lo, row.opcost);
    hi = std::max(hi, row.opcost);
    r2_lo = std::min(r2_lo, row.r2_train);
    r2_hi = std::max(r2_hi, row.r2_train);
  }
  if (any) {
    result.cost_range = hi - lo;
    result.r2_train_range = r2_hi - r2_lo;
    const SweepRow& first = result.rows.front();
    if (first.error.empty() && first.opcost != 0.0) {
      result.relative_cost_range = result.cost_range / std::abs(first.opcost);
    } else {
      result.relative_cost_range = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return result;
}

}  // namespace opcost
