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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {

// --- Scheduling -------------------------------------------------------------

PrecedenceDag PrecedenceDag::ClinicExample() {
  PrecedenceDag dag;
  dag.num_events = 5;
  dag.source = 0;
  dag.sink = 4;
  dag.edges = {{0, 1, 0}, {0, 2, 1}, {1, 3, 2}, {2, 3, 3}, {1, 4, 4}, {3, 4, 5}};
  return dag;
}

namespace {

std::vector<bool> Reachable(const PrecedenceDag& dag, int start, bool forward) {
  std::vector<bool> seen(dag.num_events, false);
  std::vector<int> stack = {start};
  seen[start] = true;
  while (!stack.empty()) {
    const int a = stack.back();
    stack.pop_back();
    for (const DagEdge& e : dag.edges) {
      const int from = forward ? e.from : e.to;
      const int to = forward ? e.to : e.from;
      if (from == a && !seen[to]) {
        seen[to] = true;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<int> TopologicalOrder(const PrecedenceDag& dag) {
  std::vector<int> indegree(dag.num_events, 0);
  for (const DagEdge& e : dag.edges) ++indegree[e.to];
  std::vector<int> ready;
  for (int a = dag.num_events - 1; a >= 0; --a) {
    if (indegree[a] == 0) ready.push_back(a);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int a = ready.back();
    ready.pop_back();
    order.push_back(a);
    for (const DagEdge& e : dag.edges) {
      if (e.from == a && --indegree[e.to] == 0) ready.push_back(e.to);
    }
  }
  Require(static_cast<int>(order.size()) == dag.num_events, ErrorCode::kInvalidInput,
          "precedence graph has a cycle");
  return order;
}

void ValidateDag(const PrecedenceDag& dag, int num_instances) {
  Require(dag.num_events >= 2, ErrorCode::kInvalidInput,
          "precedence graph needs at least two events");
  auto in_range = [&](int a) { return a >= 0 && a < dag.num_events; };
  Require(in_range(dag.source) && in_range(dag.sink) && dag.source != dag.sink,
          ErrorCode::kInvalidInput, "source/sink out of range or equal");
  Require(!dag.edges.empty(), ErrorCode::kInvalidInput, "precedence graph has no edges");
  for (const DagEdge& e : dag.edges) {
    Require(in_range(e.from) && in_range(e.to) && e.from != e.to,
            ErrorCode::kInvalidInput,
            "edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                ") is out of range or a self-loop");
    Require(e.instance >= 0 && (num_instances < 0 || e.instance < num_instances),
            ErrorCode::kInvalidInput,
            "edge instance index " + std::to_string(e.instance) + " out of range");
  }
  TopologicalOrder(dag);
  const std::vector<bool> from_source = Reachable(dag, dag.source, true);
  const std::vector<bool> to_sink = Reachable(dag, dag.sink, false);
  for (int a = 0; a < dag.num_events; ++a) {
    Require(from_source[a] && to_sink[a], ErrorCode::kInvalidInput,
            "event " + std::to_string(a) + " is not on a source-to-sink path");
  }
}

namespace {

// Longest distance from the source to every event.
Vector LongestDistances(const PrecedenceDag& dag, const Vector& edge_weights) {
  Require(edge_weights.size() == static_cast<Eigen::Index>(dag.edges.size()),
          ErrorCode::kInvalidInput, "one weight per edge required");
  Require(edge_weights.allFinite(), ErrorCode::kInvalidInput, "non-finite edge weight");
  const double unset = -std::numeric_limits<double>::infinity();
  Vector dist = Vector::Constant(dag.num_events, unset);
  dist(dag.source) = 0.0;
  for (int a : TopologicalOrder(dag)) {
    if (dist(a) == unset) continue;
    for (size_t k = 0; k < dag.edges.size(); ++k) {
      const DagEdge& e = dag.edges[k];
      if (e.from == a) dist(e.to) = std::max(dist(e.to), dist(a) + edge_weights(k));
    }
  }
  return dist;
}

}  // namespace

double DagLongestPath(const PrecedenceDag& dag, const Vector& edge_weights) {
  ValidateDag(dag);
  return LongestDistances(dag, edge_weights)(dag.sink);
}

PolicySolution SolveSchedule(const PrecedenceDag& dag, const Vector& edge_weights) {
  ValidateDag(dag);
  Vector dist = LongestDistances(dag, edge_weights);
  const double shift = std::min(0.0, dist.minCoeff());
  PolicySolution solution;
  solution.policy = dist.array() - shift;
  solution.objective_value = solution.policy(dag.sink) - solution.policy(dag.source);
  return solution;
}

PolicySolution SolveScheduleLp(const PrecedenceDag& dag, const Vector& edge_weights) {
  ValidateDag(dag);
  Require(edge_weights.size() == static_cast<Eigen::Index>(dag.edges.size()),
          ErrorCode::kInvalidInput, "one weight per edge required");
  Vector objective = Vector::Zero(dag.num_events);
  objective(dag.sink) += 1.0;
  objective(dag.source) -= 1.0;
  std::vector<LinearRow> rows;
  for (size_t k = 0; k < dag.edges.size(); ++k) {
    LinearRow row;
    row.coefficients = Vector::Zero(dag.num_events);
    row.coefficients(dag.edges[k].from) = 1.0;
    row.coefficients(dag.edges[k].to) = -1.0;
    row.bound = -edge_weights(k);
    row.sense = RowSense::kLessEqual;
    rows.push_back(std::move(row));
  }
  return SolveLp(objective, rows, /*maximize=*/false);
}

Vector EdgeDurations(const LinearModel& model, const PrecedenceDag& dag,
                     const UnlabeledSet& unlabeled) {
  Require(model.p() == unlabeled.p(), ErrorCode::kInvalidInput,
          "model and unlabeled set dimensions differ");
  const Vector predictions = PredictAll(model, unlabeled.X);
  Vector weights(dag.edges.size());
  for (size_t k = 0; k < dag.edges.size(); ++k) {
    weights(k) = predictions(dag.edges[k].instance);
  }
  return weights;
}

PolicySolution OpcostScheduling(const LinearModel& model, const PrecedenceDag& dag,
                                const UnlabeledSet& unlabeled) {
  ValidateDag(dag, unlabeled.m());
  return SolveSchedule(dag, EdgeDurations(model, dag, unlabeled));
}

// --- Knapsack ---------------------------------------------------------------

PolicySolution SolveKnapsack(const Vector& values, int capacity) {
  const int m = static_cast<int>(values.size());
  Require(capacity >= 0 && capacity <= m, ErrorCode::kInvalidInput,
          "knapsack capacity must lie in [0, m]");
  Require(values.allFinite(), ErrorCode::kInvalidInput, "non-finite item value");
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return values(a) > values(b); });
  PolicySolution solution;
  solution.policy = Vector::Zero(m);
  for (int rank = 0; rank < capacity; ++rank) {
    const int i = order[rank];
    if (values(i) <= 0.0) break;
    solution.policy(i) = 1.0;
    solution.objective_value += values(i);
  }
  return solution;
}

namespace {

Vector KnapsackValues(const LinearModel& model, const KnapsackSpec& spec,
                      const UnlabeledSet& unlabeled) {
  Require(spec.fixed_costs.size() == unlabeled.m(), ErrorCode::kInvalidInput,
          "knapsack needs one fixed cost per unlabeled item");
  return PredictAll(model, unlabeled.X) + spec.fixed_costs;
}

}  // namespace

PolicySolution OpcostKnapsack(const LinearModel& model, const KnapsackSpec& spec,
                              const UnlabeledSet& unlabeled) {
  return SolveKnapsack(KnapsackValues(model, spec, unlabeled), spec.capacity);
}

// --- Staffing ---------------------------------------------------------------

StaffingSpec StaffingSpec::CallCenter() {
  StaffingSpec spec;
  spec.coverage = Eigen::MatrixXi::Zero(24, 3);
  for (int i = 0; i <= 9; ++i) spec.coverage(i, 0) = 1;
  for (int i = 7; i <= 16; ++i) spec.coverage(i, 1) = 1;
  for (int i = 14; i <= 23; ++i) spec.coverage(i, 2) = 1;
  spec.max_periods_per_shift = 10;
  return spec;
}

void ValidateStaffing(const StaffingSpec& spec) {
  const Eigen::MatrixXi& a = spec.coverage;
  Require(a.rows() >= 1 && a.cols() >= 1, ErrorCode::kInvalidInput,
          "coverage matrix is empty");
  Require((a.array() == 0 || a.array() == 1).all(), ErrorCode::kInvalidInput,
          "coverage entries must be 0 or 1");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Require(a.row(i).sum() >= 1, ErrorCode::kInvalidInput,
            "period " + std::to_string(i) + " is covered by no shift");
  }
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    Require(a.col(j).sum() <= spec.max_periods_per_shift, ErrorCode::kInvalidInput,
            "shift " + std::to_string(j) + " exceeds the maximum shift length");
  }
}

namespace {

class StaffingSearch {
 public:
  StaffingSearch(const Eigen::MatrixXi& coverage, std::vector<long long> required)
      : a_(coverage), required_(std::move(required)),
        shifts_(static_cast<int>(coverage.cols())),
        periods_(static_cast<int>(coverage.rows())) {
    upper_ = 0;
    for (long long r : required_) upper_ = std::max(upper_, r);
    current_.assign(shifts_, 0);
  }

  bool Run() {
    std::vector<long long> residual = required_;
    Search(0, residual, 0);
    return found_;
  }

  const std::vector<long long>& best() const { return best_; }
  long long best_total() const { return best_total_; }

 private:
  // Can the periods with positive residual still be covered by shifts >= j?
  bool Coverable(const std::vector<long long>& residual, int j) const {
    for (int i = 0; i < periods_; ++i) {
      if (residual[i] <= 0) continue;
      bool covered = false;
      for (int k = j; k < shifts_ && !covered; ++k) covered = a_(i, k) != 0;
      if (!covered) return false;
    }
    return true;
  }

  void Search(int j, std::vector<long long>& residual, long long total) {
    long long max_residual = 0;
    for (long long r : residual) max_residual = std::max(max_residual, r);
    if (found_ && total + max_residual >= best_total_) return;
    if (!Coverable(residual, j)) return;
    if (j == shifts_) {
      // Coverable() with no shifts left means every residual is <= 0.
      best_total_ = total;
      best_ = current_;
      found_ = true;
      return;
    }
    long long useful = 0;  // beyond this, more of shift j covers nothing new
    for (int i = 0; i < periods_; ++i) {
      if (a_(i, j) != 0) useful = std::max(useful, residual[i]);
    }
    useful = std::min(useful, upper_);
    for (long long v = 0; v <= useful; ++v) {
      if (found_ && total + v >= best_total_) break;
      for (int i = 0; i < periods_; ++i) residual[i] -= a_(i, j) * v;
      current_[j] = v;
      Search(j + 1, residual, total + v);
      for (int i = 0; i < periods_; ++i) residual[i] += a_(i, j) * v;
    }
    current_[j] = 0;
  }

  const Eigen::MatrixXi& a_;
  std::vector<long long> required_;
  int shifts_;
  int periods_;
  long long upper_ = 0;
  std::vector<long long> current_;
  std::vector<long long> best_;
  long long best_total_ = 0;
  bool found_ = false;
};

}  // namespace

PolicySolution SolveStaffing(const Eigen::MatrixXi& coverage, const Vector& demand) {
  Require(demand.size() == coverage.rows(), ErrorCode::kInvalidInput,
          "one demand per covered period required");
  Require(demand.allFinite(), ErrorCode::kInvalidInput, "non-finite demand");
  std::vector<long long> required(coverage.rows());
  for (Eigen::Index i = 0; i < coverage.rows(); ++i) {
    const double need = std::ceil(demand(i) - Tolerances::kDemandSlack);
    Require(need < 1e15, ErrorCode::kTooLarge, "staffing demand too large");
    required[i] = need > 0.0 ? static_cast<long long>(need) : 0;
    if (required[i] > 0 && coverage.row(i).sum() == 0) {
      Fail(ErrorCode::kInfeasible,
           "period " + std::to_string(i) + " has positive demand and no covering shift");
    }
  }
  StaffingSearch search(coverage, std::move(required));
  if (!search.Run()) Fail(ErrorCode::kInfeasible, "staffing problem is infeasible");
  PolicySolution solution;
  solution.policy = Vector::Zero(coverage.cols());
  for (Eigen::Index j = 0; j < coverage.cols(); ++j) {
    solution.policy(j) = static_cast<double>(search.best()[j]);
  }
  solution.objective_value = static_cast<double>(search.best_total());
  return solution;
}

namespace {

Vector StaffingDemand(const LinearModel& model, const StaffingSpec& spec,
                      const UnlabeledSet& unlabeled) {
  Require(unlabeled.m() == spec.coverage.rows(), ErrorCode::kInvalidInput,
          "staffing needs one unlabeled row per period");
  return PredictAll(model, unlabeled.X).array().square();
}

}  // namespace

PolicySolution OpcostStaffing(const LinearModel& model, const StaffingSpec& spec,
                              const UnlabeledSet& unlabeled) {
  ValidateStaffing(spec);
  return SolveStaffing(spec.coverage, StaffingDemand(model, spec, unlabeled));
}

// --- Bilinear ---------------------------------------------------------------

PolicySolution SolveBilinear(const Vector& values, const BilinearSpec& spec) {
  Require(values.size() >= 1 && values.allFinite(), ErrorCode::kInvalidInput,
          "bilinear game needs finite values");
  PolicySolution solution;
  solution.policy = Vector::Zero(values.size());
  if (spec.policy_set == PolicySetKind::kSimplex) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < values.size(); ++i) {
      if (values(i) < values(best)) best = i;
    }
    solution.policy(best) = 1.0;
  } else {
    Require(spec.box_lo <= spec.box_hi, ErrorCode::kInvalidInput, "empty policy box");
    for (Eigen::Index i = 0; i < values.size(); ++i) {
      solution.policy(i) = values(i) < 0.0 ? spec.box_hi : spec.box_lo;
    }
  }
  solution.objective_value = solution.policy.dot(values);
  return solution;
}

namespace {

Vector BilinearValues(const LinearModel& model, const BilinearSpec& spec,
                      const UnlabeledSet& unlabeled) {
  Require(spec.costs.size() == unlabeled.m(), ErrorCode::kInvalidInput,
          "bilinear game needs one cost per unlabeled row");
  return PredictAll(model, unlabeled.X) + spec.costs;
}

}  // namespace

PolicySolution OpcostBilinear(const LinearModel& model, const BilinearSpec& spec,
                              const UnlabeledSet& unlabeled) {
  return SolveBilinear(BilinearValues(model, spec, unlabeled), spec);
}

// --- Tagged problem ---------------------------------------------------------

std::string_view ProblemKindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kScheduling:
      return "scheduling";
    case ProblemKind::kKnapsack:
      return "knapsack";
    case ProblemKind::kStaffing:
      return "staffing";
    case ProblemKind::kBilinear:
      return "bilinear";
  }
  return "unknown";
}

ProblemKind OpCostProblem::kind() const {
  return static_cast<ProblemKind>(spec.index());
}

InnerSense OpCostProblem::sense() const {
  return kind() == ProblemKind::kKnapsack ? InnerSense::kMaxValue : InnerSense::kMinCost;
}

void ValidateProblem(const OpCostProblem& problem, const UnlabeledSet& unlabeled) {
  switch (problem.kind()) {
    case ProblemKind::kScheduling:
      ValidateDag(std::get<PrecedenceDag>(problem.spec), unlabeled.m());
      break;
    case ProblemKind::kKnapsack: {
      const auto& spec = std::get<KnapsackSpec>(problem.spec);
      Require(spec.fixed_costs.size() == unlabeled.m() && spec.fixed_costs.allFinite(),
              ErrorCode::kInvalidInput, "knapsack needs one finite cost per item");
      Require(spec.capacity >= 0 && spec.capacity <= unlabeled.m(),
              ErrorCode::kInvalidInput, "knapsack capacity must lie in [0, m]");
      break;
    }
    case ProblemKind::kStaffing: {
      const auto& spec = std::get<StaffingSpec>(problem.spec);
      ValidateStaffing(spec);
      Require(spec.coverage.rows() == unlabeled.m(), ErrorCode::kInvalidInput,
              "staffing needs one unlabeled row per period");
      break;
    }
    case ProblemKind::kBilinear: {
      const auto& spec = std::get<BilinearSpec>(problem.spec);
      Require(spec.costs.size() == unlabeled.m() && spec.costs.allFinite(),
              ErrorCode::kInvalidInput, "bilinear game needs one finite cost per row");
      Require(spec.box_lo <= spec.box_hi, ErrorCode::kInvalidInput, "empty policy box");
      break;
    }
  }
}

PolicySolution SolveInner(const OpCostProblem& problem, const LinearModel& model,
                          const UnlabeledSet& unlabeled) {
  switch (problem.kind()) {
    case ProblemKind::kScheduling:
      return OpcostScheduling(model, std::get<PrecedenceDag>(problem.spec), unlabeled);
    case ProblemKind::kKnapsack:
      return OpcostKnapsack(model, std::get<KnapsackSpec>(problem.spec), unlabeled);
    case ProblemKind::kStaffing:
      return OpcostStaffing(model, std::get<StaffingSpec>(problem.spec), unlabeled);
    case ProblemKind::kBilinear:
      return OpcostBilinear(model, std::get<BilinearSpec>(problem.spec), unlabeled);
  }
  Fail(ErrorCode::kInternal, "unknown problem kind");
}

double EvaluatePolicy(const OpCostProblem& problem, const LinearModel& model,
                      const UnlabeledSet& unlabeled, const Vector& policy) {
  switch (problem.kind()) {
    case ProblemKind::kScheduling: {
      const auto& dag = std::get<PrecedenceDag>(problem.spec);
      Require(policy.size() == dag.num_events, ErrorCode::kInvalidInput,
              "schedule has wrong length");
      return policy(dag.sink) - policy(dag.source);
    }
    case ProblemKind::kKnapsack: {
      const auto& spec = std::get<KnapsackSpec>(problem.spec);
      const Vector values = KnapsackValues(model, spec, unlabeled);
      Require(policy.size() == values.size(), ErrorCode::kInvalidInput,
              "selection has wrong length");
      return values.dot(policy);
    }
    case ProblemKind::kStaffing:
      return policy.sum();
    case ProblemKind::kBilinear: {
      const auto& spec = std::get<BilinearSpec>(problem.spec);
      const Vector values = BilinearValues(model, spec, unlabeled);
      Require(policy.size() == values.size(), ErrorCode::kInvalidInput,
              "policy has wrong length");
      return values.dot(policy);
    }
  }
  Fail(ErrorCode::kInternal, "unknown problem kind");
}

double PolicyViolation(const OpCostProblem& problem, const LinearModel& model,
                       const UnlabeledSet& unlabeled, const Vector& policy) {
  double worst = 0.0;
  auto note = [&](double v) { worst = std::max(worst, v); };
  switch (problem.kind()) {
    case ProblemKind::kScheduling: {
      const auto& dag = std::get<PrecedenceDag>(problem.spec);
      const Vector w = EdgeDurations(model, dag, unlabeled);
      for (size_t k = 0; k < dag.edges.size(); ++k) {
        note(policy(dag.edges[k].from) + w(k) - policy(dag.edges[k].to));
      }
      note(-policy.minCoeff());
      break;
    }
    case ProblemKind::kKnapsack: {
      const auto& spec = std::get<KnapsackSpec>(problem.spec);
      for (Eigen::Index i = 0; i < policy.size(); ++i) {
        note(std::min(std::abs(policy(i)), std::abs(policy(i) - 1.0)));
      }
      note(policy.sum() - spec.capacity);
      break;
    }
    case ProblemKind::kStaffing: {
      const auto& spec = std::get<StaffingSpec>(problem.spec);
      const Vector demand = StaffingDemand(model, spec, unlabeled);
      const Vector supply = spec.coverage.cast<double>() * policy;
      for (Eigen::Index i = 0; i < demand.size(); ++i) note(demand(i) - supply(i));
      for (Eigen::Index j = 0; j < policy.size(); ++j) {
        note(-policy(j));
        note(std::abs(policy(j) - std::round(policy(j))));
      }
      break;
    }
    case ProblemKind::kBilinear: {
      const auto& spec = std::get<BilinearSpec>(problem.spec);
      if (spec.policy_set == PolicySetKind::kSimplex) {
        note(std::abs(policy.sum() - 1.0));
        note(-policy.minCoeff());
      } else {
        note(spec.box_lo - policy.minCoeff());
        note(policy.maxCoeff() - spec.box_hi);
      }
      break;
    }
  }
  return worst;
}

}  // namespace opcost
