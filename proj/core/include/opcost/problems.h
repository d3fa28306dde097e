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

// Exact solvers for the decision subproblems whose optimal value acts as the
// operational cost of a fitted model.

#ifndef OPCOST_PROBLEMS_H_
#define OPCOST_PROBLEMS_H_

#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "opcost/lp.h"
#include "opcost/model.h"

namespace opcost {

// --- Scheduling on a precedence DAG ---------------------------------------

struct DagEdge {
  int from = 0;
  int to = 0;
  int instance = 0;  // row of the unlabeled set whose prediction is the duration
};

struct PrecedenceDag {
  int num_events = 0;
  std::vector<DagEdge> edges;
  int source = 0;
  int sink = 0;

  // Five-event clinic example with six activities and three source-to-sink
  // paths. Event and instance indices are 0-based.
  static PrecedenceDag ClinicExample();
};

// Throws kInvalidInput unless the graph is acyclic, indices are in range
// (instances < num_instances when num_instances >= 0), and every event lies on
// some source-to-sink path.
void ValidateDag(const PrecedenceDag& dag, int num_instances = -1);

// Events in a topological order.
std::vector<int> TopologicalOrder(const PrecedenceDag& dag);

// Maximum total weight over source-to-sink paths; weights are per edge and
// may be negative.
double DagLongestPath(const PrecedenceDag& dag, const Vector& edge_weights);

// Minimal-makespan event times for the given per-edge durations. The policy is
// anchored so that every time is nonnegative and the source starts at 0
// whenever that is possible.
PolicySolution SolveSchedule(const PrecedenceDag& dag, const Vector& edge_weights);

// The same schedule computed as a linear program; used for cross-checking.
PolicySolution SolveScheduleLp(const PrecedenceDag& dag, const Vector& edge_weights);

PolicySolution OpcostScheduling(const LinearModel& model, const PrecedenceDag& dag,
                                const UnlabeledSet& unlabeled);

// Per-edge durations beta^T x_instance.
Vector EdgeDurations(const LinearModel& model, const PrecedenceDag& dag,
                     const UnlabeledSet& unlabeled);

// --- Cardinality knapsack -------------------------------------------------

struct KnapsackSpec {
  Vector fixed_costs;  // one entry per unlabeled item
  int capacity = 0;
};

// Maximizes sum v_i pi_i over pi in {0,1}^m with sum pi_i <= capacity. Picks
// the largest strictly positive values; ties go to the lower index.
PolicySolution SolveKnapsack(const Vector& values, int capacity);

PolicySolution OpcostKnapsack(const LinearModel& model, const KnapsackSpec& spec,
                              const UnlabeledSet& unlabeled);

// --- Shift staffing -------------------------------------------------------

struct StaffingSpec {
  Eigen::MatrixXi coverage;  // periods x shifts, entries 0 or 1
  int max_periods_per_shift = 10;

  // 24 half-hour periods covered by three overlapping 10-period shifts.
  static StaffingSpec CallCenter();
};

void ValidateStaffing(const StaffingSpec& spec);

// Minimizes 1^T pi over nonnegative integer pi with coverage * pi >= demand,
// by branch and bound. Returns the lexicographically smallest optimum.
PolicySolution SolveStaffing(const Eigen::MatrixXi& coverage, const Vector& demand);

// Demand in period i is (beta^T x_i)^2.
PolicySolution OpcostStaffing(const LinearModel& model, const StaffingSpec& spec,
                              const UnlabeledSet& unlabeled);

// --- Bilinear policy game -------------------------------------------------

enum class PolicySetKind { kSimplex, kBox };

// OpCost(pi, beta) = sum_i pi_i (beta^T x_i + c_i), minimized over pi in the
// probability simplex or in the box [box_lo, box_hi]^m.
struct BilinearSpec {
  Vector costs;
  PolicySetKind policy_set = PolicySetKind::kSimplex;
  double box_lo = 0.0;
  double box_hi = 1.0;
};

PolicySolution SolveBilinear(const Vector& values, const BilinearSpec& spec);

PolicySolution OpcostBilinear(const LinearModel& model, const BilinearSpec& spec,
                              const UnlabeledSet& unlabeled);

// --- Tagged problem -------------------------------------------------------

enum class ProblemKind { kScheduling, kKnapsack, kStaffing, kBilinear };
enum class InnerSense { kMinCost, kMaxValue };

std::string_view ProblemKindName(ProblemKind kind);

struct OpCostProblem {
  std::variant<PrecedenceDag, KnapsackSpec, StaffingSpec, BilinearSpec> spec;

  ProblemKind kind() const;
  InnerSense sense() const;
};

// Validates the problem against an unlabeled set of the given size.
void ValidateProblem(const OpCostProblem& problem, const UnlabeledSet& unlabeled);

PolicySolution SolveInner(const OpCostProblem& problem, const LinearModel& model,
                          const UnlabeledSet& unlabeled);

// Objective of `policy` under the model's predictions, recomputed from scratch.
double EvaluatePolicy(const OpCostProblem& problem, const LinearModel& model,
                      const UnlabeledSet& unlabeled, const Vector& policy);

// Largest constraint violation of `policy` (0 when feasible).
double PolicyViolation(const OpCostProblem& problem, const LinearModel& model,
                       const UnlabeledSet& unlabeled, const Vector& policy);

}  // namespace opcost

#endif  // OPCOST_PROBLEMS_H_
