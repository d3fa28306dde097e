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

#include "opcost/relaxations.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {

std::int64_t CountDagPaths(const PrecedenceDag& dag, std::int64_t cap) {
  ValidateDag(dag);
  std::vector<std::int64_t> count(dag.num_events, 0);
  count[dag.source] = 1;
  for (int a : TopologicalOrder(dag)) {
    for (const DagEdge& e : dag.edges) {
      if (e.from == a) count[e.to] = std::min(cap + 1, count[e.to] + count[a]);
    }
  }
  return count[dag.sink];
}

std::vector<std::vector<int>> EnumerateDagPaths(const PrecedenceDag& dag,
                                                std::int64_t max_paths) {
  const std::int64_t total = CountDagPaths(dag, max_paths);
  Require(total <= max_paths, ErrorCode::kTooLarge,
          "more than " + std::to_string(max_paths) + " source-to-sink paths");
  std::vector<std::vector<int>> paths;
  std::vector<int> current;
  // Iterative DFS over (event, next edge to try).
  std::vector<std::pair<int, size_t>> stack = {{dag.source, 0}};
  while (!stack.empty()) {
    auto& [event, next] = stack.back();
    if (event == dag.sink) {
      paths.push_back(current);
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    while (next < dag.edges.size() && dag.edges[next].from != event) ++next;
    if (next == dag.edges.size()) {
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const int edge = static_cast<int>(next++);
    current.push_back(edge);
    stack.push_back({dag.edges[edge].to, 0});
  }
  return paths;
}

LinearConstraintOnBeta RelaxSchedulingConstraint(const PrecedenceDag& dag,
                                                 const UnlabeledSet& unlabeled,
                                                 double alpha) {
  ValidateDag(dag, unlabeled.m());
  Require(std::isfinite(alpha), ErrorCode::kInvalidInput, "alpha must be finite");
  const auto paths = EnumerateDagPaths(dag, Tolerances::kMaxPaths);
  LinearConstraintOnBeta constraint;
  constraint.z = Vector::Zero(unlabeled.p());
  for (const auto& path : paths) {
    for (int edge : path) constraint.z += unlabeled.row(dag.edges[edge].instance);
  }
  constraint.z /= static_cast<double>(paths.size());
  constraint.alpha = alpha;
  return constraint;
}

LinearConstraintOnBeta RelaxKnapsackConstraint(const KnapsackSpec& spec,
                                               const UnlabeledSet& unlabeled,
                                               double alpha) {
  Require(spec.fixed_costs.size() == unlabeled.m(), ErrorCode::kInvalidInput,
          "knapsack needs one fixed cost per unlabeled item");
  Require(spec.capacity >= 0 && spec.capacity <= unlabeled.m(), ErrorCode::kInvalidInput,
          "knapsack capacity must lie in [0, m]");
  Require(std::isfinite(alpha), ErrorCode::kInvalidInput, "alpha must be finite");
  const double weight =
      std::min(0.5, static_cast<double>(spec.capacity) / unlabeled.m());
  LinearConstraintOnBeta constraint;
  constraint.z = weight * unlabeled.X.colwise().sum().transpose();
  constraint.alpha = alpha - weight * spec.fixed_costs.sum();
  return constraint;
}

QuadraticConstraintOnBeta RelaxStaffingConstraint(const StaffingSpec& spec,
                                                  const UnlabeledSet& unlabeled,
                                                  double alpha) {
  ValidateStaffing(spec);
  Require(unlabeled.m() == spec.coverage.rows(), ErrorCode::kInvalidInput,
          "staffing needs one unlabeled row per period");
  Require(std::isfinite(alpha), ErrorCode::kInvalidInput, "alpha must be finite");
  const int longest = spec.coverage.colwise().sum().maxCoeff();
  QuadraticConstraintOnBeta constraint;
  constraint.Q = unlabeled.X.transpose() * unlabeled.X;
  constraint.bound = static_cast<double>(longest) * alpha;
  return constraint;
}

}  // namespace opcost
