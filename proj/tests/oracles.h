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

// Independent reference implementations used only by the tests. None of them
// calls into the library code they check.

#ifndef OPCOST_TESTS_ORACLES_H_
#define OPCOST_TESTS_ORACLES_H_

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "opcost/problems.h"
#include "opcost/random.h"

namespace opcost::oracle {

// Best value over all subsets of at most `capacity` items.
inline double KnapsackBruteForce(const Vector& values, int capacity) {
  const int m = static_cast<int>(values.size());
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) > capacity) continue;
    double total = 0.0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) total += values(i);
    }
    best = std::max(best, total);
  }
  return best;
}

// Fewest staff with coverage * x >= ceil(demand), each x_j in [0, limit].
inline long long StaffingBruteForce(const Eigen::MatrixXi& coverage, const Vector& demand,
                                    int limit) {
  const int shifts = static_cast<int>(coverage.cols());
  std::vector<int> x(shifts, 0);
  long long best = std::numeric_limits<long long>::max();
  while (true) {
    bool ok = true;
    for (Eigen::Index i = 0; i < coverage.rows() && ok; ++i) {
      long long covered = 0;
      for (int j = 0; j < shifts; ++j) covered += coverage(i, j) * x[j];
      ok = covered >= std::ceil(demand(i) - 1e-9);
    }
    if (ok) {
      long long total = 0;
      for (int v : x) total += v;
      best = std::min(best, total);
    }
    int j = 0;
    while (j < shifts && x[j] == limit) x[j++] = 0;
    if (j == shifts) break;
    ++x[j];
  }
  return best;
}

// Maximum source-to-sink path weight by explicit recursion over paths.
inline double LongestPathByPaths(const PrecedenceDag& dag, const Vector& weights) {
  double best = -std::numeric_limits<double>::infinity();
  std::function<void(int, double)> walk = [&](int node, double length) {
    if (node == dag.sink) {
      best = std::max(best, length);
      return;
    }
    for (size_t k = 0; k < dag.edges.size(); ++k) {
      if (dag.edges[k].from == node) walk(dag.edges[k].to, length + weights(k));
    }
  };
  walk(dag.source, 0.0);
  return best;
}

// Random DAG over events 0..n-1 in which every event lies on a 0 -> n-1
// path: a backbone chain plus random forward edges.
inline PrecedenceDag RandomDag(Rng& rng, int events, int instances) {
  PrecedenceDag dag;
  dag.num_events = events;
  dag.source = 0;
  dag.sink = events - 1;
  for (int a = 0; a + 1 < events; ++a) {
    dag.edges.push_back({a, a + 1, static_cast<int>(rng.Below(instances))});
  }
  for (int a = 0; a < events; ++a) {
    for (int b = a + 2; b < events; ++b) {
      if (rng.Uniform() < 0.35) {
        dag.edges.push_back({a, b, static_cast<int>(rng.Below(instances))});
      }
    }
  }
  return dag;
}

inline double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// |{k in Z^p : ||k||_1 <= K}| = sum_i 2^i C(p, i) C(K, i).
inline std::uint64_t L1LatticeIdentity(int p, std::int64_t K) {
  double total = 0.0;
  for (int i = 0; i <= p; ++i) {
    total += std::ldexp(1.0, i) * Binomial(p, i) * Binomial(static_cast<int>(K), i);
  }
  return static_cast<std::uint64_t>(std::llround(total));
}

// Visits every point of the box [-K, K]^p.
inline void ForEachBoxPoint(int p, std::int64_t K,
                            const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> k(p, -K);
  while (true) {
    f(k);
    int j = 0;
    while (j < p && k[j] == K) k[j++] = -K;
    if (j == p) return;
    ++k[j];
  }
}

// Number of eigenvalues of symmetric A below t, from the signs of the LDL^T
// pivots of A - tI (Sylvester's law of inertia).
inline int CountEigenvaluesBelow(const Matrix& A, double t) {
  const Eigen::Index n = A.rows();
  Matrix M = A - t * Matrix::Identity(n, n);
  int negatives = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    double pivot = M(k, k);
    if (std::abs(pivot) < 1e-300) pivot = -1e-300;
    if (pivot < 0.0) ++negatives;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      const double f = M(i, k) / pivot;
      for (Eigen::Index j = k + 1; j < n; ++j) M(i, j) -= f * M(k, j);
    }
  }
  return negatives;
}

// Smallest eigenvalue by bisection on CountEigenvaluesBelow.
inline double SmallestEigenvalueBisection(const Matrix& A) {
  double bound = 0.0;
  for (Eigen::Index i = 0; i < A.rows(); ++i) bound = std::max(bound, A.row(i).cwiseAbs().sum());
  double lo = -bound - 1.0, hi = bound + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (CountEigenvaluesBelow(A, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace opcost::oracle

#endif  // OPCOST_TESTS_ORACLES_H_
