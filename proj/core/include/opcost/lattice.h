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

// Integer points of the l1 ball {k in Z^p : sum |k_j| <= K}, optionally cut by
// integer halfspaces sum_j g_j k_j <= G. Counting is by depth-first
// enumeration; the last coordinate is counted as an interval.

#ifndef OPCOST_LATTICE_H_
#define OPCOST_LATTICE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "opcost/model.h"

namespace opcost {

struct IntegerConstraint {
  std::vector<std::int64_t> coefficients;
  std::int64_t bound = 0;
};

struct LatticeCountQuery {
  int p = 1;
  std::int64_t K = 0;
  std::vector<IntegerConstraint> constraints;
};

// Natural log of |{k : ||k||_1 <= K}| from the closed-form sum
// sum_i 2^i C(p, i) C(K, i). Used to pre-check enumeration size and as a
// size estimate when enumeration is out of budget.
double LogL1LatticeSize(int p, std::int64_t K);

// Exact count by enumeration. Throws kTooLarge when the predicted count
// exceeds `max_points`.
std::uint64_t CountL1Lattice(int p, std::int64_t K, double max_points = 1e9);

std::uint64_t CountConstrainedLattice(const LatticeCountQuery& query,
                                      double max_points = 1e9);

// Visits every point of the constrained set in lexicographic order.
void ForEachConstrainedLatticePoint(
    const LatticeCountQuery& query,
    const std::function<void(const std::vector<std::int64_t>&)>& visit,
    double max_points = 1e9);

// Best rational approximation num/den of x with 1 <= den <= max_denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
Rational BestRational(double x, std::int64_t max_denominator);

// Converts sum_j c_j k_j <= K into an integer constraint that every k with
// ||k||_1 <= K satisfying the original also satisfies. Each c_j is replaced by
// its best rational approximation, denominators are cleared with their least
// common multiple and the bound is rounded outward. Throws kTooLarge when the
// integers would overflow.
IntegerConstraint RationalizeConstraint(const Vector& c_row, std::int64_t K,
                                        std::int64_t precision_denominator);

}  // namespace opcost

#endif  // OPCOST_LATTICE_H_
