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

#ifndef OPCOST_RADEMACHER_H_
#define OPCOST_RADEMACHER_H_

#include <cstdint>

#include "opcost/bounds.h"
#include "opcost/model.h"

namespace opcost {

// sup over beta in F of (2/n) sigma^T X beta for one sign vector.
//   q = 1: linear program over the l1 ball and the margin constraints.
//   q = 2 without constraints: (2/n) B_b ||X^T sigma||.
//   q = 2 with constraints and p <= 3: maximum over a polar grid of the
//   feasible set (approximate, a lower estimate of the supremum).
// Other combinations throw kUnsupported.
class RademacherSupremum {
 public:
  RademacherSupremum(const Matrix& X_S, const HypothesisClassSpec& spec,
                     int grid_resolution = 64);

  double operator()(const Vector& sigma) const;
  bool approximate() const { return approximate_; }

 private:
  enum class Mode { kLinearProgram, kClosedForm, kGrid };

  Matrix X_;
  HypothesisClassSpec spec_;
  Mode mode_;
  bool approximate_ = false;
  Matrix grid_;  // feasible beta points as columns (kGrid)
};

struct RademacherEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  bool approximate = false;
};

// Monte-Carlo mean of the supremum over `num_samples` uniform sign vectors.
RademacherEstimate EmpiricalRademacherMc(const Matrix& X_S, const HypothesisClassSpec& spec,
                                         int num_samples, std::uint64_t seed);

}  // namespace opcost

#endif  // OPCOST_RADEMACHER_H_
