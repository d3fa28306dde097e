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

#ifndef OPCOST_NELDER_MEAD_H_
#define OPCOST_NELDER_MEAD_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "opcost/model.h"

namespace opcost {

struct NelderMeadConfig {
  double initial_simplex_scale = 0.5;
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  int max_evals = 20000;        // per local run
  double convergence_tol = 1e-9;  // simplex diameter (max-norm)
  int num_restarts = 4;         // random starts in addition to the given ones
  double restart_scale = 1.0;   // std-dev of the random start perturbation
  std::uint64_t seed = 1;

  void Validate() const;
};

struct NelderMeadResult {
  Vector x;
  double value = 0.0;
  bool converged = false;  // every local run met the diameter tolerance
  int evaluations = 0;
};

using Objective = std::function<double(const Vector&)>;

// Multi-start Nelder-Mead. Runs a local search from `init`, from each of
// `extra_starts`, and from `num_restarts` Gaussian perturbations of `init`;
// every run is followed by one restart from its own best vertex. Returns the
// best vertex seen. Deterministic for a fixed seed.
NelderMeadResult NelderMeadMinimize(const Objective& objective, const Vector& init,
                                    const NelderMeadConfig& config,
                                    const std::vector<Vector>& extra_starts = {});

// A single local run without restarts.
NelderMeadResult NelderMeadLocal(const Objective& objective, const Vector& init,
                                 const NelderMeadConfig& config);

}  // namespace opcost

#endif  // OPCOST_NELDER_MEAD_H_
