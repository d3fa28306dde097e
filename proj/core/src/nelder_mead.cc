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

#include "opcost/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "opcost/error.h"
#include "opcost/random.h"

namespace opcost {

void NelderMeadConfig::Validate() const {
  Require(initial_simplex_scale > 0.0, ErrorCode::kInvalidInput,
          "initial simplex scale must be positive");
  Require(reflection > 0.0, ErrorCode::kInvalidInput, "reflection must be > 0");
  Require(expansion > 1.0 && expansion > reflection, ErrorCode::kInvalidInput,
          "expansion must exceed 1 and the reflection coefficient");
  Require(contraction > 0.0 && contraction < 1.0, ErrorCode::kInvalidInput,
          "contraction must lie in (0, 1)");
  Require(shrink > 0.0 && shrink < 1.0, ErrorCode::kInvalidInput,
          "shrink must lie in (0, 1)");
  Require(max_evals >= 1, ErrorCode::kInvalidInput, "max_evals must be positive");
  Require(convergence_tol > 0.0, ErrorCode::kInvalidInput,
          "convergence tolerance must be positive");
  Require(num_restarts >= 0, ErrorCode::kInvalidInput, "num_restarts must be >= 0");
  Require(restart_scale >= 0.0, ErrorCode::kInvalidInput, "restart scale must be >= 0");
}

namespace {

// Non-finite values compare as +inf so the simplex moves away from them.
double Sanitize(double v) {
  return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
}

}  // namespace

NelderMeadResult NelderMeadLocal(const Objective& objective, const Vector& init,
                                 const NelderMeadConfig& config) {
  config.Validate();
  const Eigen::Index p = init.size();
  Require(p >= 1, ErrorCode::kInvalidInput, "Nelder-Mead needs at least one dimension");
  Require(init.allFinite(), ErrorCode::kInvalidInput, "non-finite start point");

  int evals = 0;
  auto eval = [&](const Vector& x) {
    ++evals;
    return Sanitize(objective(x));
  };

  std::vector<Vector> vertex(p + 1, init);
  std::vector<double> value(p + 1);
  for (Eigen::Index j = 0; j < p; ++j) vertex[j + 1](j) += config.initial_simplex_scale;
  for (Eigen::Index j = 0; j <= p; ++j) value[j] = eval(vertex[j]);
  Require(std::isfinite(value[0]), ErrorCode::kInvalidInput,
          "objective is not finite at the start point");

  std::vector<int> order(p + 1);
  bool converged = false;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return value[a] < value[b]; });
    const int best = order[0];
    const int worst = order[p];
    const int second_worst = order[p - 1 >= 0 ? p - 1 : 0];

    double diameter = 0.0;
    for (Eigen::Index j = 0; j <= p; ++j) {
      diameter = std::max(diameter, (vertex[j] - vertex[best]).cwiseAbs().maxCoeff());
    }
    if (diameter < config.convergence_tol) {
      converged = true;
      break;
    }
    if (evals >= config.max_evals) break;

    Vector centroid = Vector::Zero(p);
    for (Eigen::Index j = 0; j <= p; ++j) {
      if (j != worst) centroid += vertex[j];
    }
    centroid /= static_cast<double>(p);

    const Vector reflected = centroid + config.reflection * (centroid - vertex[worst]);
    const double f_reflected = eval(reflected);
    if (f_reflected < value[best]) {
      const Vector expanded = centroid + config.expansion * (reflected - centroid);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        vertex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        vertex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second_worst]) {
      vertex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }
    if (f_reflected < value[worst]) {
      const Vector outside = centroid + config.contraction * (reflected - centroid);
      const double f_outside = eval(outside);
      if (f_outside <= f_reflected) {
        vertex[worst] = outside;
        value[worst] = f_outside;
        continue;
      }
    } else {
      const Vector inside = centroid + config.contraction * (vertex[worst] - centroid);
      const double f_inside = eval(inside);
      if (f_inside < value[worst]) {
        vertex[worst] = inside;
        value[worst] = f_inside;
        continue;
      }
    }
    for (Eigen::Index j = 0; j <= p; ++j) {
      if (j == best) continue;
      vertex[j] = vertex[best] + config.shrink * (vertex[j] - vertex[best]);
      value[j] = eval(vertex[j]);
    }
  }

  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j <= p; ++j) {
    if (value[j] < value[best]) best = j;
  }
  return NelderMeadResult{vertex[best], value[best], converged, evals};
}

NelderMeadResult NelderMeadMinimize(const Objective& objective, const Vector& init,
                                    const NelderMeadConfig& config,
                                    const std::vector<Vector>& extra_starts) {
  config.Validate();
  Rng rng(config.seed);
  std::vector<Vector> starts = {init};
  starts.insert(starts.end(), extra_starts.begin(), extra_starts.end());
  for (int r = 0; r < config.num_restarts; ++r) {
    Vector start = init;
    for (Eigen::Index j = 0; j < start.size(); ++j) {
      start(j) += config.restart_scale * rng.Normal();
    }
    starts.push_back(std::move(start));
  }

  NelderMeadResult overall;
  overall.value = std::numeric_limits<double>::infinity();
  overall.converged = true;
  bool have = false;
  for (const Vector& start : starts) {
    Require(start.size() == init.size(), ErrorCode::kInvalidInput,
            "start point has wrong dimension");
    if (!std::isfinite(Sanitize(objective(start)))) {
      ++overall.evaluations;
      continue;  // random start landed where the objective is undefined
    }
    NelderMeadResult run = NelderMeadLocal(objective, start, config);
    NelderMeadResult polish = NelderMeadLocal(objective, run.x, config);
    overall.evaluations += run.evaluations + polish.evaluations + 1;
    const NelderMeadResult& better = polish.value <= run.value ? polish : run;
    overall.converged = overall.converged && polish.converged;
    if (!have || better.value < overall.value) {
      overall.x = better.x;
      overall.value = better.value;
      have = true;
    }
  }
  Require(have, ErrorCode::kInvalidInput, "objective is not finite at any start point");
  return overall;
}

}  // namespace opcost
