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

#include "opcost/lattice.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "opcost/error.h"
#include "opcost/tolerances.h"

namespace opcost {

using Int128 = __int128;

double LogL1LatticeSize(int p, std::int64_t K) {
  Require(p >= 1, ErrorCode::kInvalidInput, "lattice dimension must be >= 1");
  Require(K >= 0, ErrorCode::kInvalidInput, "lattice radius must be >= 0");
  const double k = static_cast<double>(K);
  // log-sum-exp over the terms of the closed form.
  std::vector<double> logs;
  for (int i = 0; i <= p && i <= K; ++i) {
    const double log_cp = std::lgamma(p + 1.0) - std::lgamma(i + 1.0) - std::lgamma(p - i + 1.0);
    const double log_ck = std::lgamma(k + 1.0) - std::lgamma(i + 1.0) - std::lgamma(k - i + 1.0);
    logs.push_back(i * std::log(2.0) + log_cp + log_ck);
  }
  const double top = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - top);
  return top + std::log(sum);
}

namespace {

void CheckSize(int p, std::int64_t K, double max_points) {
  const double predicted = std::exp(LogL1LatticeSize(p, K));
  Require(predicted <= max_points * (1.0 + 1e-9), ErrorCode::kTooLarge,
          "lattice enumeration would visit about " + std::to_string(predicted) +
              " points (limit " + std::to_string(max_points) + ")");
}

Int128 FloorDiv(Int128 a, Int128 b) {
  Int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int128 CeilDiv(Int128 a, Int128 b) { return -FloorDiv(-a, b); }

class Enumerator {
 public:
  explicit Enumerator(const LatticeCountQuery& query) : q_(query) {
    Require(q_.p >= 1, ErrorCode::kInvalidInput, "lattice dimension must be >= 1");
    Require(q_.K >= 0, ErrorCode::kInvalidInput, "lattice radius must be >= 0");
    const int v = static_cast<int>(q_.constraints.size());
    suffix_max_.assign(v, std::vector<Int128>(q_.p + 1, 0));
    for (int c = 0; c < v; ++c) {
      const auto& g = q_.constraints[c].coefficients;
      Require(static_cast<int>(g.size()) == q_.p, ErrorCode::kInvalidInput,
              "constraint has wrong length");
      for (int j = q_.p - 1; j >= 0; --j) {
        const Int128 a = g[j] < 0 ? -static_cast<Int128>(g[j]) : static_cast<Int128>(g[j]);
        suffix_max_[c][j] = std::max(suffix_max_[c][j + 1], a);
      }
    }
    partial_.assign(v, 0);
    point_.assign(q_.p, 0);
  }

  std::uint64_t Count() {
    count_ = 0;
    Descend(0, q_.K, /*visit=*/nullptr);
    return count_;
  }

  void Visit(const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    Descend(0, q_.K, &visit);
  }

 private:
  bool Hopeless(int j, std::int64_t remaining) const {
    for (size_t c = 0; c < partial_.size(); ++c) {
      if (partial_[c] - static_cast<Int128>(remaining) * suffix_max_[c][j] >
          q_.constraints[c].bound) {
        return true;
      }
    }
    return false;
  }

  void Descend(int j, std::int64_t remaining,
               const std::function<void(const std::vector<std::int64_t>&)>* visit) {
    if (Hopeless(j, remaining)) return;
    if (j == q_.p - 1 && visit == nullptr) {
      Int128 lo = -remaining, hi = remaining;
      for (size_t c = 0; c < partial_.size(); ++c) {
        const Int128 g = q_.constraints[c].coefficients[j];
        const Int128 slack = static_cast<Int128>(q_.constraints[c].bound) - partial_[c];
        if (g > 0) {
          hi = std::min(hi, FloorDiv(slack, g));
        } else if (g < 0) {
          lo = std::max(lo, CeilDiv(slack, g));
        } else if (slack < 0) {
          return;
        }
      }
      if (hi >= lo) count_ += static_cast<std::uint64_t>(hi - lo + 1);
      return;
    }
    if (j == q_.p) {
      for (size_t c = 0; c < partial_.size(); ++c) {
        if (partial_[c] > q_.constraints[c].bound) return;
      }
      (*visit)(point_);
      return;
    }
    for (std::int64_t v = -remaining; v <= remaining; ++v) {
      for (size_t c = 0; c < partial_.size(); ++c) {
        partial_[c] += static_cast<Int128>(q_.constraints[c].coefficients[j]) * v;
      }
      point_[j] = v;
      Descend(j + 1, remaining - (v < 0 ? -v : v), visit);
      for (size_t c = 0; c < partial_.size(); ++c) {
        partial_[c] -= static_cast<Int128>(q_.constraints[c].coefficients[j]) * v;
      }
    }
    point_[j] = 0;
  }

  const LatticeCountQuery& q_;
  std::vector<std::vector<Int128>> suffix_max_;
  std::vector<Int128> partial_;
  std::vector<std::int64_t> point_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t CountL1Lattice(int p, std::int64_t K, double max_points) {
  LatticeCountQuery query;
  query.p = p;
  query.K = K;
  return CountConstrainedLattice(query, max_points);
}

std::uint64_t CountConstrainedLattice(const LatticeCountQuery& query, double max_points) {
  CheckSize(query.p, query.K, max_points);
  return Enumerator(query).Count();
}

void ForEachConstrainedLatticePoint(
    const LatticeCountQuery& query,
    const std::function<void(const std::vector<std::int64_t>&)>& visit,
    double max_points) {
  CheckSize(query.p, query.K, max_points);
  Enumerator(query).Visit(visit);
}

Rational BestRational(double x, std::int64_t max_denominator) {
  Require(std::isfinite(x) && std::abs(x) < 1e15, ErrorCode::kTooLarge,
          "value too large to rationalize");
  Require(max_denominator >= 1, ErrorCode::kInvalidInput,
          "precision denominator must be >= 1");
  const bool negative = x < 0.0;
  const long double target = std::abs(static_cast<long double>(x));
  // Convergents h/k of the continued fraction of `target`.
  std::int64_t h_prev = 1, k_prev = 0;
  std::int64_t h = static_cast<std::int64_t>(std::floor(target)), k = 1;
  long double rest = target - std::floor(target);
  Rational best{h, k};
  while (rest > 1e-18L) {
    const long double inv = 1.0L / rest;
    const std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
    rest = inv - std::floor(inv);
    if (a > (max_denominator - k_prev) / k) {
      // Best semiconvergent within the denominator limit.
      const std::int64_t t = (max_denominator - k_prev) / k;
      if (t >= 1) {
        const Rational semi{t * h + h_prev, t * k + k_prev};
        const long double err_semi =
            std::abs(target - static_cast<long double>(semi.num) / semi.den);
        const long double err_best =
            std::abs(target - static_cast<long double>(best.num) / best.den);
        if (err_semi < err_best) best = semi;
      }
      break;
    }
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    best = {h, k};
  }
  if (negative) best.num = -best.num;
  return best;
}

IntegerConstraint RationalizeConstraint(const Vector& c_row, std::int64_t K,
                                        std::int64_t precision_denominator) {
  Require(K >= 0, ErrorCode::kInvalidInput, "lattice radius must be >= 0");
  Require(c_row.size() >= 1 && c_row.allFinite(), ErrorCode::kInvalidInput,
          "constraint row must be finite and non-empty");
  constexpr Int128 kLimit = static_cast<Int128>(std::numeric_limits<std::int64_t>::max() / 4);
  std::vector<Rational> approx;
  Int128 lcm = 1;
  double max_error = 0.0;
  for (Eigen::Index j = 0; j < c_row.size(); ++j) {
    const Rational r = BestRational(c_row(j), precision_denominator);
    approx.push_back(r);
    const Int128 g = std::gcd(static_cast<std::int64_t>(lcm), r.den);
    lcm = lcm / g * r.den;
    Require(lcm <= kLimit, ErrorCode::kTooLarge, "common denominator overflows");
    max_error = std::max(
        max_error, static_cast<double>(std::abs(static_cast<long double>(c_row(j)) -
                                                static_cast<long double>(r.num) / r.den)));
  }
  IntegerConstraint out;
  for (const Rational& r : approx) {
    const Int128 g = static_cast<Int128>(r.num) * (lcm / r.den);
    Require(g <= kLimit && g >= -kLimit, ErrorCode::kTooLarge,
            "rationalized coefficient overflows");
    out.coefficients.push_back(static_cast<std::int64_t>(g));
  }
  const Int128 base = lcm * static_cast<Int128>(K);
  Require(base <= kLimit, ErrorCode::kTooLarge, "rationalized bound overflows");
  const long double extra = static_cast<long double>(base) * max_error +
                            Tolerances::kRationalizeMargin;
  Require(extra < 1e15L, ErrorCode::kTooLarge, "rationalized bound overflows");
  const Int128 bound = base + static_cast<Int128>(std::floor(extra));
  Require(bound <= kLimit, ErrorCode::kTooLarge, "rationalized bound overflows");
  out.bound = static_cast<std::int64_t>(bound);
  return out;
}

}  // namespace opcost
