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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "opcost/error.h"
#include "opcost/random.h"
#include "oracles.h"

namespace opcost {
namespace {

bool SatisfiesAll(const std::vector<std::int64_t>& k,
                  const std::vector<IntegerConstraint>& constraints) {
  for (const IntegerConstraint& c : constraints) {
    std::int64_t total = 0;
    for (size_t j = 0; j < k.size(); ++j) total += c.coefficients[j] * k[j];
    if (total > c.bound) return false;
  }
  return true;
}

std::uint64_t FilterOracle(const LatticeCountQuery& q) {
  std::uint64_t count = 0;
  oracle::ForEachBoxPoint(q.p, q.K, [&](const std::vector<std::int64_t>& k) {
    std::int64_t l1 = 0;
    for (std::int64_t v : k) l1 += std::abs(v);
    if (l1 <= q.K && SatisfiesAll(k, q.constraints)) ++count;
  });
  return count;
}

TEST(L1LatticeTest, SmallValues) {
  EXPECT_EQ(CountL1Lattice(1, 0), 1u);
  EXPECT_EQ(CountL1Lattice(2, 1), 5u);
  EXPECT_EQ(CountL1Lattice(2, 2), 13u);
  EXPECT_EQ(CountL1Lattice(3, 1), 7u);
}

TEST(L1LatticeTest, MatchesCombinatorialIdentity) {
  for (int p = 1; p <= 5; ++p) {
    for (int K = 1; K <= 8; ++K) {
      EXPECT_EQ(CountL1Lattice(p, K), oracle::L1LatticeIdentity(p, K)) << p << " " << K;
    }
  }
}

TEST(L1LatticeTest, LogSizeMatchesIdentity) {
  for (int p = 1; p <= 6; ++p) {
    for (int K = 0; K <= 40; K += 7) {
      EXPECT_NEAR(LogL1LatticeSize(p, K),
                  std::log(static_cast<double>(oracle::L1LatticeIdentity(p, K))), 1e-9);
    }
  }
}

TEST(L1LatticeTest, RefusesHugeCounts) {
  try {
    CountL1Lattice(10, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(ConstrainedLatticeTest, VacuousConstraintEqualsUnconstrained) {
  LatticeCountQuery q{3, 4, {{{0, 0, 0}, 4}}};
  EXPECT_EQ(CountConstrainedLattice(q), CountL1Lattice(3, 4));
}

TEST(ConstrainedLatticeTest, OneDimensionalExample) {
  LatticeCountQuery q{1, 1, {{{10}, 1}}};
  EXPECT_EQ(CountConstrainedLattice(q), 2u);
}

TEST(ConstrainedLatticeTest, MatchesFilterOracle) {
  Rng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    LatticeCountQuery q;
    q.p = 1 + static_cast<int>(rng.Below(4));
    q.K = static_cast<std::int64_t>(rng.Below(7));
    const int v = static_cast<int>(rng.Below(3));
    for (int nu = 0; nu < v; ++nu) {
      IntegerConstraint c;
      for (int j = 0; j < q.p; ++j) c.coefficients.push_back(rng.Below(9) - 4);
      c.bound = static_cast<std::int64_t>(rng.Below(12)) - 4;
      q.constraints.push_back(c);
    }
    EXPECT_EQ(CountConstrainedLattice(q), FilterOracle(q));
    EXPECT_LE(CountConstrainedLattice(q), CountL1Lattice(q.p, q.K));
  }
}

TEST(ConstrainedLatticeTest, VisitorSeesEachPointOnce) {
  LatticeCountQuery q{2, 3, {{{1, 1}, 1}}};
  std::set<std::vector<std::int64_t>> seen;
  ForEachConstrainedLatticePoint(q, [&](const std::vector<std::int64_t>& k) {
    EXPECT_TRUE(seen.insert(k).second);
    EXPECT_TRUE(SatisfiesAll(k, q.constraints));
  });
  EXPECT_EQ(seen.size(), FilterOracle(q));
}

TEST(RationalTest, ContinuedFractions) {
  const Rational third = BestRational(1.0 / 3.0, 3);
  EXPECT_EQ(third.num, 1);
  EXPECT_EQ(third.den, 3);
  const Rational pi = BestRational(3.14159265358979, 1000);
  EXPECT_EQ(pi.num, 355);
  EXPECT_EQ(pi.den, 113);
  const Rational neg = BestRational(-0.75, 100);
  EXPECT_EQ(neg.num, -3);
  EXPECT_EQ(neg.den, 4);
}

TEST(RationalizeTest, ExactRationals) {
  Vector c(2);
  c << 0.5, 0.25;
  const IntegerConstraint r = RationalizeConstraint(c, 2, 4);
  EXPECT_EQ(r.coefficients, (std::vector<std::int64_t>{2, 1}));
  EXPECT_EQ(r.bound, 8);
  const IntegerConstraint t = RationalizeConstraint(Vector::Constant(1, 1.0 / 3.0), 5, 3);
  EXPECT_EQ(t.coefficients, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(t.bound, 15);
}

TEST(RationalizeTest, RelaxesOutward) {
  // Every lattice point meeting the floating-point constraint meets the
  // rationalized one, so the rationalized count is an upper bound.
  Rng rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = 1 + static_cast<int>(rng.Below(3));
    const std::int64_t K = 1 + static_cast<std::int64_t>(rng.Below(6));
    Vector c(p);
    for (int j = 0; j < p; ++j) c(j) = rng.Uniform(-2, 2);
    LatticeCountQuery q{p, K, {RationalizeConstraint(c, K, 1 + rng.Below(50))}};
    std::uint64_t float_count = 0;
    oracle::ForEachBoxPoint(p, K, [&](const std::vector<std::int64_t>& k) {
      std::int64_t l1 = 0;
      double dot = 0.0;
      for (int j = 0; j < p; ++j) {
        l1 += std::abs(k[j]);
        dot += c(j) * static_cast<double>(k[j]);
      }
      if (l1 <= K && dot <= static_cast<double>(K)) {
        ++float_count;
        EXPECT_TRUE(SatisfiesAll(k, q.constraints));
      }
    });
    EXPECT_GE(CountConstrainedLattice(q), float_count);
  }
}

}  // namespace
}  // namespace opcost
