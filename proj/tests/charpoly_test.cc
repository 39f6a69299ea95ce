// Copyright 2026 The Authors.
//
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

#include <gtest/gtest.h>

#include "matvol/catalog.h"
#include "matvol/charpoly.h"

namespace matvol {
namespace {

IntPolynomial poly(std::vector<long> coeffs) {
  std::vector<Integer> c;
  for (long v : coeffs) c.emplace_back(v);
  return IntPolynomial(c);
}

MuVector mus(std::vector<long> values) {
  std::vector<Integer> v;
  for (long x : values) v.emplace_back(x);
  return MuVector(v);
}

TEST(IntPolynomialTest, Basics) {
  const IntPolynomial p = poly({-3, 6, -4, 1});
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.to_string(), "t^3 - 4*t^2 + 6*t - 3");
  EXPECT_EQ(p.evaluate(1), 0);
  EXPECT_EQ(p.divide_by_linear(1), poly({3, -3, 1}));
  EXPECT_THROW(poly({1, 1}).divide_by_linear(1), std::logic_error);
  EXPECT_EQ(poly({0, 0}).degree(), -1);
  EXPECT_EQ(poly({}).to_string(), "0");
  EXPECT_EQ(poly({-1, 1}).to_string(), "t - 1");
}

TEST(MobiusTest, Examples) {
  const FlatLattice u23(Matroid::uniform(2, 3));
  const auto mu = mobius(u23);
  EXPECT_EQ(mu[u23.bottom()], 1);
  for (int f : u23.flats_of_rank(1)) EXPECT_EQ(mu[f], -1);
  EXPECT_EQ(mu[u23.top()], 2);

  const FlatLattice u34(Matroid::uniform(3, 4));
  EXPECT_EQ(mobius(u34)[u34.top()], -3);
}

TEST(CharPolyTest, Examples) {
  EXPECT_EQ(char_poly(Matroid::uniform(3, 4)), poly({-3, 6, -4, 1}));
  EXPECT_EQ(char_poly(Matroid::uniform(2, 3)), poly({2, -3, 1}));
  EXPECT_EQ(char_poly(Matroid::uniform(1, 1)), poly({-1, 1}));

  EXPECT_EQ(reduced_char_poly(Matroid::uniform(2, 3)), poly({-2, 1}));
  EXPECT_EQ(mu_vector(Matroid::uniform(2, 3)), mus({1, 2}));
  EXPECT_EQ(reduced_char_poly(Matroid::uniform(2, 2)), poly({-1, 1}));
  EXPECT_EQ(mu_vector(Matroid::uniform(2, 2)), mus({1, 1}));
  EXPECT_EQ(reduced_char_poly(Matroid::uniform(3, 4)), poly({3, -3, 1}));
  EXPECT_EQ(mu_vector(Matroid::uniform(3, 4)), mus({1, 3, 3}));
  EXPECT_EQ(mu_vector(Matroid::uniform(1, 1)), mus({1}));
}

TEST(CharPolyTest, IntervalMatchesMinor) {
  const Matroid m = u22_plus_u23();
  const FlatLattice lattice(m);
  for (int lo = 0; lo < lattice.size(); ++lo) {
    for (int hi = lo + 1; hi < lattice.size(); ++hi) {
      if (!lattice.leq(lo, hi)) continue;
      const Matroid minor =
          m.minor_interval(lattice.flat(lo), lattice.flat(hi)).matroid;
      EXPECT_EQ(interval_char_poly(lattice, lo, hi), char_poly(minor));
      EXPECT_EQ(interval_mu_vector(lattice, lo, hi), mu_vector(minor));
    }
  }
  EXPECT_THROW(interval_mu_vector(lattice, 3, 3), std::invalid_argument);
}

TEST(CharPolyTest, UniformClosedForm) {
  // chi of U_{r,n}: sum_{k<r} (-1)^k C(n,k) t^{r-k} + mu(E).
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::vector<Integer> c(r + 1, 0);
      Integer top = 0;
      for (int k = 0; k < r; ++k) {
        const Integer term = (k % 2 == 0 ? 1 : -1) * binomial(n, k);
        c[r - k] = term;
        top -= term;
      }
      c[0] = top;
      EXPECT_EQ(char_poly(Matroid::uniform(r, n)), IntPolynomial(c));
    }
  }
}

TEST(GammaTest, Examples) {
  const Matroid u23 = Matroid::uniform(2, 3);
  const FlatLattice lattice(u23);
  EXPECT_EQ(gamma(lattice, -1), -1);
  EXPECT_EQ(gamma(lattice, 0), 1);
  EXPECT_EQ(gamma(lattice, 1), -2);
  EXPECT_EQ(gamma(lattice, 2), 0);
  EXPECT_EQ(gamma_recursive(u23, 1), -2);
  EXPECT_THROW(gamma(lattice, 3), std::out_of_range);
  EXPECT_THROW(gamma(lattice, -2), std::out_of_range);
  EXPECT_THROW(gamma_recursive(u23, 3), std::out_of_range);
}

TEST(CharPolyInvariantTest, FullCatalog) {
  for (const CatalogEntry& e : full_catalog()) {
    const Matroid& m = e.matroid;
    const FlatLattice lattice(m);
    EXPECT_EQ(char_poly(lattice).evaluate(1), 0) << e.name;
    EXPECT_EQ(check_weisner(lattice), "") << e.name;
    EXPECT_EQ(maximal_chain_weight_sum(lattice), 1) << e.name;

    const MuVector mu = mu_vector(m);
    ASSERT_EQ(mu.size(), m.rank()) << e.name;
    EXPECT_EQ(mu.at(0), 1);
    for (int i = 0; i < m.rank(); ++i) {
      EXPECT_GT(mu.at(i), 0) << e.name;
      const Rational g = gamma(lattice, i);
      EXPECT_EQ(g.get_den(), 1) << e.name;
      EXPECT_EQ(abs(g), Rational(mu.at(i))) << e.name;
      EXPECT_EQ(sgn(g), i % 2 == 0 ? 1 : -1) << e.name;
      if (m.size() <= 7) {
        EXPECT_EQ(gamma_recursive(m, i), g) << e.name;
      }
      if (i >= 1 && i + 1 < m.rank()) {
        EXPECT_LE(mu.at(i - 1) * mu.at(i + 1), mu.at(i) * mu.at(i)) << e.name;
      }
    }
  }
}

TEST(WeisnerTest, HandComputedTop) {
  const FlatLattice lattice(Matroid::uniform(3, 4));
  const auto mu = mobius(lattice);
  Integer sum = 0;
  for (int f : lattice.lower_covers(lattice.top())) {
    if (!lattice.flat(f).contains(0)) sum += mu[f];
  }
  EXPECT_EQ(mu[lattice.top()], -sum);
  // Three of the six lines avoid element 0, each with mu = 1.
  EXPECT_EQ(sum, 3);
}

}  // namespace
}  // namespace matvol
