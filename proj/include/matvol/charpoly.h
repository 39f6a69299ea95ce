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

#ifndef MATVOL_CHARPOLY_H_
#define MATVOL_CHARPOLY_H_

#include <string>
#include <vector>

#include "matvol/matroid.h"
#include "matvol/rational.h"

namespace matvol {

// Dense polynomial with integer coefficients, lowest degree first, trailing
// zeros trimmed. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  // Zero outside the stored range.
  Integer coefficient(int power) const;
  Integer evaluate(const Integer& t) const;

  // Exact division by (t - root); throws std::logic_error on a remainder.
  IntPolynomial divide_by_linear(const Integer& root) const;

  // "t^3 - 4*t^2 + 6*t - 3"
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> coefficients_;
};

// mu^0, ..., mu^{r-1}: the unsigned coefficients of the reduced
// characteristic polynomial, leading coefficient first.
class MuVector {
 public:
  MuVector() = default;
  explicit MuVector(std::vector<Integer> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  // Zero for indices outside 0..size()-1.
  Integer at(int i) const {
    return (i < 0 || i >= size()) ? Integer(0) : values_[i];
  }
  const std::vector<Integer>& values() const { return values_; }

  friend bool operator==(const MuVector&, const MuVector&) = default;

 private:
  std::vector<Integer> values_;
};

// mu(lower, G) for every flat G of the lattice (zero outside [lower, top]).
std::vector<Integer> mobius_from(const FlatLattice& lattice, int lower);

// mu(bottom, G) indexed by flat.
inline std::vector<Integer> mobius(const FlatLattice& lattice) {
  return mobius_from(lattice, lattice.bottom());
}

// Characteristic polynomial of the interval [lower, upper], i.e. of the minor
// M|upper/lower: sum over G in [lower, upper] of mu(lower, G) t^{rk upper -
// rk G}.
IntPolynomial interval_char_poly(const FlatLattice& lattice, int lower,
                                 int upper);
MuVector interval_mu_vector(const FlatLattice& lattice, int lower, int upper);

IntPolynomial char_poly(const FlatLattice& lattice);
IntPolynomial char_poly(const Matroid& matroid);
IntPolynomial reduced_char_poly(const Matroid& matroid);
MuVector mu_vector(const Matroid& matroid);
MuVector mu_vector_from_reduced(const IntPolynomial& reduced);

// gamma(M, i) for -1 <= i <= rk M, by the signed sum over initial chains
// G_0 < G_1 < ... < G_i < E with rk G_j = j.
Rational gamma(const FlatLattice& lattice, int i);

// The same quantity through the restriction recursion
// gamma(M, i) = sum_{rk F = i} -(|E \ F| / |E|) gamma(M|F, i - 1),
// building each restriction as a matroid.
Rational gamma_recursive(const Matroid& matroid, int i);

// Checks mu(0, G) = -sum_{F covered by G, a not in F} mu(0, F) for every
// flat G and every a in G. Returns an empty string or the first failure.
std::string check_weisner(const FlatLattice& lattice);

// Sum over maximal chains of proper flats of
// prod_j |G_j \ G_{j-1}| / |E \ G_{j-1}|; equals 1 for every matroid.
Rational maximal_chain_weight_sum(const FlatLattice& lattice);

}  // namespace matvol

#endif  // MATVOL_CHARPOLY_H_
