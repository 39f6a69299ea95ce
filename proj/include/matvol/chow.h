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

#ifndef MATVOL_CHOW_H_
#define MATVOL_CHOW_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matvol/charpoly.h"
#include "matvol/matroid.h"
#include "matvol/rational.h"

namespace matvol {

// A monomial x_{F_1}^{d_1} ... x_{F_k}^{d_k} in variables indexed by subsets.
//
// The support is kept sorted in canonical subset order (size, then
// elements), which for a chain is the inclusion order. Repeated subsets are
// merged by adding exponents; every stored exponent is positive. Whether the
// support is actually a chain is a property, not an invariant, because the
// toppling operators are defined on arbitrary monomials.
class ChainMonomial {
 public:
  ChainMonomial() = default;
  ChainMonomial(std::vector<Subset> flats, std::vector<int> exps);

  const std::vector<Subset>& flats() const { return flats_; }
  const std::vector<int>& exps() const { return exps_; }
  int length() const { return static_cast<int>(flats_.size()); }
  int degree() const;
  bool is_chain() const;
  bool is_square_free() const;
  int exponent_of(Subset flat) const;

  // This monomial times x_flat^delta; delta may be negative as long as the
  // resulting exponent is not.
  ChainMonomial multiplied(Subset flat, int delta) const;

  // "t_{0}^2*t_{0,1}"; the empty monomial prints as "1".
  std::string to_string(char variable = 't') const;

  // Lexicographic on the flats in canonical order, then on the exponents.
  friend bool operator<(const ChainMonomial& a, const ChainMonomial& b);
  friend bool operator==(const ChainMonomial&, const ChainMonomial&) = default;

 private:
  std::vector<Subset> flats_;
  std::vector<int> exps_;
};

// Exact-rational linear combination of monomials with deterministic order.
class SparseChainPolynomial {
 public:
  using TermMap = std::map<ChainMonomial, Rational>;

  SparseChainPolynomial() = default;
  static SparseChainPolynomial constant(const Rational& value);
  static SparseChainPolynomial monomial(ChainMonomial mono,
                                        const Rational& coefficient = 1);

  void add_term(const ChainMonomial& mono, const Rational& coefficient);
  Rational coefficient(const ChainMonomial& mono) const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // The common degree of all terms, or nullopt if empty or inhomogeneous.
  std::optional<int> homogeneous_degree() const;

  SparseChainPolynomial& operator+=(const SparseChainPolynomial& other);
  SparseChainPolynomial& operator-=(const SparseChainPolynomial& other);
  SparseChainPolynomial& operator*=(const Rational& scalar);
  friend SparseChainPolynomial operator+(SparseChainPolynomial a,
                                         const SparseChainPolynomial& b) {
    return a += b;
  }
  friend SparseChainPolynomial operator-(SparseChainPolynomial a,
                                         const SparseChainPolynomial& b) {
    return a -= b;
  }
  friend bool operator==(const SparseChainPolynomial&,
                         const SparseChainPolynomial&) = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// Values t_F for a divisor sum_F t_F x_F; unassigned subsets read as 0.
class DivisorAssignment {
 public:
  void set(Subset flat, const Rational& value);
  Rational value(Subset flat) const;
  const std::unordered_map<Subset, Rational>& values() const {
    return values_;
  }

 private:
  std::unordered_map<Subset, Rational> values_;
};

Rational evaluate(const SparseChainPolynomial& polynomial,
                  const DivisorAssignment& assignment);

// Intersection theory on the Chow ring of a loopless matroid.
//
// Holds the matroid, its lattice of flats and a thread-safe memo of
// mu-vectors of the minors M|G/F, keyed by the interval (F, G).
class ChowRing {
 public:
  explicit ChowRing(Matroid matroid);
  ~ChowRing();
  ChowRing(ChowRing&&) noexcept;
  ChowRing& operator=(ChowRing&&) noexcept;

  const Matroid& matroid() const { return matroid_; }
  const FlatLattice& lattice() const { return lattice_; }
  // d = rk M - 1, the top degree.
  int degree() const { return lattice_.rank() - 1; }

  // Throws std::invalid_argument unless every subset in the support is a
  // proper flat and the total degree is d.
  void validate(const ChainMonomial& mono) const;

  // deg(x_{F_1}^{d_1} ... x_{F_k}^{d_k}) in closed form. A support that is
  // not a chain gives 0 and clears *is_chain when provided.
  Integer intersection_number(const ChainMonomial& mono,
                              bool* is_chain = nullptr) const;

  // VP_M: the coefficient of each chain monomial is the multinomial
  // coefficient times its intersection number. Only nonzero terms are kept.
  // Rank-1 matroids give the constant 1.
  SparseChainPolynomial volume_polynomial(int jobs = 1) const;

  // t_F = rk F on every proper flat.
  DivisorAssignment shifted_rank_divisor() const;
  Rational shifted_rank_volume(int jobs = 1) const;

  // mu-vector of M|upper/lower for lattice indices lower < upper.
  MuVector interval_mu(int lower, int upper) const;

 private:
  struct Cache;

  int index_of_proper_flat(Subset s) const;

  Matroid matroid_;
  FlatLattice lattice_;
  std::unique_ptr<Cache> cache_;
};

// Calls f on every chain monomial x_{F_1}^{d_1} ... x_{F_k}^{d_k} of degree
// d, for all chains of proper flats and all compositions of d.
void for_each_chain_monomial(const ChowRing& ring,
                             const std::function<void(const ChainMonomial&)>& f);

// Convenience wrappers.
SparseChainPolynomial volume_polynomial(const Matroid& matroid, int jobs = 1);
Rational shifted_rank_volume(const Matroid& matroid, int jobs = 1);

}  // namespace matvol

#endif  // MATVOL_CHOW_H_
