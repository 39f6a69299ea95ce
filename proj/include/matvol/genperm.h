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

#ifndef MATVOL_GENPERM_H_
#define MATVOL_GENPERM_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "matvol/rational.h"
#include "matvol/subset.h"

namespace matvol {

inline constexpr int kMaxSetFunctionSize = 16;
inline constexpr int kMaxPolytopeOracleSize = 5;

// A function 2^[n] -> Q indexed by subsets of {0, ..., n-1}, every value
// stored (zero by default).
class SetFunction {
 public:
  explicit SetFunction(int n);

  int n() const { return n_; }
  Subset ground() const { return Subset::full(n_); }
  const Rational& operator[](Subset s) const { return values_[s.bits()]; }
  Rational& operator[](Subset s) { return values_[s.bits()]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

 private:
  int n_;
  std::vector<Rational> values_;
};

// Rank functions of polytopes: z_I bounds sum_{i in I} x_i from above.
using SubmodularFunction = SetFunction;
// Coefficients y_I of a Minkowski sum of simplices sum_I y_I Delta_I.
using MinkowskiWeights = SetFunction;

// The first pair (I, J) with z(I | J) + z(I & J) > z(I) + z(J), if any.
std::optional<std::pair<Subset, Subset>> submodularity_violation(
    const SetFunction& z);
inline bool is_submodular(const SetFunction& z) {
  return !submodularity_violation(z).has_value();
}

// z_I - (|I| / n) z_[n]; requires z_empty = 0.
SetFunction normalize(const SetFunction& z);
bool is_normalized(const SetFunction& z);

// z_I = sum_{i in I} a_i.
SetFunction modular(std::span<const Rational> a);

// z_I = (n - |I|) |I| / 2, whose polytope is the standard permutohedron.
SetFunction permutohedron(int n);

// w_I = z_[n] - z_{[n] \ I}: the lower bounds on sum_{i in I} x_i over the
// same polytope.
SetFunction supermodular_dual(const SetFunction& z);

// y_I = sum_{J subset I} (-1)^{|I \ J|} w_J.
SetFunction mobius_invert(const SetFunction& w);

// The submodular function of sum_J y_J Delta_J: z_I = sum over J meeting I
// of y_J.
SetFunction from_minkowski(const SetFunction& y);

// Minkowski weights of P(z) when every y_I with |I| >= 2 is nonnegative.
// Singleton weights only translate the polytope and may have any sign.
std::optional<SetFunction> minkowski_weights(const SetFunction& z);

// Normalized volume of P(z) = {x : sum_{i in I} x_i <= z_I, sum x = z_[n]}
// via the chain formula over the boolean lattice. z must be normalized.
Rational gp_volume_chain_formula(const SetFunction& z, int jobs = 1);

// Normalized volume of sum_I y_I Delta_I by Postnikov's formula. Singleton
// weights are ignored; negative weights on larger sets are rejected.
Rational gp_volume_postnikov(const SetFunction& y);

// Exact normalized volume of the convex hull of the greedy vertices of P(z),
// measured after dropping the last coordinate. Requires n <= 5 and
// submodular z; lower-dimensional polytopes give 0.
Rational gp_volume_polytope(const SetFunction& z);

// The vertices of P(z) produced by the greedy algorithm, deduplicated and
// sorted.
std::vector<std::vector<Rational>> gp_vertices(const SetFunction& z);

}  // namespace matvol

#endif  // MATVOL_GENPERM_H_
