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

#ifndef MATVOL_TOPPLING_H_
#define MATVOL_TOPPLING_H_

#include "matvol/chow.h"

namespace matvol {

// Applies the toppling operator at `flat` to every term of `polynomial`.
//
// Terms whose support is not a chain vanish. A term in which `flat` has
// exponent > 1 is rewritten through the linear relation of the Chow ring
// that isolates x_flat; other terms are kept. With tight = true the new
// variables are restricted to the ranks that can survive in top degree,
// provided the term is initial below `flat`; when it is not, the plain
// rewrite is used.
SparseChainPolynomial topple(const ChowRing& ring,
                             const SparseChainPolynomial& polynomial,
                             Subset flat, bool tight);

// Expands a chain monomial of degree d into square-free monomials by
// toppling d_1 - 1 times at F_1, then d_2 - 1 times at F_2, and so on.
// Throws std::logic_error if a non-square-free term survives.
SparseChainPolynomial expand_by_toppling(const ChowRing& ring,
                                         const ChainMonomial& mono,
                                         bool tight = true);

// The degree of `mono`: the sum of the coefficients of the maximal-chain
// terms in its toppling expansion.
Rational degree_via_toppling(const ChowRing& ring, const ChainMonomial& mono,
                             bool tight = true);

}  // namespace matvol

#endif  // MATVOL_TOPPLING_H_
