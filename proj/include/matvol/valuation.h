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

#ifndef MATVOL_VALUATION_H_
#define MATVOL_VALUATION_H_

#include <optional>
#include <vector>

#include "matvol/chow.h"
#include "matvol/matroid.h"

namespace matvol {

// Conv(e_B : B a basis) in R^n.
struct MatroidPolytope {
  Matroid matroid;
  // Indicator vectors of the bases, in basis order.
  std::vector<std::vector<int>> vertices;
  // n minus the number of connected components.
  int dim = 0;
};

MatroidPolytope matroid_polytope(const Matroid& matroid);

// Affine dimension of the vertex set, by exact elimination.
int affine_dimension(const std::vector<std::vector<int>>& vertices);

struct InteriorFace {
  Matroid matroid;
  // When given, must equal the polytope dimension of `matroid`.
  std::optional<int> dim;
};

struct Subdivision {
  Matroid parent;
  std::vector<Matroid> cells;
  std::vector<InteriorFace> interior_faces;
};

// Throws std::invalid_argument when a piece lives on another ground set or
// rank, a cell or face has a basis outside the parent (a face: outside every
// cell), the cells miss a parent basis, or a declared face dimension is
// wrong.
void validate(const Subdivision& subdivision);

struct ValuationReport {
  // VP(parent) minus the signed sum over cells and interior faces.
  SparseChainPolynomial vp_difference;
  Rational parent_shrvol;
  std::vector<Rational> cell_shrvol;
  std::vector<Rational> face_shrvol;
  Rational shrvol_difference;

  bool holds() const { return vp_difference.is_zero() && shrvol_difference == 0; }
};

// Cells enter with sign +1 and an interior face Q with
// (-1)^{dim Delta(parent) - dim Q}.
ValuationReport check_valuation(const Subdivision& subdivision, int jobs = 1);

}  // namespace matvol

#endif  // MATVOL_VALUATION_H_
