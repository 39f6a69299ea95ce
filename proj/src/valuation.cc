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

#include "matvol/valuation.h"

#include <stdexcept>
#include <unordered_set>

namespace matvol {

MatroidPolytope matroid_polytope(const Matroid& matroid) {
  MatroidPolytope polytope{matroid, {}, 0};
  for (Subset basis : matroid.bases()) {
    std::vector<int> v(matroid.size(), 0);
    for (int e : basis.elements()) v[e] = 1;
    polytope.vertices.push_back(std::move(v));
  }
  polytope.dim = matroid.size() -
                 static_cast<int>(matroid.connected_components().size());
  return polytope;
}

int affine_dimension(const std::vector<std::vector<int>>& vertices) {
  if (vertices.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    std::vector<Rational> row;
    for (std::size_t k = 0; k < vertices[v].size(); ++k) {
      row.emplace_back(vertices[v][k] - vertices[0][k]);
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const std::size_t cols = vertices[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size());
       ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

bool bases_within(const Matroid& inner, const Matroid& outer) {
  for (Subset b : inner.bases()) {
    if (!outer.is_basis(b)) return false;
  }
  return true;
}

void check_same_shape(const Matroid& parent, const Matroid& piece,
                      const std::string& what) {
  if (piece.size() != parent.size() || piece.rank() != parent.rank()) {
    throw std::invalid_argument(
        what + " must have the parent's ground set size " +
        std::to_string(parent.size()) + " and rank " +
        std::to_string(parent.rank()));
  }
}

}  // namespace

void validate(const Subdivision& subdivision) {
  const Matroid& parent = subdivision.parent;
  if (subdivision.cells.empty()) {
    throw std::invalid_argument("subdivision has no cells");
  }
  std::unordered_set<Subset> covered;
  for (std::size_t i = 0; i < subdivision.cells.size(); ++i) {
    const Matroid& cell = subdivision.cells[i];
    const std::string what = "cell " + std::to_string(i);
    check_same_shape(parent, cell, what);
    if (!bases_within(cell, parent)) {
      throw std::invalid_argument(what + " has a basis outside the parent");
    }
    covered.insert(cell.bases().begin(), cell.bases().end());
  }
  for (Subset b : parent.bases()) {
    if (!covered.contains(b)) {
      throw std::invalid_argument("no cell contains the vertex of basis " +
                                  b.to_string());
    }
  }
  for (std::size_t i = 0; i < subdivision.interior_faces.size(); ++i) {
    const InteriorFace& face = subdivision.interior_faces[i];
    const std::string what = "interior face " + std::to_string(i);
    check_same_shape(parent, face.matroid, what);
    bool inside = false;
    for (const Matroid& cell : subdivision.cells) {
      inside = inside || bases_within(face.matroid, cell);
    }
    if (!inside) {
      throw std::invalid_argument(what + " is not contained in any cell");
    }
    const int dim = matroid_polytope(face.matroid).dim;
    if (face.dim && *face.dim != dim) {
      throw std::invalid_argument(what + " declares dimension " +
                                  std::to_string(*face.dim) +
                                  " but its polytope has dimension " +
                                  std::to_string(dim));
    }
  }
}

ValuationReport check_valuation(const Subdivision& subdivision, int jobs) {
  validate(subdivision);
  const int parent_dim = matroid_polytope(subdivision.parent).dim;
  ValuationReport report;

  auto account = [&](const Matroid& piece, int sign) {
    ChowRing ring(piece);
    SparseChainPolynomial vp = ring.volume_polynomial(jobs);
    const Rational shrvol = evaluate(vp, ring.shifted_rank_divisor());
    vp *= Rational(-sign);
    report.vp_difference += vp;
    report.shrvol_difference -= sign * shrvol;
    return shrvol;
  };

  {
    ChowRing ring(subdivision.parent);
    report.vp_difference = ring.volume_polynomial(jobs);
    report.parent_shrvol =
        evaluate(report.vp_difference, ring.shifted_rank_divisor());
    report.shrvol_difference = report.parent_shrvol;
  }
  for (const Matroid& cell : subdivision.cells) {
    const int gap = parent_dim - matroid_polytope(cell).dim;
    report.cell_shrvol.push_back(account(cell, gap % 2 == 0 ? 1 : -1));
  }
  for (const InteriorFace& face : subdivision.interior_faces) {
    const int gap = parent_dim - matroid_polytope(face.matroid).dim;
    report.face_shrvol.push_back(account(face.matroid, gap % 2 == 0 ? 1 : -1));
  }
  return report;
}

}  // namespace matvol
