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

#include <algorithm>
#include <bitset>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "matvol/genperm.h"

namespace matvol {
namespace {

using Point = std::vector<Rational>;
// 5! = 120 greedy vertices at most.
using VertexSet = std::bitset<128>;

// Rank of a list of row vectors, by exact elimination.
int row_rank(std::vector<Point> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int rank = 0;
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

Rational determinant(std::vector<Point> m) {
  const std::size_t size = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t pivot = c;
    while (pivot < size && m[pivot][c] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < size; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < size; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

class FanVolume {
 public:
  FanVolume(std::vector<Point> vertices, std::vector<VertexSet> tight)
      : vertices_(std::move(vertices)), tight_(std::move(tight)) {}

  int affine_dim(const VertexSet& face) {
    auto it = dims_.find(face.to_string());
    if (it != dims_.end()) return it->second;
    std::vector<Point> rows;
    int base = -1;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (!face[v]) continue;
      if (base < 0) {
        base = static_cast<int>(v);
        continue;
      }
      Point diff(vertices_[v].size());
      for (std::size_t k = 0; k < diff.size(); ++k) {
        diff[k] = vertices_[v][k] - vertices_[base][k];
      }
      rows.push_back(std::move(diff));
    }
    const int dim = base < 0 ? -1 : row_rank(std::move(rows));
    dims_.emplace(face.to_string(), dim);
    return dim;
  }

  // Sum of |det| over the simplices of a centroid-fan triangulation of the
  // face, each coned over the apexes collected so far.
  Rational cone(const VertexSet& face, int dim, std::vector<Point>& apexes) {
    if (dim == 0) {
      std::size_t v = 0;
      while (!face[v]) ++v;
      return simplex_measure(apexes, vertices_[v]);
    }
    Point centroid(vertices_[0].size(), Rational(0));
    int count = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (!face[v]) continue;
      ++count;
      for (std::size_t k = 0; k < centroid.size(); ++k) {
        centroid[k] += vertices_[v][k];
      }
    }
    for (Rational& c : centroid) c /= count;

    std::set<std::string> seen;
    Rational total = 0;
    apexes.push_back(centroid);
    for (const VertexSet& hyperplane : tight_) {
      const VertexSet sub = face & hyperplane;
      if (sub.none() || sub == face) continue;
      if (!seen.insert(sub.to_string()).second) continue;
      if (affine_dim(sub) != dim - 1) continue;
      total += cone(sub, dim - 1, apexes);
    }
    apexes.pop_back();
    return total;
  }

 private:
  // |det| of the simplex on apexes + last, after dropping the final
  // coordinate.
  static Rational simplex_measure(const std::vector<Point>& apexes,
                                  const Point& last) {
    const std::size_t m = apexes.size();
    std::vector<Point> rows;
    for (std::size_t r = 0; r < m; ++r) {
      Point row(m);
      for (std::size_t k = 0; k < m; ++k) row[k] = apexes[r][k] - last[k];
      rows.push_back(std::move(row));
    }
    return abs(determinant(std::move(rows)));
  }

  std::vector<Point> vertices_;
  std::vector<VertexSet> tight_;
  std::map<std::string, int> dims_;
};

}  // namespace

std::vector<std::vector<Rational>> gp_vertices(const SetFunction& z) {
  const int n = z.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::set<Point> vertices;
  do {
    Point v(n);
    Subset prefix;
    for (int k = 0; k < n; ++k) {
      const Subset grown = prefix.with(order[k]);
      v[order[k]] = z[grown] - z[prefix];
      prefix = grown;
    }
    vertices.insert(std::move(v));
  } while (std::next_permutation(order.begin(), order.end()));
  return {vertices.begin(), vertices.end()};
}

Rational gp_volume_polytope(const SetFunction& z) {
  const int n = z.n();
  if (n > kMaxPolytopeOracleSize) {
    throw std::invalid_argument("polytope oracle supports n <= " +
                                std::to_string(kMaxPolytopeOracleSize));
  }
  if (z[Subset()] != 0) {
    throw std::invalid_argument("polytope oracle needs z_empty = 0");
  }
  if (auto bad = submodularity_violation(z)) {
    throw std::invalid_argument("z is not submodular at " +
                                bad->first.to_string() + ", " +
                                bad->second.to_string());
  }
  std::vector<Point> vertices = gp_vertices(z);
  std::vector<VertexSet> tight;
  for (Subset::Mask m = 1; m < z.ground().bits(); ++m) {
    const Subset s(m);
    VertexSet on;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      Rational sum = 0;
      for (int i : s.elements()) sum += vertices[v][i];
      if (sum == z[s]) on.set(v);
    }
    tight.push_back(on);
  }
  VertexSet all;
  for (std::size_t v = 0; v < vertices.size(); ++v) all.set(v);

  FanVolume fan(std::move(vertices), std::move(tight));
  const int m = n - 1;
  if (fan.affine_dim(all) < m) return 0;
  std::vector<Point> apexes;
  return fan.cone(all, m, apexes) / Rational(factorial(m));
}

}  // namespace matvol
