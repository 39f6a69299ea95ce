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

#include "matvol/matroid.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace matvol {
namespace {

void check_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw std::invalid_argument("ground set size must be in 1.." +
                                std::to_string(kMaxGroundSize) + ", got " +
                                std::to_string(n));
  }
}

// Minimal union-find for spanning forests and component merging.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Matroid::Matroid(int n, std::vector<Subset> bases)
    : n_(n), bases_(std::move(bases)) {
  std::sort(bases_.begin(), bases_.end(), canonical_less);
  rank_ = bases_.front().size();
  basis_set_.reserve(bases_.size());
  for (Subset b : bases_) basis_set_.insert(b.bits());
}

template <typename RankFn>
Matroid Matroid::from_rank_oracle(int n, int r, RankFn&& rank_fn) {
  std::vector<Subset> bases;
  for_each_subset_of_size(Subset::full(n), r, [&](Subset s) {
    if (rank_fn(s) == r) bases.push_back(s);
  });
  return Matroid(n, std::move(bases));
}

Matroid Matroid::uniform(int r, int n) {
  check_ground_size(n);
  if (r < 1 || r > n) {
    throw std::invalid_argument("uniform matroid needs 1 <= r <= n, got r=" +
                                std::to_string(r) + ", n=" + std::to_string(n));
  }
  std::vector<Subset> bases;
  for_each_subset_of_size(Subset::full(n), r,
                          [&](Subset s) { bases.push_back(s); });
  return Matroid(n, std::move(bases));
}

Matroid Matroid::graphic(int vertices,
                         std::span<const std::pair<int, int>> edges) {
  if (vertices < 1) throw std::invalid_argument("graph needs a vertex");
  const int n = static_cast<int>(edges.size());
  check_ground_size(n);
  DisjointSets components(vertices);
  int forest_size = 0;
  for (int i = 0; i < n; ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " has an endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " is a self-loop (a matroid loop)");
    }
    if (components.unite(u, v)) ++forest_size;
  }
  auto is_forest = [&](Subset s) {
    DisjointSets dsu(vertices);
    for (int e : s.elements()) {
      if (!dsu.unite(edges[e].first, edges[e].second)) return false;
    }
    return true;
  };
  std::vector<Subset> bases;
  for_each_subset_of_size(Subset::full(n), forest_size, [&](Subset s) {
    if (is_forest(s)) bases.push_back(s);
  });
  return Matroid(n, std::move(bases));
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  check_ground_size(n);
  if (bases.empty()) throw std::invalid_argument("basis list is empty");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  const int r = bases.front().size();
  Subset covered;
  for (Subset b : bases) {
    if (!b.is_subset_of(Subset::full(n))) {
      throw std::invalid_argument("basis " + b.to_string() +
                                  " is not inside the ground set");
    }
    if (b.size() != r) {
      throw std::invalid_argument("bases are not equicardinal");
    }
    covered = covered | b;
  }
  for (int e = 0; e < n; ++e) {
    if (!covered.contains(e)) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " is a loop");
    }
  }
  std::unordered_set<Subset::Mask> lookup;
  for (Subset b : bases) lookup.insert(b.bits());
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      for (int e : (b1 - b2).elements()) {
        bool exchanged = false;
        for (int f : (b2 - b1).elements()) {
          if (lookup.contains(b1.without(e).with(f).bits())) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) {
          throw std::invalid_argument(
              "basis exchange fails for " + b1.to_string() + ", " +
              b2.to_string() + " at element " + std::to_string(e));
        }
      }
    }
  }
  return Matroid(n, std::move(bases));
}

Matroid Matroid::direct_sum(const Matroid& first, const Matroid& second) {
  const int n = first.n_ + second.n_;
  check_ground_size(n);
  std::vector<Subset> bases;
  bases.reserve(first.bases_.size() * second.bases_.size());
  for (Subset b1 : first.bases_) {
    for (Subset b2 : second.bases_) {
      bases.push_back(b1 | Subset(b2.bits() << first.n_));
    }
  }
  return Matroid(n, std::move(bases));
}

int Matroid::rank(Subset s) const {
  int best = 0;
  for (Subset b : bases_) {
    best = std::max(best, (b & s).size());
    if (best == rank_) break;
  }
  return best;
}

Subset Matroid::closure(Subset s) const {
  const int base = rank(s);
  Subset result = s;
  for (int e = 0; e < n_; ++e) {
    if (!s.contains(e) && rank(s.with(e)) == base) result = result.with(e);
  }
  return result;
}

Matroid::Minor Matroid::minor_interval(Subset lower, Subset upper) const {
  if (!lower.is_subset_of(upper)) {
    throw std::invalid_argument("minor_interval: " + lower.to_string() +
                                " is not contained in " + upper.to_string());
  }
  if (!is_flat(lower) || !is_flat(upper)) {
    throw std::invalid_argument("minor_interval: arguments must be flats");
  }
  if (lower == upper) {
    throw std::invalid_argument("minor_interval: empty minor");
  }
  std::vector<int> labels = (upper - lower).elements();
  const int m = static_cast<int>(labels.size());
  const int lower_rank = rank(lower);
  const int r = rank(upper) - lower_rank;
  auto lift = [&](Subset s) {
    Subset original = lower;
    for (int i : s.elements()) original = original.with(labels[i]);
    return original;
  };
  Matroid minor = from_rank_oracle(
      m, r, [&](Subset s) { return rank(lift(s)) - lower_rank; });
  return {std::move(minor), std::move(labels)};
}

Matroid Matroid::simplify() const {
  std::vector<int> keep;
  Subset seen;
  for (int e = 0; e < n_; ++e) {
    if (seen.contains(e)) continue;
    keep.push_back(e);
    seen = seen | closure(Subset::singleton(e));
  }
  const int m = static_cast<int>(keep.size());
  auto lift = [&](Subset s) {
    Subset original;
    for (int i : s.elements()) original = original.with(keep[i]);
    return original;
  };
  return from_rank_oracle(m, rank_, [&](Subset s) { return rank(lift(s)); });
}

std::vector<Subset> Matroid::connected_components() const {
  // Components are the connected pieces of the fundamental-circuit graph
  // with respect to any single basis.
  DisjointSets dsu(n_);
  const Subset basis = bases_.front();
  for (int e = 0; e < n_; ++e) {
    if (basis.contains(e)) continue;
    for (int f : basis.elements()) {
      if (is_basis(basis.without(f).with(e))) dsu.unite(e, f);
    }
  }
  std::vector<Subset> blocks;
  std::unordered_map<int, std::size_t> block_of_root;
  for (int e = 0; e < n_; ++e) {
    int root = dsu.find(e);
    auto [it, inserted] = block_of_root.try_emplace(root, blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second] = blocks[it->second].with(e);
  }
  return blocks;
}

FlatLattice::FlatLattice(const Matroid& matroid)
    : n_(matroid.size()), rank_(matroid.rank()) {
  const Subset ground = matroid.ground();
  if (!matroid.closure(Subset()).empty()) {
    throw std::invalid_argument("flat lattice requires a loopless matroid");
  }
  std::vector<std::vector<Subset>> by_rank(rank_ + 1);
  by_rank[0].push_back(Subset());
  std::unordered_set<Subset::Mask> seen{0};
  for (int k = 0; k < rank_; ++k) {
    for (Subset f : by_rank[k]) {
      // Covers of f partition ground \ f; each cover is cl(f + e).
      Subset accounted = f;
      for (int e = 0; e < n_; ++e) {
        if (accounted.contains(e)) continue;
        Subset g = matroid.closure(f.with(e));
        if (!(g & accounted).is_subset_of(f)) {
          throw std::logic_error("cover-partition axiom violated at " +
                                 f.to_string());
        }
        accounted = accounted | g;
        if (seen.insert(g.bits()).second) by_rank[k + 1].push_back(g);
      }
      if (accounted != ground) {
        throw std::logic_error("covers do not exhaust the ground set");
      }
    }
  }
  if (by_rank[rank_].size() != 1 || by_rank[rank_].front() != ground) {
    throw std::logic_error("top of the flat lattice is not the ground set");
  }
  for (int k = 0; k <= rank_; ++k) {
    std::sort(by_rank[k].begin(), by_rank[k].end(), canonical_less);
    rank_offsets_.push_back(static_cast<int>(flats_.size()));
    for (Subset f : by_rank[k]) {
      index_.emplace(f.bits(), static_cast<int>(flats_.size()));
      flats_.push_back(f);
      ranks_.push_back(k);
    }
  }
  rank_offsets_.push_back(static_cast<int>(flats_.size()));
  order_.resize(flats_.size());
  std::iota(order_.begin(), order_.end(), 0);

  up_.assign(flats_.size(), {});
  down_.assign(flats_.size(), {});
  for (int k = 0; k < rank_; ++k) {
    for (int lo = rank_offsets_[k]; lo < rank_offsets_[k + 1]; ++lo) {
      for (int hi = rank_offsets_[k + 1]; hi < rank_offsets_[k + 2]; ++hi) {
        if (flats_[lo].is_subset_of(flats_[hi])) {
          up_[lo].push_back(hi);
          down_[hi].push_back(lo);
        }
      }
    }
  }
}

std::optional<int> FlatLattice::index_of(Subset s) const {
  auto it = index_.find(s.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const int> FlatLattice::flats_of_rank(int k) const {
  if (k < 0 || k > rank_) return {};
  return std::span<const int>(order_).subspan(
      rank_offsets_[k], rank_offsets_[k + 1] - rank_offsets_[k]);
}

std::vector<int> FlatLattice::proper_flats() const {
  std::vector<int> out;
  for (int i = 1; i + 1 < size(); ++i) out.push_back(i);
  return out;
}

std::vector<int> FlatLattice::interval(int lower, int upper) const {
  std::vector<int> out;
  for (int i = lower; i <= upper; ++i) {
    if (leq(lower, i) && leq(i, upper)) out.push_back(i);
  }
  return out;
}

}  // namespace matvol
