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

#ifndef MATVOL_MATROID_H_
#define MATVOL_MATROID_H_

#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matvol/subset.h"

namespace matvol {

// A loopless matroid on {0, ..., n-1}, stored by its list of bases.
//
// Instances are immutable after construction. Rank queries scan the basis
// list, which is adequate for the small ground sets this library targets.
class Matroid {
 public:
  // U_{r,n}: every r-subset is a basis. Requires 1 <= r <= n.
  static Matroid uniform(int r, int n);

  // Cycle matroid of a multigraph; element i is edges[i]. Self-loops are
  // rejected because they would be matroid loops.
  static Matroid graphic(int vertices,
                         std::span<const std::pair<int, int>> edges);

  // Verifies equicardinality, the basis-exchange axiom and looplessness.
  static Matroid from_bases(int n, std::vector<Subset> bases);

  // Second summand's labels are shifted by first.size().
  static Matroid direct_sum(const Matroid& first, const Matroid& second);

  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return Subset::full(n_); }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const { return basis_set_.contains(s.bits()); }

  int rank(Subset s) const;
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }

  struct Minor;
  // The minor M|upper/lower on upper \ lower, relabeled 0..m-1 in increasing
  // order of the original labels. Both arguments must be flats.
  Minor minor_interval(Subset lower, Subset upper) const;

  // Keeps the smallest element of every rank-1 flat.
  Matroid simplify() const;

  // Finest partition of the ground set into separators, in increasing order
  // of smallest element.
  std::vector<Subset> connected_components() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, std::vector<Subset> bases);

  // Builds the matroid whose bases are the r-subsets of {0..n-1} that are
  // independent for the given rank oracle. No axiom checks.
  template <typename RankFn>
  static Matroid from_rank_oracle(int n, int r, RankFn&& rank_fn);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> bases_;
  std::unordered_set<Subset::Mask> basis_set_;
};

struct Matroid::Minor {
  Matroid matroid;
  // labels[i] is the original element that became element i.
  std::vector<int> labels;
};

// The lattice of flats, graded by rank.
//
// Flats are indexed 0..size()-1, sorted by rank and then canonically within
// a rank, so index 0 is the bottom (the empty set) and size()-1 is the top
// (the ground set).
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& matroid);

  int rank() const { return rank_; }
  int ground_size() const { return n_; }
  int size() const { return static_cast<int>(flats_.size()); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }

  Subset flat(int index) const { return flats_[index]; }
  int rank_of(int index) const { return ranks_[index]; }
  const std::vector<Subset>& flats() const { return flats_; }
  std::optional<int> index_of(Subset s) const;

  // Indices of the flats of rank k.
  std::span<const int> flats_of_rank(int k) const;
  // Flats covering / covered by the given flat.
  const std::vector<int>& upper_covers(int index) const { return up_[index]; }
  const std::vector<int>& lower_covers(int index) const {
    return down_[index];
  }

  // All flats other than the bottom and the top.
  std::vector<int> proper_flats() const;
  // Flats G with flat(lower) <= G <= flat(upper), in index order.
  std::vector<int> interval(int lower, int upper) const;

  bool leq(int a, int b) const { return flats_[a].is_subset_of(flats_[b]); }

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> flats_;
  std::vector<int> ranks_;
  std::vector<int> rank_offsets_;
  std::vector<int> order_;
  std::unordered_map<Subset::Mask, int> index_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
};

}  // namespace matvol

#endif  // MATVOL_MATROID_H_
