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

#include "matvol/toppling.h"

#include <stdexcept>

namespace matvol {
namespace {

void topple_term(const ChowRing& ring, const ChainMonomial& mono,
                 const Rational& coeff, Subset flat, bool tight,
                 SparseChainPolynomial& out) {
  if (!mono.is_chain()) return;
  const FlatLattice& lattice = ring.lattice();
  const auto& flats = mono.flats();
  const auto& exps = mono.exps();
  const int k = mono.length();
  int i = 0;
  while (i < k && flats[i] != flat) ++i;
  if (i == k || exps[i] <= 1) {
    out.add_term(mono, coeff);
    return;
  }

  const Subset below = i > 0 ? flats[i - 1] : Subset();
  const Subset above = i + 1 < k ? flats[i + 1] : lattice.flat(lattice.top());
  const int below_rank = i > 0 ? ring.matroid().rank(below) : 0;

  bool filtered = tight;
  for (int j = 0; j < i && filtered; ++j) {
    if (exps[j] != 1 || ring.matroid().rank(flats[j]) != j + 1) {
      filtered = false;
    }
  }

  const ChainMonomial reduced = mono.multiplied(flat, -1);
  const int lower_size = (flat - below).size();
  const int upper_size = (above - flat).size();
  for (int g = 0; g < lattice.size(); ++g) {
    const Subset candidate = lattice.flat(g);
    const int rank = lattice.rank_of(g);
    if (below.is_proper_subset_of(candidate) &&
        candidate.is_proper_subset_of(flat)) {
      if (filtered && rank != below_rank + 1) continue;
      out.add_term(reduced.multiplied(candidate, 1),
                   coeff * ratio(-(candidate - below).size(), lower_size));
    } else if (flat.is_proper_subset_of(candidate) &&
               candidate.is_proper_subset_of(above)) {
      if (filtered && rank != exps[i] + below_rank) continue;
      out.add_term(reduced.multiplied(candidate, 1),
                   coeff * ratio(-(above - candidate).size(), upper_size));
    }
  }
}

}  // namespace

SparseChainPolynomial topple(const ChowRing& ring,
                             const SparseChainPolynomial& polynomial,
                             Subset flat, bool tight) {
  SparseChainPolynomial out;
  for (const auto& [mono, coeff] : polynomial.terms()) {
    topple_term(ring, mono, coeff, flat, tight, out);
  }
  return out;
}

SparseChainPolynomial expand_by_toppling(const ChowRing& ring,
                                         const ChainMonomial& mono,
                                         bool tight) {
  ring.validate(mono);
  SparseChainPolynomial current = SparseChainPolynomial::monomial(mono);
  for (int i = 0; i < mono.length(); ++i) {
    for (int step = 1; step < mono.exps()[i]; ++step) {
      current = topple(ring, current, mono.flats()[i], tight);
    }
  }
  for (const auto& [term, coeff] : current.terms()) {
    if (!term.is_square_free()) {
      throw std::logic_error("toppling left the non-square-free term " +
                             term.to_string('x'));
    }
  }
  return current;
}

Rational degree_via_toppling(const ChowRing& ring, const ChainMonomial& mono,
                             bool tight) {
  if (!mono.is_chain()) {
    ring.validate(mono);
    return 0;
  }
  const SparseChainPolynomial expansion = expand_by_toppling(ring, mono, tight);
  Rational total = 0;
  for (const auto& [term, coeff] : expansion.terms()) {
    if (term.length() == ring.degree() && term.is_chain()) total += coeff;
  }
  return total;
}

}  // namespace matvol
