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

#include "matvol/subset.h"

#include <algorithm>
#include <stdexcept>

namespace matvol {

Subset Subset::from_elements(std::span<const int> elements) {
  Mask bits = 0;
  for (int e : elements) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw std::invalid_argument("element label out of range: " +
                                  std::to_string(e));
    }
    bits |= Mask{1} << e;
  }
  return Subset(bits);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::string Subset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  if (a == b) return false;
  // Equal sizes: the first differing element decides. The lowest bit where
  // they differ belongs to the set with the lexicographically smaller list.
  Subset::Mask diff = a.bits() ^ b.bits();
  int lowest = std::countr_zero(diff);
  return a.contains(lowest);
}

void for_each_subset_of_size(Subset universe, int k,
                             const std::function<void(Subset)>& f) {
  std::vector<int> elems = universe.elements();
  const int m = static_cast<int>(elems.size());
  if (k < 0 || k > m) return;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    Subset::Mask bits = 0;
    for (int i : pick) bits |= Subset::Mask{1} << elems[i];
    f(Subset(bits));
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace matvol
