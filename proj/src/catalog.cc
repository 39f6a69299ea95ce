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

#include "matvol/catalog.h"

#include <array>
#include <utility>

namespace matvol {

Matroid complete_graph_k4() {
  const std::array<std::pair<int, int>, 6> edges{
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return Matroid::graphic(4, edges);
}

Matroid fano() {
  std::vector<Subset> lines;
  for (int i = 0; i < 7; ++i) {
    lines.push_back(Subset::singleton(i) | Subset::singleton((i + 1) % 7) |
                    Subset::singleton((i + 3) % 7));
  }
  std::vector<Subset> bases;
  for_each_subset_of_size(Subset::full(7), 3, [&](Subset s) {
    for (Subset line : lines) {
      if (s == line) return;
    }
    bases.push_back(s);
  });
  return Matroid::from_bases(7, std::move(bases));
}

Matroid vamos() {
  const Subset pairs[4] = {Subset(0x03), Subset(0x0c), Subset(0x30),
                           Subset(0xc0)};
  std::vector<Subset> circuits;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (a == 2 && b == 3) continue;
      circuits.push_back(pairs[a] | pairs[b]);
    }
  }
  std::vector<Subset> bases;
  for_each_subset_of_size(Subset::full(8), 4, [&](Subset s) {
    for (Subset c : circuits) {
      if (s == c) return;
    }
    bases.push_back(s);
  });
  return Matroid::from_bases(8, std::move(bases));
}

Matroid u11_plus_u23() {
  return Matroid::direct_sum(Matroid::uniform(1, 1), Matroid::uniform(2, 3));
}

Matroid u22_plus_u23() {
  return Matroid::direct_sum(Matroid::uniform(2, 2), Matroid::uniform(2, 3));
}

std::vector<CatalogEntry> uniform_catalog(int max_n) {
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int r = 1; r <= n; ++r) {
      out.push_back({"U_{" + std::to_string(r) + "," + std::to_string(n) + "}",
                     Matroid::uniform(r, n)});
    }
  }
  return out;
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out = uniform_catalog(7);
  out.push_back({"M(K_4)", complete_graph_k4()});
  out.push_back({"U_{1,1}+U_{2,3}", u11_plus_u23()});
  out.push_back({"U_{2,2}+U_{2,3}", u22_plus_u23()});
  out.push_back({"Fano", fano()});
  out.push_back({"Vamos", vamos()});
  return out;
}

}  // namespace matvol
