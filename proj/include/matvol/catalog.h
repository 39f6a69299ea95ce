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

#ifndef MATVOL_CATALOG_H_
#define MATVOL_CATALOG_H_

#include <string>
#include <vector>

#include "matvol/matroid.h"

namespace matvol {

struct CatalogEntry {
  std::string name;
  Matroid matroid;
};

// Cycle matroid of K_4 with edges 01, 02, 03, 12, 13, 23.
Matroid complete_graph_k4();
// Fano plane, lines {i, i+1, i+3} mod 7.
Matroid fano();
// Vamos matroid on pairs {0,1}, {2,3}, {4,5}, {6,7}: every 4-set is a basis
// except the unions of two pairs other than {4,5,6,7}.
Matroid vamos();

Matroid u11_plus_u23();
Matroid u22_plus_u23();

// U_{r,n} for 1 <= r <= n <= max_n, in order of n then r.
std::vector<CatalogEntry> uniform_catalog(int max_n);

// Uniform matroids up to 7 elements, M(K_4), the two direct sums above,
// the Fano and the Vamos matroids.
std::vector<CatalogEntry> full_catalog();

}  // namespace matvol

#endif  // MATVOL_CATALOG_H_
