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

#ifndef MATVOL_TESTS_TEST_SUPPORT_H_
#define MATVOL_TESTS_TEST_SUPPORT_H_

#include <random>
#include <string>

#include "matvol/chow.h"
#include "matvol/genperm.h"

namespace matvol::test {

// Reads a fixture from the test data directory.
std::string read_data_file(const std::string& name);

// Parses a TeX polynomial such as "-2{t}_{1}^{2}+2{t}_{3} {t}_{{2,3}}".
// Variable subscripts list the elements of the subset; they may be wrapped
// in an extra pair of braces.
SparseChainPolynomial parse_tex_polynomial(const std::string& text);

// A random submodular function with z_empty = 0: a nonnegative combination
// of truncated cardinality functions min(|I & A|, k), coverage functions and
// a random modular part.
SetFunction random_submodular(int n, std::mt19937& rng);

}  // namespace matvol::test

#endif  // MATVOL_TESTS_TEST_SUPPORT_H_
