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

#ifndef MATVOL_JSON_IO_H_
#define MATVOL_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "matvol/chow.h"
#include "matvol/genperm.h"
#include "matvol/matroid.h"
#include "matvol/valuation.h"

namespace matvol {

using Json = nlohmann::ordered_json;

// All readers throw std::invalid_argument on malformed input.

// {"type":"uniform","r":3,"n":4}
// {"type":"graphic","vertices":4,"edges":[[0,1],...]}
// {"type":"bases","n":4,"bases":[[0,1],...]}
// {"type":"direct_sum","parts":[<spec>,...]}
Matroid matroid_from_json(const Json& spec);

// Sorted element arrays; subset_from_json rejects elements outside 0..n-1.
Json subset_to_json(Subset s);
Subset subset_from_json(const Json& value, int n);

Rational rational_from_json(const Json& value);

// [{"chain":[[0],[0,1]],"exps":[1,1],"coeff":"2"}, ...] in term order.
Json polynomial_to_json(const SparseChainPolynomial& polynomial);
SparseChainPolynomial polynomial_from_json(const Json& value, int n);

// {"n":3,"z":{"[1]":"1","[1,2]":"3/2",...},"preset":"permutohedron"}
// Keys list elements 1..n; "[]" names the empty set. Entries missing from
// "z" come from the preset, or are 0 without one.
SetFunction set_function_from_json(const Json& value);
Json set_function_to_json(const SetFunction& z);

// {"parent":<spec>,"cells":[<spec>...],
//  "interior_faces":[{"matroid":<spec>,"dim":2}...]}
Subdivision subdivision_from_json(const Json& value);

// Parses `text` as JSON if it starts with '{' or '[' (after whitespace),
// otherwise reads the file it names.
Json load_json_argument(const std::string& text);

}  // namespace matvol

#endif  // MATVOL_JSON_IO_H_
