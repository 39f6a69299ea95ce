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

#include "matvol/json_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matvol {
namespace {

const Json& require(const Json& object, const char* key) {
  if (!object.is_object() || !object.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return object.at(key);
}

int require_int(const Json& object, const char* key) {
  const Json& value = require(object, key);
  if (!value.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + key +
                                "\" must be an integer");
  }
  return value.get<int>();
}

std::vector<int> int_array(const Json& value, const std::string& what) {
  if (!value.is_array()) {
    throw std::invalid_argument(what + " must be an array of integers");
  }
  std::vector<int> out;
  for (const Json& item : value) {
    if (!item.is_number_integer()) {
      throw std::invalid_argument(what + " must be an array of integers");
    }
    out.push_back(item.get<int>());
  }
  return out;
}

}  // namespace

Json subset_to_json(Subset s) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(e);
  return out;
}

Subset subset_from_json(const Json& value, int n) {
  Subset s;
  for (int e : int_array(value, "subset")) {
    if (e < 0 || e >= n) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside the ground set 0.." +
                                  std::to_string(n - 1));
    }
    if (s.contains(e)) {
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " repeated in a subset");
    }
    s = s.with(e);
  }
  return s;
}

Matroid matroid_from_json(const Json& spec) {
  if (!spec.is_object()) {
    throw std::invalid_argument("matroid spec must be a JSON object");
  }
  const Json& type_field = require(spec, "type");
  if (!type_field.is_string()) {
    throw std::invalid_argument("matroid \"type\" must be a string");
  }
  const std::string type = type_field.get<std::string>();
  if (type == "uniform") {
    return Matroid::uniform(require_int(spec, "r"), require_int(spec, "n"));
  }
  if (type == "graphic") {
    const int vertices = require_int(spec, "vertices");
    const Json& edge_list = require(spec, "edges");
    if (!edge_list.is_array()) {
      throw std::invalid_argument("\"edges\" must be an array");
    }
    std::vector<std::pair<int, int>> edges;
    for (const Json& edge : edge_list) {
      std::vector<int> ends = int_array(edge, "edge");
      if (ends.size() != 2) {
        throw std::invalid_argument("every edge needs two endpoints");
      }
      edges.emplace_back(ends[0], ends[1]);
    }
    return Matroid::graphic(vertices, edges);
  }
  if (type == "bases") {
    const int n = require_int(spec, "n");
    if (n < 1 || n > kMaxGroundSize) {
      throw std::invalid_argument("ground set size out of range");
    }
    const Json& list = require(spec, "bases");
    if (!list.is_array()) {
      throw std::invalid_argument("\"bases\" must be an array");
    }
    std::vector<Subset> bases;
    for (const Json& b : list) bases.push_back(subset_from_json(b, n));
    return Matroid::from_bases(n, std::move(bases));
  }
  if (type == "direct_sum") {
    const Json& parts = require(spec, "parts");
    if (!parts.is_array() || parts.empty()) {
      throw std::invalid_argument("\"parts\" must be a nonempty array");
    }
    Matroid sum = matroid_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      sum = Matroid::direct_sum(sum, matroid_from_json(parts[i]));
    }
    return sum;
  }
  throw std::invalid_argument("unknown matroid type \"" + type + "\"");
}

Rational rational_from_json(const Json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<long>());
  throw std::invalid_argument(
      "rationals must be integers or \"p/q\" strings, got " + value.dump());
}

Json polynomial_to_json(const SparseChainPolynomial& polynomial) {
  Json out = Json::array();
  for (const auto& [mono, coeff] : polynomial.terms()) {
    Json chain = Json::array();
    for (Subset f : mono.flats()) chain.push_back(subset_to_json(f));
    out.push_back(Json{{"chain", chain},
                       {"exps", mono.exps()},
                       {"coeff", to_string(coeff)}});
  }
  return out;
}

SparseChainPolynomial polynomial_from_json(const Json& value, int n) {
  if (!value.is_array()) {
    throw std::invalid_argument("polynomial must be an array of terms");
  }
  SparseChainPolynomial out;
  for (const Json& term : value) {
    const Json& chain = require(term, "chain");
    if (!chain.is_array()) {
      throw std::invalid_argument("\"chain\" must be an array of subsets");
    }
    std::vector<Subset> flats;
    for (const Json& f : chain) flats.push_back(subset_from_json(f, n));
    out.add_term(ChainMonomial(flats, int_array(require(term, "exps"), "exps")),
                 rational_from_json(require(term, "coeff")));
  }
  return out;
}

SetFunction set_function_from_json(const Json& value) {
  const int n = require_int(value, "n");
  if (n < 1 || n > kMaxSetFunctionSize) {
    throw std::invalid_argument("\"n\" must be in 1.." +
                                std::to_string(kMaxSetFunctionSize));
  }
  SetFunction z(n);
  if (value.contains("preset")) {
    const Json& preset = value.at("preset");
    if (!preset.is_string() || preset.get<std::string>() != "permutohedron") {
      throw std::invalid_argument("unknown preset " + preset.dump());
    }
    z = permutohedron(n);
  }
  if (value.contains("z")) {
    const Json& entries = value.at("z");
    if (!entries.is_object()) {
      throw std::invalid_argument("\"z\" must be an object");
    }
    for (const auto& [key, entry] : entries.items()) {
      Json elements;
      try {
        elements = Json::parse(key);
      } catch (const Json::exception&) {
        throw std::invalid_argument("bad subset key \"" + key + "\"");
      }
      Subset s;
      for (int e : int_array(elements, "subset key \"" + key + "\"")) {
        if (e < 1 || e > n) {
          throw std::invalid_argument("subset key \"" + key +
                                      "\" uses elements outside 1.." +
                                      std::to_string(n));
        }
        s = s.with(e - 1);
      }
      z[s] = rational_from_json(entry);
    }
  }
  return z;
}

Json set_function_to_json(const SetFunction& z) {
  Json entries = Json::object();
  std::vector<Subset> order;
  for (Subset::Mask m = 0; m <= z.ground().bits(); ++m) order.push_back(Subset(m));
  std::sort(order.begin(), order.end(), canonical_less);
  for (Subset s : order) {
    std::string key = "[";
    for (int e : s.elements()) {
      if (key.size() > 1) key += ',';
      key += std::to_string(e + 1);
    }
    key += ']';
    entries[key] = to_string(z[s]);
  }
  return Json{{"n", z.n()}, {"z", entries}};
}

Subdivision subdivision_from_json(const Json& value) {
  Subdivision sub{matroid_from_json(require(value, "parent")), {}, {}};
  const Json& cells = require(value, "cells");
  if (!cells.is_array()) {
    throw std::invalid_argument("\"cells\" must be an array");
  }
  for (const Json& c : cells) sub.cells.push_back(matroid_from_json(c));
  if (value.contains("interior_faces")) {
    const Json& faces = value.at("interior_faces");
    if (!faces.is_array()) {
      throw std::invalid_argument("\"interior_faces\" must be an array");
    }
    for (const Json& f : faces) {
      InteriorFace face{matroid_from_json(require(f, "matroid")), std::nullopt};
      if (f.contains("dim")) face.dim = require_int(f, "dim");
      sub.interior_faces.push_back(std::move(face));
    }
  }
  return sub;
}

Json load_json_argument(const std::string& text) {
  const std::size_t start = text.find_first_not_of(" \t\r\n");
  std::string body;
  if (start != std::string::npos && (text[start] == '{' || text[start] == '[')) {
    body = text;
  } else {
    std::ifstream in(text);
    if (!in) throw std::invalid_argument("cannot read file '" + text + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    body = buffer.str();
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace matvol
