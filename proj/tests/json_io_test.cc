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

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "matvol/catalog.h"
#include "matvol/json_io.h"

namespace matvol {
namespace {

TEST(MatroidSpecTest, AllTypes) {
  EXPECT_EQ(matroid_from_json(Json::parse(R"({"type":"uniform","r":3,"n":4})")),
            Matroid::uniform(3, 4));
  EXPECT_EQ(matroid_from_json(Json::parse(
                R"({"type":"graphic","vertices":4,
                    "edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})")),
            complete_graph_k4());
  const Matroid u12 = matroid_from_json(
      Json::parse(R"({"type":"bases","n":2,"bases":[[0],[1]]})"));
  EXPECT_EQ(u12, Matroid::uniform(1, 2));
  EXPECT_EQ(matroid_from_json(Json::parse(
                R"({"type":"direct_sum","parts":[
                      {"type":"uniform","r":2,"n":2},
                      {"type":"uniform","r":2,"n":3}]})")),
            u22_plus_u23());
}

TEST(MatroidSpecTest, Errors) {
  const char* bad[] = {
      R"([1,2])",
      R"({"r":3,"n":4})",
      R"({"type":"torus"})",
      R"({"type":"uniform","r":"3","n":4})",
      R"({"type":"uniform","r":5,"n":4})",
      R"({"type":"bases","n":3,"bases":[[0,3]]})",
      R"({"type":"bases","n":3,"bases":[[0,0]]})",
      R"({"type":"bases","n":4,"bases":[[0,1],[2,3]]})",
      R"({"type":"direct_sum","parts":[]})",
      R"({"type":"graphic","vertices":3,"edges":[[0,1,2]]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(matroid_from_json(Json::parse(text)), std::invalid_argument)
        << text;
  }
}

TEST(RationalJsonTest, Forms) {
  EXPECT_EQ(rational_from_json(Json(7)), 7);
  EXPECT_EQ(rational_from_json(Json("-6/4")), ratio(-3, 2));
  EXPECT_THROW(rational_from_json(Json(1.5)), std::invalid_argument);
  EXPECT_THROW(rational_from_json(Json("1/0")), std::invalid_argument);
}

TEST(PolynomialJsonTest, RoundTrip) {
  const SparseChainPolynomial vp = volume_polynomial(u11_plus_u23());
  const Json encoded = polynomial_to_json(vp);
  EXPECT_EQ(encoded.size(), vp.size());
  EXPECT_EQ(polynomial_from_json(encoded, 4), vp);
  EXPECT_EQ(encoded.dump(), polynomial_to_json(volume_polynomial(u11_plus_u23())).dump());
  EXPECT_THROW(polynomial_from_json(encoded, 3), std::invalid_argument);
}

TEST(SetFunctionJsonTest, KeysAreOneBased) {
  const SetFunction z = set_function_from_json(Json::parse(
      R"({"n":3,"z":{"[1]":"1","[2]":1,"[3]":"1/2","[1,2]":"3/2","[]":0}})"));
  EXPECT_EQ(z[Subset::singleton(0)], 1);
  EXPECT_EQ(z[Subset::singleton(2)], ratio(1, 2));
  EXPECT_EQ(z[Subset(0b011)], ratio(3, 2));
  EXPECT_EQ(z[Subset(0b110)], 0);
  EXPECT_EQ(set_function_from_json(set_function_to_json(z)), z);
  EXPECT_EQ(set_function_to_json(z)["z"].begin().key(), "[]");
}

TEST(SetFunctionJsonTest, PresetAndOverrides) {
  EXPECT_EQ(set_function_from_json(
                Json::parse(R"({"n":4,"preset":"permutohedron"})")),
            permutohedron(4));
  const SetFunction z = set_function_from_json(
      Json::parse(R"({"n":3,"preset":"permutohedron","z":{"[1,2,3]":"2"}})"));
  EXPECT_EQ(z[Subset(0b111)], 2);
  EXPECT_EQ(z[Subset(0b001)], 1);
}

TEST(SetFunctionJsonTest, Errors) {
  const char* bad[] = {
      R"({"z":{}})",
      R"({"n":0})",
      R"({"n":17})",
      R"({"n":3,"z":{"[0]":"1"}})",
      R"({"n":3,"z":{"[4]":"1"}})",
      R"({"n":3,"z":{"1":"1"}})",
      R"({"n":3,"z":{"[1":"1"}})",
      R"({"n":3,"z":{"[1]":"x"}})",
      R"({"n":3,"preset":"cube"})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(set_function_from_json(Json::parse(text)),
                 std::invalid_argument)
        << text;
  }
}

TEST(SubdivisionJsonTest, Parses) {
  const Subdivision sub = subdivision_from_json(Json::parse(R"({
      "parent":{"type":"uniform","r":2,"n":4},
      "cells":[{"type":"bases","n":4,"bases":[[0,1],[0,2],[0,3],[1,2],[1,3]]},
               {"type":"bases","n":4,"bases":[[0,2],[0,3],[1,2],[1,3],[2,3]]}],
      "interior_faces":[{"matroid":{"type":"bases","n":4,
                                    "bases":[[0,2],[0,3],[1,2],[1,3]]},
                         "dim":2}]})"));
  EXPECT_EQ(sub.parent, Matroid::uniform(2, 4));
  ASSERT_EQ(sub.cells.size(), 2u);
  ASSERT_EQ(sub.interior_faces.size(), 1u);
  EXPECT_EQ(sub.interior_faces[0].dim, 2);
  EXPECT_THROW(subdivision_from_json(Json::parse(R"({"parent":{"type":"uniform","r":1,"n":1}})")),
               std::invalid_argument);
}

TEST(LoadJsonArgumentTest, InlineAndFile) {
  EXPECT_EQ(load_json_argument("  {\"a\":1}")["a"], 1);
  EXPECT_TRUE(load_json_argument("[1,2]").is_array());
  const std::string path = ::testing::TempDir() + "matvol_json_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"type":"uniform","r":2,"n":3})";
  }
  EXPECT_EQ(matroid_from_json(load_json_argument(path)),
            Matroid::uniform(2, 3));
  std::remove(path.c_str());
  EXPECT_THROW(load_json_argument(path), std::invalid_argument);
  EXPECT_THROW(load_json_argument("{not json"), std::invalid_argument);
}

}  // namespace
}  // namespace matvol
