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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Result run(const std::string& args) {
  const std::string command = std::string(MATVOL_CLI_PATH) + " " + args + " 2>&1";
  Result result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer;
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

const char kU34[] = R"('{"type":"uniform","r":3,"n":4}')";
const char kU22U23[] =
    R"('{"type":"direct_sum","parts":[{"type":"uniform","r":2,"n":2},{"type":"uniform","r":2,"n":3}]}')";

TEST(CliTest, Intersect) {
  Result r = run(std::string("intersect --matroid ") + kU34 +
                 " --chain '[[0]]' --exps '[2]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "-2\n");

  r = run(std::string("intersect --matroid ") + kU22U23 +
          " --chain '[[2,3,4]]' --exps '[3]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "2\n");

  r = run(std::string("intersect --matroid ") + kU34 +
          " --chain '[[0],[1,2]]' --exps '[1,1]'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("0\n"), std::string::npos);
}

TEST(CliTest, ShrvolAndVolumePoly) {
  Result r = run(std::string("shrvol --matroid ") + kU34);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "16\n");
  r = run(std::string("--jobs 3 shrvol --matroid ") + kU22U23);
  EXPECT_EQ(r.out, "112\n");

  r = run(std::string("volume-poly --matroid '{\"type\":\"uniform\",\"r\":2,\"n\":3}'"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "t_{0} + t_{1} + t_{2}\n");
}

TEST(CliTest, JsonOutputIsDeterministic) {
  const std::string args =
      std::string("--format json volume-poly --matroid ") + kU22U23;
  const Result first = run(args);
  const Result second = run("--jobs 4 " + args);
  EXPECT_EQ(first.status, 0);
  EXPECT_EQ(first.out, second.out);
  EXPECT_NE(first.out.find("\"coeff\""), std::string::npos);
}

TEST(CliTest, FlatsAndCharpoly) {
  Result r = run(std::string("flats --matroid ") + kU34);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("rank 1: {0} {1} {2} {3}"), std::string::npos);
  r = run(std::string("--format json charpoly --matroid ") + kU34);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"mu\""), std::string::npos);
}

TEST(CliTest, GpVolume) {
  Result r = run("gp-volume --preset permutohedron --n 4");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "16\n");
  r = run("gp-volume --preset permutohedron --n 4 --method all");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "chain: 16\npostnikov: 16\npolytope: 16\n");
  r = run(R"(gp-volume --method all --z '{"n":3,"z":{"[1]":"1","[2]":"1","[3]":"1","[1,2]":"1","[1,3]":"1","[2,3]":"1"}}')");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "chain: 3\npostnikov: 3\npolytope: 3\n");
}

TEST(CliTest, ValuationCheck) {
  const std::string split = R"('{
    "parent":{"type":"uniform","r":2,"n":4},
    "cells":[{"type":"bases","n":4,"bases":[[0,1],[0,2],[0,3],[1,2],[1,3]]},
             {"type":"bases","n":4,"bases":[[0,2],[0,3],[1,2],[1,3],[2,3]]}],
    "interior_faces":[{"matroid":{"type":"bases","n":4,
                                  "bases":[[0,2],[0,3],[1,2],[1,3]]},"dim":2}]}')";
  Result r = run("valuation-check --subdivision " + split);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("identity holds"), std::string::npos);

  const std::string no_face = R"('{
    "parent":{"type":"uniform","r":2,"n":4},
    "cells":[{"type":"bases","n":4,"bases":[[0,1],[0,2],[0,3],[1,2],[1,3]]},
             {"type":"bases","n":4,"bases":[[0,2],[0,3],[1,2],[1,3],[2,3]]}]}')";
  r = run("valuation-check --subdivision " + no_face);
  EXPECT_EQ(r.status, 3);
}

TEST(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run("shrvol --matroid '{\"type\":\"uniform\",\"r\":5,\"n\":4}'").status, 2);
  EXPECT_EQ(run("shrvol --matroid '{bad'").status, 2);
  EXPECT_EQ(run("shrvol --matroid /nonexistent/file.json").status, 2);
  EXPECT_EQ(run("shrvol").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run(std::string("intersect --matroid ") + kU34 +
                " --chain '[[0]]' --exps '[1]'").status,
            2);
  EXPECT_EQ(run(R"(gp-volume --z '{"n":2,"z":{"[1]":"-1","[2]":"-1"}}')").status, 2);
  EXPECT_EQ(run("gp-volume --preset permutohedron --n 6 --method polytope").status, 2);
}

TEST(CliTest, Selftest) {
  Result r = run("selftest");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);

  r = run("selftest --inject-binomial-fault");
  EXPECT_EQ(r.status, 3);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);

  r = run("selftest --empty-catalog");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("warning"), std::string::npos);
}

}  // namespace
