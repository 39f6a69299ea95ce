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

#ifndef MATVOL_SELFTEST_H_
#define MATVOL_SELFTEST_H_

#include <string>
#include <vector>

namespace matvol {

struct SelftestOptions {
  // Runs the catalog-driven checks over no matroids at all.
  bool empty_catalog = false;
  // Corrupts binomial(2, 1) for the duration of the run.
  bool inject_binomial_fault = false;
  int jobs = 1;
};

struct SelftestRow {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestRow> rows;
  std::vector<std::string> warnings;

  bool passed() const;
};

SelftestReport run_selftest(const SelftestOptions& options);

}  // namespace matvol

#endif  // MATVOL_SELFTEST_H_
