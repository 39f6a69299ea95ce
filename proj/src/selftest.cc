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

#include "matvol/selftest.h"

#include <functional>

#include "matvol/catalog.h"
#include "matvol/charpoly.h"
#include "matvol/chow.h"
#include "matvol/genperm.h"
#include "matvol/toppling.h"

namespace matvol {
namespace {

class FaultGuard {
 public:
  explicit FaultGuard(bool enable) : enabled_(enable) {
    if (enabled_) testing::set_binomial_fault(true);
  }
  ~FaultGuard() {
    if (enabled_) testing::set_binomial_fault(false);
  }

 private:
  bool enabled_;
};

std::vector<CatalogEntry> quick_catalog() {
  std::vector<CatalogEntry> out = uniform_catalog(5);
  out.push_back({"M(K_4)", complete_graph_k4()});
  out.push_back({"U_{1,1}+U_{2,3}", u11_plus_u23()});
  out.push_back({"U_{2,2}+U_{2,3}", u22_plus_u23()});
  out.push_back({"Fano", fano()});
  return out;
}

// Runs `check` on every entry; the first nonempty message fails the row.
SelftestRow over_catalog(
    const std::string& name, const std::vector<CatalogEntry>& catalog,
    const std::function<std::string(const CatalogEntry&)>& check) {
  SelftestRow row{name, true, std::to_string(catalog.size()) + " matroids"};
  for (const CatalogEntry& entry : catalog) {
    std::string problem;
    try {
      problem = check(entry);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (!problem.empty()) {
      row.passed = false;
      row.detail = entry.name + ": " + problem;
      return row;
    }
  }
  return row;
}

SelftestRow single(const std::string& name,
                   const std::function<std::string()> check) {
  SelftestRow row{name, true, "ok"};
  try {
    std::string problem = check();
    if (!problem.empty()) {
      row.passed = false;
      row.detail = problem;
    }
  } catch (const std::exception& e) {
    row.passed = false;
    row.detail = std::string("exception: ") + e.what();
  }
  return row;
}

std::string expect(const std::string& what, const Rational& got,
                   const Rational& want) {
  if (got == want) return {};
  return what + " = " + to_string(got) + ", expected " + to_string(want);
}

}  // namespace

bool SelftestReport::passed() const {
  for (const SelftestRow& row : rows) {
    if (!row.passed) return false;
  }
  return true;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  FaultGuard fault(options.inject_binomial_fault);
  SelftestReport report;
  std::vector<CatalogEntry> catalog;
  if (options.empty_catalog) {
    report.warnings.push_back(
        "catalog is empty; catalog checks pass vacuously");
  } else {
    catalog = quick_catalog();
  }

  report.rows.push_back(over_catalog(
      "charpoly vanishes at 1", catalog, [](const CatalogEntry& e) {
        const Integer v = char_poly(e.matroid).evaluate(1);
        return v == 0 ? std::string() : "chi(1) = " + v.get_str();
      }));

  report.rows.push_back(over_catalog(
      "Weisner identity", catalog, [](const CatalogEntry& e) {
        return check_weisner(FlatLattice(e.matroid));
      }));

  report.rows.push_back(over_catalog(
      "maximal chain weights sum to 1", catalog, [](const CatalogEntry& e) {
        return expect("weight sum",
                      maximal_chain_weight_sum(FlatLattice(e.matroid)), 1);
      }));

  report.rows.push_back(over_catalog(
      "gamma agrees with signed mu", catalog, [](const CatalogEntry& e) {
        const FlatLattice lattice(e.matroid);
        const MuVector mu = mu_vector(e.matroid);
        for (int i = 0; i < e.matroid.rank(); ++i) {
          const Rational want = (i % 2 == 0 ? 1 : -1) * Rational(mu.at(i));
          const std::string tag = "gamma(" + std::to_string(i) + ")";
          std::string problem = expect(tag, gamma(lattice, i), want);
          if (problem.empty()) {
            problem = expect(tag + " by recursion",
                             gamma_recursive(e.matroid, i), want);
          }
          if (!problem.empty()) return problem;
        }
        return std::string();
      }));

  report.rows.push_back(over_catalog(
      "closed form matches toppling", catalog, [](const CatalogEntry& e) {
        const ChowRing ring(e.matroid);
        std::string problem;
        for_each_chain_monomial(ring, [&](const ChainMonomial& mono) {
          if (!problem.empty()) return;
          problem = expect("deg " + mono.to_string('x'),
                           Rational(ring.intersection_number(mono)),
                           degree_via_toppling(ring, mono));
        });
        return problem;
      }));

  report.rows.push_back(over_catalog(
      "uniform shifted rank volume", catalog, [&](const CatalogEntry& e) {
        const Matroid& m = e.matroid;
        if (m != Matroid::uniform(m.rank(), m.size())) return std::string();
        Integer want = 1;
        for (int i = 1; i < m.rank(); ++i) want *= m.size();
        return expect("shRVol", shifted_rank_volume(m, options.jobs),
                      Rational(want));
      }));

  report.rows.push_back(single("worked examples", [&] {
    const ChowRing u34(Matroid::uniform(3, 4));
    std::string problem = expect(
        "deg x_{0}^2 on U_{3,4}",
        Rational(u34.intersection_number(
            ChainMonomial({Subset::singleton(0)}, {2}))),
        -2);
    if (problem.empty()) {
      problem = expect("shRVol(U_{3,4})", u34.shifted_rank_volume(), 16);
    }
    if (problem.empty()) {
      problem = expect("shRVol(U_{1,1}+U_{2,3})",
                       shifted_rank_volume(u11_plus_u23()), 15);
    }
    if (problem.empty()) {
      problem = expect("shRVol(U_{2,2}+U_{2,3})",
                       shifted_rank_volume(u22_plus_u23()), 112);
    }
    return problem;
  }));

  report.rows.push_back(single("permutohedron volumes three ways", [&] {
    for (int n = 3; n <= 5; ++n) {
      const SetFunction z = permutohedron(n);
      Integer want = 1;
      for (int i = 2; i < n; ++i) want *= n;
      const std::string tag = "n=" + std::to_string(n);
      std::string problem = expect(tag + " chain formula",
                                   gp_volume_chain_formula(z, options.jobs),
                                   Rational(want));
      if (problem.empty()) {
        problem = expect(tag + " polytope", gp_volume_polytope(z),
                         Rational(want));
      }
      if (problem.empty()) {
        const auto y = minkowski_weights(z);
        problem = y ? expect(tag + " Postnikov", gp_volume_postnikov(*y),
                             Rational(want))
                    : tag + " has negative Minkowski weights";
      }
      if (!problem.empty()) return problem;
    }
    return std::string();
  }));

  return report;
}

}  // namespace matvol
