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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matvol/catalog.h"
#include "matvol/charpoly.h"
#include "matvol/chow.h"
#include "matvol/genperm.h"
#include "matvol/toppling.h"
#include "matvol/valuation.h"
#include "test_support.h"

namespace matvol {
namespace {

constexpr double kGoldenLimitSeconds = 10;
constexpr double kShrvolLimitSeconds = 60;
constexpr double kOracleLimitSeconds = 5 * 60;
constexpr double kGpLimitSeconds = 10 * 60;
// Exact criteria have no time limit of their own.
constexpr double kNoLimit = 0;

constexpr int kRandomGpCases = 240;

// Collects failures; the first few are kept for the report line.
class Failures {
 public:
  void add(const std::string& message) {
    if (count_++ < 3) messages_.push_back(message);
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", want " << want;
    add(out.str());
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    std::string out = std::to_string(count_) + " failure(s)";
    for (const auto& m : messages_) out += "; " + m;
    return out;
  }

 private:
  int count_ = 0;
  std::vector<std::string> messages_;
};

Subset S(std::initializer_list<int> elements) {
  std::vector<int> v(elements);
  return Subset::from_elements(v);
}

Integer power(long base, int exponent) {
  Integer out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string criterion_golden(Failures& f) {
  struct Case {
    const char* file;
    Matroid matroid;
    std::size_t terms;
  };
  const Case cases[] = {
      {"u34_vp.tex", Matroid::uniform(3, 4), 22},
      {"u11_u23_vp.tex", u11_plus_u23(), 17},
      {"u22_u23_vp.tex", u22_plus_u23(), 122},
  };
  std::string detail;
  for (const Case& c : cases) {
    const SparseChainPolynomial want =
        test::parse_tex_polynomial(test::read_data_file(c.file));
    const SparseChainPolynomial got = volume_polynomial(c.matroid);
    f.expect_eq(want.size(), c.terms, std::string(c.file) + " term count");
    if (got != want) {
      f.add(std::string(c.file) + ": difference " + (got - want).to_string());
    }
    detail += std::string(detail.empty() ? "" : ", ") + c.file + " " +
              std::to_string(got.size()) + " terms";
  }

  const SparseChainPolynomial vp = volume_polynomial(u22_plus_u23());
  const std::pair<ChainMonomial, int> anchors[] = {
      {ChainMonomial({S({4})}, {3}), 1},
      {ChainMonomial({S({0})}, {3}), 2},
      {ChainMonomial({S({4}), S({1, 4})}, {1, 2}), -3},
      {ChainMonomial({S({1, 4})}, {3}), 2},
      {ChainMonomial({S({1}), S({0, 1})}, {1, 2}), -6},
      {ChainMonomial({S({4}), S({1, 4}), S({0, 1, 4})}, {1, 1, 1}), 6},
  };
  for (const auto& [mono, coeff] : anchors) {
    f.expect_eq(vp.coefficient(mono), Rational(coeff),
                "anchor " + mono.to_string());
  }
  return detail;
}

std::string criterion_shrvol(Failures& f) {
  f.expect_eq(shifted_rank_volume(Matroid::uniform(3, 4)), Rational(16),
              "shRVol(U_{3,4})");
  f.expect_eq(shifted_rank_volume(u11_plus_u23()), Rational(15),
              "shRVol(U_{1,1}+U_{2,3})");
  f.expect_eq(shifted_rank_volume(u22_plus_u23()), Rational(112),
              "shRVol(U_{2,2}+U_{2,3})");
  int checked = 3;
  for (const CatalogEntry& e : uniform_catalog(7)) {
    const int r = e.matroid.rank();
    const int n = e.matroid.size();
    f.expect_eq(shifted_rank_volume(e.matroid, 4), Rational(power(n, r - 1)),
                "shRVol(" + e.name + ")");
    ++checked;
  }
  return std::to_string(checked) + " matroids";
}

std::string criterion_oracles(Failures& f) {
  std::vector<CatalogEntry> cases = uniform_catalog(6);
  cases.push_back({"M(K_4)", complete_graph_k4()});
  cases.push_back({"U_{1,1}+U_{2,3}", u11_plus_u23()});
  cases.push_back({"U_{2,2}+U_{2,3}", u22_plus_u23()});
  cases.push_back({"Fano", fano()});
  long monomials = 0;
  for (const CatalogEntry& e : cases) {
    const ChowRing ring(e.matroid);
    for_each_chain_monomial(ring, [&](const ChainMonomial& m) {
      ++monomials;
      f.expect_eq(degree_via_toppling(ring, m),
                  Rational(ring.intersection_number(m)),
                  e.name + " " + m.to_string('x'));
    });
  }
  return std::to_string(cases.size()) + " matroids, " +
         std::to_string(monomials) + " chain monomials";
}

std::string criterion_charpoly(Failures& f) {
  const std::vector<CatalogEntry> catalog = full_catalog();
  for (const CatalogEntry& e : catalog) {
    const FlatLattice lattice(e.matroid);
    f.expect_eq(char_poly(lattice).evaluate(1), Integer(0),
                "chi(1) for " + e.name);
    const std::string weisner = check_weisner(lattice);
    if (!weisner.empty()) f.add(e.name + ": " + weisner);
    f.expect_eq(maximal_chain_weight_sum(lattice), Rational(1),
                "chain weight sum for " + e.name);
    const MuVector mu = mu_vector(e.matroid);
    for (int i = 0; i < e.matroid.rank(); ++i) {
      const Rational g = gamma(lattice, i);
      f.expect_eq(abs(g), Rational(mu.at(i)), e.name + " |gamma(" +
                                                  std::to_string(i) + ")|");
      if (g != 0 && (g > 0) != (i % 2 == 0)) {
        f.add(e.name + " gamma(" + std::to_string(i) + ") has the wrong sign");
      }
      if (mu.at(i) * mu.at(i) < mu.at(i - 1) * mu.at(i + 1)) {
        f.add(e.name + " mu is not log-concave at " + std::to_string(i));
      }
    }
  }
  return std::to_string(catalog.size()) + " matroids";
}

std::string criterion_gp(Failures& f) {
  std::mt19937 rng(20261018);
  int postnikov = 0;
  for (int trial = 0; trial < kRandomGpCases; ++trial) {
    const int n = 3 + trial % 3;
    const SetFunction z = test::random_submodular(n, rng);
    if (!is_submodular(z)) {
      f.add("generator produced a non-submodular z");
      continue;
    }
    const Rational chain = gp_volume_chain_formula(normalize(z));
    f.expect_eq(chain, gp_volume_polytope(z),
                "trial " + std::to_string(trial) + " polytope");
    if (auto y = minkowski_weights(z)) {
      ++postnikov;
      f.expect_eq(chain, gp_volume_postnikov(*y),
                  "trial " + std::to_string(trial) + " Postnikov");
    }
  }
  for (int n = 3; n <= 6; ++n) {
    f.expect_eq(gp_volume_chain_formula(permutohedron(n)),
                Rational(power(n, n - 2)),
                "permutohedron n=" + std::to_string(n));
  }
  return std::to_string(kRandomGpCases) + " random z, " +
         std::to_string(postnikov) + " with Postnikov, permutohedra n=3..6";
}

std::string criterion_valuation(Failures& f) {
  const std::vector<CatalogEntry> catalog = full_catalog();
  for (const CatalogEntry& e : catalog) {
    const ValuationReport report =
        check_valuation(Subdivision{e.matroid, {e.matroid}, {}}, 4);
    if (!report.holds()) f.add("trivial subdivision of " + e.name);
  }
  auto pairs_except = [](Subset missing) {
    std::vector<Subset> bases;
    for_each_subset_of_size(Subset::full(4), 2, [&](Subset b) {
      if (b != missing) bases.push_back(b);
    });
    return Matroid::from_bases(4, bases);
  };
  const Matroid u12 = Matroid::uniform(1, 2);
  const Subdivision split{Matroid::uniform(2, 4),
                          {pairs_except(S({2, 3})), pairs_except(S({0, 1}))},
                          {{Matroid::direct_sum(u12, u12), 2}}};
  validate(split);
  const ValuationReport report = check_valuation(split);
  if (!report.vp_difference.is_zero()) {
    f.add("split VP difference " + report.vp_difference.to_string());
  }
  f.expect_eq(report.shrvol_difference, Rational(0), "split shRVol difference");
  return std::to_string(catalog.size()) + " trivial subdivisions + U_{2,4} split";
}

std::string criterion_minimizer(Failures& f) {
  int checked = 0;
  for (int r = 3; r <= 5; ++r) {
    for (int n = r; n <= 8; ++n) {
      const Matroid m = Matroid::direct_sum(Matroid::uniform(r - 2, r - 2),
                                            Matroid::uniform(2, n - r + 2));
      const Integer want =
          power(r, r - 2) * ((n - r + 1) * (r - 1) + 1);
      f.expect_eq(shifted_rank_volume(m, 4), Rational(want),
                  "r=" + std::to_string(r) + " n=" + std::to_string(n));
      ++checked;
    }
  }
  return std::to_string(checked) + " (r, n) pairs";
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<std::string(Failures&)> run;
};

}  // namespace
}  // namespace matvol

int main() {
  using namespace matvol;
  const Criterion criteria[] = {
      {1, "worked-example volume polynomials", kGoldenLimitSeconds,
       criterion_golden},
      {2, "shifted rank volumes", kShrvolLimitSeconds, criterion_shrvol},
      {3, "closed form = toppling degree", kOracleLimitSeconds,
       criterion_oracles},
      {4, "characteristic polynomial invariants", kNoLimit,
       criterion_charpoly},
      {5, "generalized permutohedron volumes", kGpLimitSeconds, criterion_gp},
      {6, "valuation identity", kNoLimit, criterion_valuation},
      {7, "conjectured minimizer values", kNoLimit, criterion_minimizer},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Failures failures;
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    try {
      detail = c.run(failures);
    } catch (const std::exception& e) {
      failures.add(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      failures.add("over the time limit");
    }
    const bool ok = failures.empty();
    if (!ok) ++failed;
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", seconds,
                    c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": "
              << c.title << " [" << (ok ? detail : failures.summary())
              << "] (" << timing << ")" << std::endl;
  }
  std::cout << (failed == 0 ? "all 7 criteria passed"
                            : std::to_string(failed) + " criteria failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
