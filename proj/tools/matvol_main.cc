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

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "matvol/charpoly.h"
#include "matvol/chow.h"
#include "matvol/genperm.h"
#include "matvol/json_io.h"
#include "matvol/selftest.h"
#include "matvol/valuation.h"

namespace {

using matvol::Json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Common {
  std::string format = "text";
  int jobs = 1;
};

// Internal failures that should exit with kExitInternal.
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join_elements(matvol::Subset s) { return s.to_string(); }

void print_json(const Json& value) { std::cout << value.dump(2) << '\n'; }

void run_flats(const Common& common, const std::string& matroid_arg) {
  const matvol::Matroid m =
      matvol::matroid_from_json(matvol::load_json_argument(matroid_arg));
  const matvol::FlatLattice lattice(m);
  if (common.format == "json") {
    Json ranks = Json::array();
    for (int k = 0; k <= lattice.rank(); ++k) {
      Json flats = Json::array();
      for (int f : lattice.flats_of_rank(k)) {
        flats.push_back(matvol::subset_to_json(lattice.flat(f)));
      }
      ranks.push_back(flats);
    }
    print_json(Json{{"n", m.size()},
                    {"rank", m.rank()},
                    {"count", lattice.size()},
                    {"flats_by_rank", ranks}});
    return;
  }
  for (int k = 0; k <= lattice.rank(); ++k) {
    std::cout << "rank " << k << ":";
    for (int f : lattice.flats_of_rank(k)) {
      std::cout << ' ' << join_elements(lattice.flat(f));
    }
    std::cout << '\n';
  }
}

void run_charpoly(const Common& common, const std::string& matroid_arg) {
  const matvol::Matroid m =
      matvol::matroid_from_json(matvol::load_json_argument(matroid_arg));
  const matvol::IntPolynomial chi = matvol::char_poly(m);
  const matvol::IntPolynomial reduced = chi.divide_by_linear(1);
  const matvol::MuVector mu = matvol::mu_vector_from_reduced(reduced);
  if (common.format == "json") {
    auto coeffs = [](const matvol::IntPolynomial& p) {
      Json out = Json::array();
      for (const auto& c : p.coefficients()) out.push_back(c.get_str());
      return out;
    };
    Json mu_json = Json::array();
    for (const auto& v : mu.values()) mu_json.push_back(v.get_str());
    print_json(Json{{"chi", coeffs(chi)},
                    {"reduced", coeffs(reduced)},
                    {"mu", mu_json}});
    return;
  }
  std::cout << "chi:     " << chi.to_string() << '\n';
  std::cout << "reduced: " << reduced.to_string() << '\n';
  std::cout << "mu:     ";
  for (const auto& v : mu.values()) std::cout << ' ' << v.get_str();
  std::cout << '\n';
}

void run_intersect(const Common& common, const std::string& matroid_arg,
                   const std::string& chain_arg, const std::string& exps_arg) {
  const matvol::Matroid m =
      matvol::matroid_from_json(matvol::load_json_argument(matroid_arg));
  Json chain_json;
  Json exps_json;
  try {
    chain_json = Json::parse(chain_arg);
    exps_json = Json::parse(exps_arg);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!chain_json.is_array() || !exps_json.is_array()) {
    throw std::invalid_argument("--chain and --exps must be JSON arrays");
  }
  std::vector<matvol::Subset> flats;
  for (const Json& f : chain_json) {
    flats.push_back(matvol::subset_from_json(f, m.size()));
  }
  std::vector<int> exps;
  for (const Json& e : exps_json) {
    if (!e.is_number_integer()) {
      throw std::invalid_argument("--exps must hold integers");
    }
    exps.push_back(e.get<int>());
  }
  const matvol::ChowRing ring(m);
  const matvol::ChainMonomial mono(flats, exps);
  bool is_chain = true;
  const matvol::Integer value = ring.intersection_number(mono, &is_chain);
  if (!is_chain) {
    std::cerr << "warning: the flats do not form a chain; the monomial is 0\n";
  }
  if (common.format == "json") {
    print_json(Json{{"monomial", mono.to_string('x')},
                    {"chain", is_chain},
                    {"degree", value.get_str()}});
  } else {
    std::cout << value.get_str() << '\n';
  }
}

void run_volume_poly(const Common& common, const std::string& matroid_arg) {
  const matvol::Matroid m =
      matvol::matroid_from_json(matvol::load_json_argument(matroid_arg));
  const matvol::SparseChainPolynomial vp =
      matvol::volume_polynomial(m, common.jobs);
  if (common.format == "json") {
    print_json(matvol::polynomial_to_json(vp));
  } else {
    std::cout << vp.to_string() << '\n';
  }
}

void run_shrvol(const Common& common, const std::string& matroid_arg) {
  const matvol::Matroid m =
      matvol::matroid_from_json(matvol::load_json_argument(matroid_arg));
  const matvol::Rational value = matvol::shifted_rank_volume(m, common.jobs);
  if (common.format == "json") {
    print_json(Json{{"shrvol", matvol::to_string(value)}});
  } else {
    std::cout << matvol::to_string(value) << '\n';
  }
}

void run_gp_volume(const Common& common, const std::string& preset, int n,
                   const std::string& z_arg, const std::string& method) {
  std::optional<matvol::SetFunction> z;
  if (!z_arg.empty()) {
    if (!preset.empty()) {
      throw std::invalid_argument("use either --preset or --z, not both");
    }
    z = matvol::set_function_from_json(matvol::load_json_argument(z_arg));
  } else if (preset == "permutohedron") {
    if (n < 1 || n > matvol::kMaxSetFunctionSize) {
      throw std::invalid_argument("--n must be in 1.." +
                                  std::to_string(matvol::kMaxSetFunctionSize));
    }
    z = matvol::permutohedron(n);
  } else if (!preset.empty()) {
    throw std::invalid_argument("unknown preset '" + preset + "'");
  } else {
    throw std::invalid_argument("gp-volume needs --preset or --z");
  }
  if ((*z)[matvol::Subset()] != 0) {
    throw std::invalid_argument("z of the empty set must be 0");
  }
  if (auto bad = matvol::submodularity_violation(*z)) {
    throw std::invalid_argument("z is not submodular: I=" +
                                bad->first.to_string() +
                                ", J=" + bad->second.to_string() +
                                " (0-based elements)");
  }
  const matvol::SetFunction normalized = matvol::normalize(*z);

  Json results = Json::object();
  auto want = [&](const char* name) {
    return method == name || method == "all";
  };
  if (want("chain")) {
    results["chain"] = matvol::to_string(
        matvol::gp_volume_chain_formula(normalized, common.jobs));
  }
  if (want("postnikov")) {
    const auto y = matvol::minkowski_weights(*z);
    if (y) {
      results["postnikov"] = matvol::to_string(matvol::gp_volume_postnikov(*y));
    } else if (method == "postnikov") {
      throw std::invalid_argument(
          "z has negative Minkowski weights; Postnikov's formula does not "
          "apply");
    } else {
      results["postnikov"] = nullptr;
    }
  }
  if (want("polytope")) {
    if (z->n() <= matvol::kMaxPolytopeOracleSize) {
      results["polytope"] = matvol::to_string(matvol::gp_volume_polytope(*z));
    } else if (method == "polytope") {
      throw std::invalid_argument("the polytope oracle supports n <= " +
                                  std::to_string(
                                      matvol::kMaxPolytopeOracleSize));
    } else {
      results["polytope"] = nullptr;
    }
  }
  if (results.empty()) {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  std::string first;
  for (const auto& [name, value] : results.items()) {
    if (value.is_null()) continue;
    if (first.empty()) {
      first = value.get<std::string>();
    } else if (value.get<std::string>() != first) {
      throw InternalError("volume routes disagree: " + results.dump());
    }
  }
  if (common.format == "json") {
    print_json(Json{{"n", z->n()}, {"volume", results}});
  } else if (results.size() == 1) {
    std::cout << first << '\n';
  } else {
    for (const auto& [name, value] : results.items()) {
      std::cout << name << ": " << (value.is_null() ? "n/a" : value.get<std::string>())
                << '\n';
    }
  }
}

int run_valuation(const Common& common, const std::string& subdivision_arg) {
  const matvol::Subdivision sub = matvol::subdivision_from_json(
      matvol::load_json_argument(subdivision_arg));
  const matvol::ValuationReport report =
      matvol::check_valuation(sub, common.jobs);
  if (common.format == "json") {
    Json cells = Json::array();
    for (const auto& v : report.cell_shrvol) cells.push_back(matvol::to_string(v));
    Json faces = Json::array();
    for (const auto& v : report.face_shrvol) faces.push_back(matvol::to_string(v));
    print_json(Json{
        {"holds", report.holds()},
        {"vp_difference", matvol::polynomial_to_json(report.vp_difference)},
        {"shrvol",
         {{"parent", matvol::to_string(report.parent_shrvol)},
          {"cells", cells},
          {"interior_faces", faces},
          {"difference", matvol::to_string(report.shrvol_difference)}}}});
  } else {
    std::cout << "vp difference:     " << report.vp_difference.to_string()
              << '\n';
    std::cout << "shrvol parent:     " << matvol::to_string(report.parent_shrvol)
              << '\n';
    std::cout << "shrvol difference: "
              << matvol::to_string(report.shrvol_difference) << '\n';
    std::cout << (report.holds() ? "identity holds" : "identity FAILS") << '\n';
  }
  return report.holds() ? kExitOk : kExitInternal;
}

int run_selftest(const Common& common, bool fault, bool empty_catalog) {
  matvol::SelftestOptions options;
  options.inject_binomial_fault = fault;
  options.empty_catalog = empty_catalog;
  options.jobs = common.jobs;
  const matvol::SelftestReport report = matvol::run_selftest(options);
  for (const std::string& w : report.warnings) {
    std::cerr << "warning: " << w << '\n';
  }
  if (common.format == "json") {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
      rows.push_back(
          Json{{"name", row.name}, {"passed", row.passed}, {"detail", row.detail}});
    }
    print_json(Json{{"passed", report.passed()}, {"checks", rows}});
  } else {
    std::size_t width = 0;
    for (const auto& row : report.rows) width = std::max(width, row.name.size());
    for (const auto& row : report.rows) {
      std::cout << (row.passed ? "PASS  " : "FAIL  ") << row.name
                << std::string(width - row.name.size() + 2, ' ') << row.detail
                << '\n';
    }
  }
  return report.passed() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chow-theoretic invariants of matroids"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", common.jobs, "Worker threads")
      ->check(CLI::Range(1, 256));

  std::string matroid_arg;
  auto add_matroid = [&](CLI::App* sub) {
    sub->add_option("--matroid", matroid_arg,
                    "Matroid spec as inline JSON or a file path")
        ->required();
  };

  CLI::App* flats = app.add_subcommand("flats", "Lattice of flats by rank");
  add_matroid(flats);
  CLI::App* charpoly =
      app.add_subcommand("charpoly", "Characteristic polynomial and mu");
  add_matroid(charpoly);

  CLI::App* intersect =
      app.add_subcommand("intersect", "Degree of a chain monomial");
  add_matroid(intersect);
  std::string chain_arg;
  std::string exps_arg;
  intersect->add_option("--chain", chain_arg, "Flats, e.g. [[0],[0,1]]")
      ->required();
  intersect->add_option("--exps", exps_arg, "Exponents, e.g. [1,1]")
      ->required();

  CLI::App* volume_poly =
      app.add_subcommand("volume-poly", "Volume polynomial");
  add_matroid(volume_poly);
  CLI::App* shrvol = app.add_subcommand("shrvol", "Shifted rank volume");
  add_matroid(shrvol);

  CLI::App* gp = app.add_subcommand(
      "gp-volume", "Normalized volume of a generalized permutohedron");
  std::string preset;
  int preset_n = 0;
  std::string z_arg;
  std::string method = "chain";
  gp->add_option("--preset", preset, "Named family: permutohedron");
  gp->add_option("--n", preset_n, "Dimension for --preset");
  gp->add_option("--z", z_arg, "Set function as inline JSON or a file path");
  gp->add_option("--method", method, "chain, postnikov, polytope or all")
      ->check(CLI::IsMember({"chain", "postnikov", "polytope", "all"}));

  CLI::App* valuation = app.add_subcommand(
      "valuation-check", "Valuation identity on a matroid subdivision");
  std::string subdivision_arg;
  valuation
      ->add_option("--subdivision", subdivision_arg,
                   "Subdivision as inline JSON or a file path")
      ->required();

  CLI::App* selftest = app.add_subcommand("selftest", "Invariant suite");
  bool fault = false;
  bool empty_catalog = false;
  selftest->add_flag("--inject-binomial-fault", fault,
                     "Corrupt C(2,1) to exercise failure reporting");
  selftest->add_flag("--empty-catalog", empty_catalog,
                     "Run catalog checks over no matroids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (flats->parsed()) run_flats(common, matroid_arg);
    if (charpoly->parsed()) run_charpoly(common, matroid_arg);
    if (intersect->parsed()) {
      run_intersect(common, matroid_arg, chain_arg, exps_arg);
    }
    if (volume_poly->parsed()) run_volume_poly(common, matroid_arg);
    if (shrvol->parsed()) run_shrvol(common, matroid_arg);
    if (gp->parsed()) run_gp_volume(common, preset, preset_n, z_arg, method);
    if (valuation->parsed()) return run_valuation(common, subdivision_arg);
    if (selftest->parsed()) return run_selftest(common, fault, empty_catalog);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
