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

#include "matvol/chow.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace matvol {

ChainMonomial::ChainMonomial(std::vector<Subset> flats, std::vector<int> exps) {
  if (flats.size() != exps.size()) {
    throw std::invalid_argument("monomial needs one exponent per flat");
  }
  std::vector<std::size_t> order(flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(flats[a], flats[b]);
  });
  for (std::size_t idx : order) {
    if (exps[idx] < 1) {
      throw std::invalid_argument("monomial exponents must be positive");
    }
    if (!flats_.empty() && flats_.back() == flats[idx]) {
      exps_.back() += exps[idx];
    } else {
      flats_.push_back(flats[idx]);
      exps_.push_back(exps[idx]);
    }
  }
}

int ChainMonomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool ChainMonomial::is_chain() const {
  for (std::size_t i = 1; i < flats_.size(); ++i) {
    if (!flats_[i - 1].is_proper_subset_of(flats_[i])) return false;
  }
  return true;
}

bool ChainMonomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 1; });
}

int ChainMonomial::exponent_of(Subset flat) const {
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (flats_[i] == flat) return exps_[i];
  }
  return 0;
}

ChainMonomial ChainMonomial::multiplied(Subset flat, int delta) const {
  ChainMonomial out;
  out.flats_.reserve(flats_.size() + 1);
  out.exps_.reserve(flats_.size() + 1);
  bool placed = false;
  auto place = [&] {
    if (delta < 0) throw std::invalid_argument("negative exponent");
    if (delta > 0) {
      out.flats_.push_back(flat);
      out.exps_.push_back(delta);
    }
    placed = true;
  };
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (!placed && flats_[i] == flat) {
      const int e = exps_[i] + delta;
      if (e < 0) throw std::invalid_argument("negative exponent");
      if (e > 0) {
        out.flats_.push_back(flat);
        out.exps_.push_back(e);
      }
      placed = true;
      continue;
    }
    if (!placed && canonical_less(flat, flats_[i])) place();
    out.flats_.push_back(flats_[i]);
    out.exps_.push_back(exps_[i]);
  }
  if (!placed) place();
  return out;
}

std::string ChainMonomial::to_string(char variable) const {
  if (flats_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    if (i > 0) out += '*';
    std::string label = flats_[i].to_string();
    out += variable;
    out += '_' + label;
    if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
  }
  return out;
}

bool operator<(const ChainMonomial& a, const ChainMonomial& b) {
  const std::size_t common = std::min(a.flats_.size(), b.flats_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (a.flats_[i] != b.flats_[i]) {
      return canonical_less(a.flats_[i], b.flats_[i]);
    }
  }
  if (a.flats_.size() != b.flats_.size()) {
    return a.flats_.size() < b.flats_.size();
  }
  return a.exps_ < b.exps_;
}

SparseChainPolynomial SparseChainPolynomial::constant(const Rational& value) {
  return monomial(ChainMonomial(), value);
}

SparseChainPolynomial SparseChainPolynomial::monomial(
    ChainMonomial mono, const Rational& coefficient) {
  SparseChainPolynomial p;
  p.add_term(mono, coefficient);
  return p;
}

void SparseChainPolynomial::add_term(const ChainMonomial& mono,
                                     const Rational& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparseChainPolynomial::coefficient(const ChainMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> SparseChainPolynomial::homogeneous_degree() const {
  std::optional<int> degree;
  for (const auto& [mono, coeff] : terms_) {
    if (!degree) {
      degree = mono.degree();
    } else if (*degree != mono.degree()) {
      return std::nullopt;
    }
  }
  return degree;
}

SparseChainPolynomial& SparseChainPolynomial::operator+=(
    const SparseChainPolynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, coeff);
  return *this;
}

SparseChainPolynomial& SparseChainPolynomial::operator-=(
    const SparseChainPolynomial& other) {
  for (const auto& [mono, coeff] : other.terms_) add_term(mono, -coeff);
  return *this;
}

SparseChainPolynomial& SparseChainPolynomial::operator*=(
    const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= scalar;
  return *this;
}

std::string SparseChainPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    Rational magnitude = abs(coeff);
    if (first) {
      if (coeff < 0) out << '-';
    } else {
      out << (coeff < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == 1;
    if (!unit || mono.length() == 0) out << magnitude.get_str();
    if (mono.length() > 0) {
      if (!unit) out << '*';
      out << mono.to_string();
    }
  }
  return out.str();
}

void DivisorAssignment::set(Subset flat, const Rational& value) {
  values_[flat] = value;
}

Rational DivisorAssignment::value(Subset flat) const {
  auto it = values_.find(flat);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational evaluate(const SparseChainPolynomial& polynomial,
                  const DivisorAssignment& assignment) {
  Rational total = 0;
  for (const auto& [mono, coeff] : polynomial.terms()) {
    Rational term = coeff;
    for (int i = 0; i < mono.length() && term != 0; ++i) {
      Rational base = assignment.value(mono.flats()[i]);
      Rational power = 1;
      for (int e = 0; e < mono.exps()[i]; ++e) power *= base;
      term *= power;
    }
    total += term;
  }
  return total;
}

struct ChowRing::Cache {
  std::shared_mutex mutex;
  std::map<std::pair<int, int>, MuVector> interval_mu;
};

ChowRing::ChowRing(Matroid matroid)
    : matroid_(std::move(matroid)),
      lattice_(matroid_),
      cache_(std::make_unique<Cache>()) {}

ChowRing::~ChowRing() = default;
ChowRing::ChowRing(ChowRing&&) noexcept = default;
ChowRing& ChowRing::operator=(ChowRing&&) noexcept = default;

MuVector ChowRing::interval_mu(int lower, int upper) const {
  const std::pair<int, int> key{lower, upper};
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->interval_mu.find(key);
    if (it != cache_->interval_mu.end()) return it->second;
  }
  MuVector value = interval_mu_vector(lattice_, lower, upper);
  std::unique_lock lock(cache_->mutex);
  return cache_->interval_mu.try_emplace(key, std::move(value)).first->second;
}

int ChowRing::index_of_proper_flat(Subset s) const {
  std::optional<int> index = lattice_.index_of(s);
  if (!index || *index == lattice_.bottom() || *index == lattice_.top()) {
    throw std::invalid_argument(s.to_string() +
                                " is not a nonempty proper flat");
  }
  return *index;
}

void ChowRing::validate(const ChainMonomial& mono) const {
  for (Subset f : mono.flats()) index_of_proper_flat(f);
  if (mono.degree() != degree()) {
    throw std::invalid_argument(
        "monomial has degree " + std::to_string(mono.degree()) +
        " but the top degree is rk M - 1 = " + std::to_string(degree()));
  }
}

Integer ChowRing::intersection_number(const ChainMonomial& mono,
                                      bool* is_chain) const {
  validate(mono);
  if (is_chain != nullptr) *is_chain = mono.is_chain();
  if (!mono.is_chain()) return 0;
  const int k = mono.length();
  const int d = degree();
  Integer product = ((d - k) % 2 == 0) ? 1 : -1;
  int partial = 0;  // d~_i
  for (int i = 0; i < k; ++i) {
    const int lower = index_of_proper_flat(mono.flats()[i]);
    const int upper = (i + 1 < k) ? index_of_proper_flat(mono.flats()[i + 1])
                                  : lattice_.top();
    const int d_i = mono.exps()[i];
    partial += d_i;
    const int shift = partial - lattice_.rank_of(lower);
    Integer choose = binomial(d_i - 1, shift);
    if (choose == 0) return 0;
    product *= choose * interval_mu(lower, upper).at(shift);
    if (product == 0) return 0;
  }
  return product;
}

SparseChainPolynomial ChowRing::volume_polynomial(int jobs) const {
  const int d = degree();
  if (d == 0) return SparseChainPolynomial::constant(1);

  // Proper flats strictly above each flat.
  std::vector<std::vector<int>> above(lattice_.size());
  for (int a = 0; a < lattice_.size(); ++a) {
    for (int b = a + 1; b < lattice_.top(); ++b) {
      if (lattice_.flat(a).is_proper_subset_of(lattice_.flat(b))) {
        above[a].push_back(b);
      }
    }
  }

  // Enumerates chains with compositions satisfying d~_{i-1} < r_i <= d~_i;
  // outside that range the binomial factor vanishes.
  auto expand_from = [&](int first, std::vector<std::pair<ChainMonomial,
                                                          Rational>>& out) {
    std::vector<Subset> flats;
    std::vector<int> exps;
    std::function<void(int, int)> extend = [&](int current, int partial) {
      const int r = lattice_.rank_of(current);
      for (int d_i = std::max(1, r - partial); partial + d_i <= d; ++d_i) {
        flats.push_back(lattice_.flat(current));
        exps.push_back(d_i);
        const int next_partial = partial + d_i;
        if (next_partial == d) {
          ChainMonomial mono(flats, exps);
          Integer degree_value = intersection_number(mono);
          if (degree_value != 0) {
            out.emplace_back(std::move(mono),
                             Rational(degree_value * multinomial(exps)));
          }
        } else {
          for (int next : above[current]) {
            if (lattice_.rank_of(next) > next_partial) {
              extend(next, next_partial);
            }
          }
        }
        flats.pop_back();
        exps.pop_back();
      }
    };
    extend(first, 0);
  };

  const std::vector<int> firsts = lattice_.proper_flats();
  std::vector<std::vector<std::pair<ChainMonomial, Rational>>> results(
      firsts.size());
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(firsts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      expand_from(firsts[i], results[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < firsts.size(); i = next++) {
            expand_from(firsts[i], results[i]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  SparseChainPolynomial vp;
  for (const auto& chunk : results) {
    for (const auto& [mono, coeff] : chunk) vp.add_term(mono, coeff);
  }
  return vp;
}

DivisorAssignment ChowRing::shifted_rank_divisor() const {
  DivisorAssignment divisor;
  for (int f : lattice_.proper_flats()) {
    divisor.set(lattice_.flat(f), lattice_.rank_of(f));
  }
  return divisor;
}

Rational ChowRing::shifted_rank_volume(int jobs) const {
  return evaluate(volume_polynomial(jobs), shifted_rank_divisor());
}

void for_each_chain_monomial(
    const ChowRing& ring, const std::function<void(const ChainMonomial&)>& f) {
  const FlatLattice& lattice = ring.lattice();
  const int d = ring.degree();
  if (d == 0) return;
  std::vector<Subset> flats;
  std::vector<int> exps;
  std::function<void(int, int)> extend = [&](int current, int partial) {
    flats.push_back(lattice.flat(current));
    exps.push_back(0);
    for (int e = 1; partial + e <= d; ++e) {
      exps.back() = e;
      if (partial + e == d) {
        f(ChainMonomial(flats, exps));
        continue;
      }
      for (int next = current + 1; next < lattice.top(); ++next) {
        if (lattice.flat(current).is_proper_subset_of(lattice.flat(next))) {
          extend(next, partial + e);
        }
      }
    }
    flats.pop_back();
    exps.pop_back();
  };
  for (int first : lattice.proper_flats()) extend(first, 0);
}

SparseChainPolynomial volume_polynomial(const Matroid& matroid, int jobs) {
  return ChowRing(matroid).volume_polynomial(jobs);
}

Rational shifted_rank_volume(const Matroid& matroid, int jobs) {
  return ChowRing(matroid).shifted_rank_volume(jobs);
}

}  // namespace matvol
