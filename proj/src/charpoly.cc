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

#include "matvol/charpoly.h"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace matvol {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

Integer IntPolynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return 0;
  return coefficients_[power];
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * t + *it;
  }
  return value;
}

IntPolynomial IntPolynomial::divide_by_linear(const Integer& root) const {
  if (coefficients_.empty()) return {};
  // Synthetic division from the top coefficient down.
  std::vector<Integer> quotient(coefficients_.size() - 1);
  Integer carry = 0;
  for (int i = degree(); i >= 1; --i) {
    carry = coefficients_[i] + carry * root;
    quotient[i - 1] = carry;
  }
  Integer remainder = coefficients_[0] + carry * root;
  if (remainder != 0) {
    throw std::logic_error("division by (t - " + root.get_str() +
                           ") leaves remainder " + remainder.get_str());
  }
  return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int power = degree(); power >= 0; --power) {
    const Integer& c = coefficients_[power];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0 || magnitude != 1) {
      out << magnitude.get_str();
      if (power > 0) out << '*';
    }
    if (power >= 1) out << 't';
    if (power >= 2) out << '^' << power;
  }
  return out.str();
}

std::vector<Integer> mobius_from(const FlatLattice& lattice, int lower) {
  std::vector<Integer> mu(lattice.size(), 0);
  mu[lower] = 1;
  // Index order refines rank order, so every K < G is handled before G.
  for (int g = lower + 1; g < lattice.size(); ++g) {
    if (!lattice.leq(lower, g)) continue;
    Integer sum = 0;
    for (int k = lower; k < g; ++k) {
      if (lattice.leq(lower, k) && lattice.leq(k, g)) sum += mu[k];
    }
    mu[g] = -sum;
  }
  return mu;
}

IntPolynomial interval_char_poly(const FlatLattice& lattice, int lower,
                                 int upper) {
  const std::vector<Integer> mu = mobius_from(lattice, lower);
  const int top_rank = lattice.rank_of(upper);
  std::vector<Integer> coeffs(top_rank - lattice.rank_of(lower) + 1, 0);
  for (int g : lattice.interval(lower, upper)) {
    coeffs[top_rank - lattice.rank_of(g)] += mu[g];
  }
  return IntPolynomial(std::move(coeffs));
}

MuVector mu_vector_from_reduced(const IntPolynomial& reduced) {
  std::vector<Integer> values;
  for (int power = reduced.degree(); power >= 0; --power) {
    values.push_back(abs(reduced.coefficient(power)));
  }
  return MuVector(std::move(values));
}

MuVector interval_mu_vector(const FlatLattice& lattice, int lower, int upper) {
  if (lower == upper || !lattice.leq(lower, upper)) {
    throw std::invalid_argument("interval_mu_vector needs lower < upper");
  }
  return mu_vector_from_reduced(
      interval_char_poly(lattice, lower, upper).divide_by_linear(1));
}

IntPolynomial char_poly(const FlatLattice& lattice) {
  return interval_char_poly(lattice, lattice.bottom(), lattice.top());
}

IntPolynomial char_poly(const Matroid& matroid) {
  return char_poly(FlatLattice(matroid));
}

IntPolynomial reduced_char_poly(const Matroid& matroid) {
  return char_poly(matroid).divide_by_linear(1);
}

MuVector mu_vector(const Matroid& matroid) {
  return mu_vector_from_reduced(reduced_char_poly(matroid));
}

Rational gamma(const FlatLattice& lattice, int i) {
  const int r = lattice.rank();
  if (i < -1 || i > r) {
    throw std::out_of_range("gamma index " + std::to_string(i) +
                            " outside -1.." + std::to_string(r));
  }
  if (i == -1) return -1;
  if (i == r) return 0;
  const Subset ground = lattice.flat(lattice.top());
  Rational total = 0;
  // Walk chains G_0 < G_1 < ... < G_i through covers; the last factor
  // closes the chain at E.
  std::function<void(int, int, const Rational&)> walk =
      [&](int current, int depth, const Rational& product) {
        const Subset g = lattice.flat(current);
        if (depth == i) {
          Rational last = ratio(-(ground - g).size(), ground.size());
          total += -(product * last);
          return;
        }
        for (int next : lattice.upper_covers(current)) {
          const Subset h = lattice.flat(next);
          walk(next, depth + 1,
               product * ratio(-(h - g).size(), h.size()));
        }
      };
  walk(lattice.bottom(), 0, Rational(1));
  return total;
}

Rational gamma_recursive(const Matroid& matroid, int i) {
  const int r = matroid.rank();
  if (i < -1 || i > r) {
    throw std::out_of_range("gamma index " + std::to_string(i) +
                            " outside -1.." + std::to_string(r));
  }
  if (i == -1) return -1;
  if (i == r) return 0;
  const FlatLattice lattice(matroid);
  const int n = matroid.size();
  Rational total = 0;
  for (int f : lattice.flats_of_rank(i)) {
    const Subset flat = lattice.flat(f);
    Rational inner;
    if (flat.empty()) {
      inner = -1;  // gamma(M|empty, -1)
    } else {
      Matroid restriction = matroid.minor_interval(Subset(), flat).matroid;
      inner = gamma_recursive(restriction, i - 1);
    }
    total += -ratio(n - flat.size(), n) * inner;
  }
  return total;
}

std::string check_weisner(const FlatLattice& lattice) {
  const std::vector<Integer> mu = mobius(lattice);
  for (int g = 1; g < lattice.size(); ++g) {
    const Subset flat = lattice.flat(g);
    for (int a : flat.elements()) {
      Integer sum = 0;
      for (int f : lattice.lower_covers(g)) {
        if (!lattice.flat(f).contains(a)) sum += mu[f];
      }
      if (mu[g] != -sum) {
        return "Weisner identity fails at flat " + flat.to_string() +
               " with a=" + std::to_string(a);
      }
    }
  }
  return {};
}

Rational maximal_chain_weight_sum(const FlatLattice& lattice) {
  const int d = lattice.rank() - 1;
  const Subset ground = lattice.flat(lattice.top());
  Rational total = 0;
  std::function<void(int, int, const Rational&)> walk =
      [&](int current, int depth, const Rational& product) {
        if (depth == d) {
          total += product;
          return;
        }
        const Subset g = lattice.flat(current);
        for (int next : lattice.upper_covers(current)) {
          if (next == lattice.top()) continue;
          const Subset h = lattice.flat(next);
          walk(next, depth + 1,
               product * ratio((h - g).size(), (ground - g).size()));
        }
      };
  walk(lattice.bottom(), 0, Rational(1));
  return total;
}

}  // namespace matvol
