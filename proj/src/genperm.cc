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

#include "matvol/genperm.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <stdexcept>
#include <thread>

namespace matvol {

SetFunction::SetFunction(int n) : n_(n) {
  if (n < 1 || n > kMaxSetFunctionSize) {
    throw std::invalid_argument("set function size must be in 1.." +
                                std::to_string(kMaxSetFunctionSize));
  }
  values_.assign(std::size_t{1} << n, Rational(0));
}

std::optional<std::pair<Subset, Subset>> submodularity_violation(
    const SetFunction& z) {
  const Subset::Mask count = Subset::Mask{1} << z.n();
  for (Subset::Mask a = 0; a < count; ++a) {
    for (Subset::Mask b = a + 1; b < count; ++b) {
      const Subset i(a), j(b);
      if (i.comparable(j)) continue;
      if (z[i | j] + z[i & j] > z[i] + z[j]) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

SetFunction normalize(const SetFunction& z) {
  if (z[Subset()] != 0) {
    throw std::invalid_argument("normalize needs z_empty = 0");
  }
  SetFunction out(z.n());
  const Rational top = z[z.ground()];
  const Subset::Mask count = Subset::Mask{1} << z.n();
  for (Subset::Mask m = 0; m < count; ++m) {
    const Subset s(m);
    out[s] = z[s] - top * ratio(s.size(), z.n());
  }
  return out;
}

bool is_normalized(const SetFunction& z) {
  return z[Subset()] == 0 && z[z.ground()] == 0;
}

SetFunction modular(std::span<const Rational> a) {
  SetFunction out(static_cast<int>(a.size()));
  const Subset::Mask count = Subset::Mask{1} << out.n();
  for (Subset::Mask m = 0; m < count; ++m) {
    for (int i : Subset(m).elements()) out[Subset(m)] += a[i];
  }
  return out;
}

SetFunction permutohedron(int n) {
  SetFunction out(n);
  const Subset::Mask count = Subset::Mask{1} << n;
  for (Subset::Mask m = 0; m < count; ++m) {
    const int k = Subset(m).size();
    out[Subset(m)] = ratio((n - k) * k, 2);
  }
  return out;
}

SetFunction supermodular_dual(const SetFunction& z) {
  SetFunction out(z.n());
  const Subset ground = z.ground();
  const Subset::Mask count = Subset::Mask{1} << z.n();
  for (Subset::Mask m = 0; m < count; ++m) {
    out[Subset(m)] = z[ground] - z[ground - Subset(m)];
  }
  return out;
}

SetFunction mobius_invert(const SetFunction& w) {
  SetFunction out(w.n());
  const Subset::Mask count = Subset::Mask{1} << w.n();
  for (Subset::Mask i = 0; i < count; ++i) {
    Rational total = 0;
    // Walk every submask j of i.
    for (Subset::Mask j = i;; j = (j - 1) & i) {
      const int gap = Subset(i - j).size();
      if (gap % 2 == 0) {
        total += w[Subset(j)];
      } else {
        total -= w[Subset(j)];
      }
      if (j == 0) break;
    }
    out[Subset(i)] = total;
  }
  return out;
}

SetFunction from_minkowski(const SetFunction& y) {
  SetFunction out(y.n());
  const Subset::Mask count = Subset::Mask{1} << y.n();
  for (Subset::Mask i = 1; i < count; ++i) {
    for (Subset::Mask j = 1; j < count; ++j) {
      if (i & j) out[Subset(i)] += y[Subset(j)];
    }
  }
  return out;
}

std::optional<SetFunction> minkowski_weights(const SetFunction& z) {
  SetFunction y = mobius_invert(supermodular_dual(z));
  const Subset::Mask count = Subset::Mask{1} << z.n();
  for (Subset::Mask m = 0; m < count; ++m) {
    if (Subset(m).size() >= 2 && y[Subset(m)] < 0) return std::nullopt;
  }
  return y;
}

Rational gp_volume_chain_formula(const SetFunction& z, int jobs) {
  if (!is_normalized(z)) {
    throw std::invalid_argument(
        "chain formula needs z_empty = z_[n] = 0; normalize first");
  }
  const int n = z.n();
  const int d = n - 1;
  const Subset ground = z.ground();
  if (d == 0) return 1;

  auto powers_of = [&](Subset s, int e) {
    Rational p = 1;
    for (int i = 0; i < e; ++i) p *= z[s];
    return p;
  };

  auto expand_from = [&](Subset first) {
    Rational total = 0;
    std::vector<int> exps;
    // `weight` holds every factor whose both chain ends are known.
    std::function<void(Subset, int, const Rational&)> extend =
        [&](Subset current, int partial, const Rational& weight) {
          const int size = current.size();
          for (int d_i = std::max(1, size - partial); partial + d_i <= d;
               ++d_i) {
            const int next_partial = partial + d_i;
            const int shift = next_partial - size;
            const Integer choose = binomial(d_i - 1, shift);
            if (choose == 0 || z[current] == 0) continue;
            const Rational here = weight * Rational(choose) *
                                  powers_of(current, d_i);
            exps.push_back(d_i);
            if (next_partial == d) {
              const Integer closing = binomial(n - size - 1, shift);
              if (closing != 0) {
                const int k = static_cast<int>(exps.size());
                Rational term = here * Rational(closing * multinomial(exps));
                if ((d - k) % 2 != 0) term = -term;
                total += term;
              }
            } else {
              const Subset rest = ground - current;
              for (Subset::Mask add = rest.bits(); add != 0;
                   add = (add - 1) & rest.bits()) {
                const Subset next = current | Subset(add);
                if (next == ground || next.size() <= next_partial) continue;
                const Integer link =
                    binomial(next.size() - size - 1, shift);
                if (link == 0) continue;
                extend(next, next_partial, here * Rational(link));
              }
            }
            exps.pop_back();
          }
        };
    extend(first, 0, Rational(1));
    return total;
  };

  std::vector<Subset> firsts;
  for (Subset::Mask m = 1; m < ground.bits(); ++m) firsts.push_back(Subset(m));
  std::vector<Rational> partial_sums(firsts.size());
  const int workers =
      std::max(1, std::min<int>(jobs, static_cast<int>(firsts.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < firsts.size(); ++i) {
      partial_sums[i] = expand_from(firsts[i]);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < firsts.size(); i = next++) {
            partial_sums[i] = expand_from(firsts[i]);
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
  Rational total = 0;
  for (const Rational& s : partial_sums) total += s;
  return total / Rational(factorial(d));
}

Rational gp_volume_postnikov(const SetFunction& y) {
  const int n = y.n();
  const int slots = n - 1;
  std::vector<Subset> support;
  const Subset::Mask count = Subset::Mask{1} << n;
  for (Subset::Mask m = 0; m < count; ++m) {
    const Subset s(m);
    if (s.size() < 2 || y[s] == 0) continue;
    if (y[s] < 0) {
      throw std::invalid_argument("negative Minkowski weight on " +
                                  s.to_string());
    }
    support.push_back(s);
  }
  if (slots == 0) return 1;

  // unions[mask] is the union of the chosen sets at the positions in mask.
  std::vector<Subset> unions(std::size_t{1} << slots);
  std::vector<int> chosen;
  Rational total = 0;
  std::function<void(int, std::size_t, const Rational&)> place =
      [&](int position, std::size_t start, const Rational& product) {
        if (position == slots) {
          // Ordered tuples: divide the multiset product by its symmetry.
          Integer symmetry = 1;
          int run = 1;
          for (int p = 1; p <= slots; ++p) {
            if (p < slots && chosen[p] == chosen[p - 1]) {
              ++run;
            } else {
              symmetry *= factorial(run);
              run = 1;
            }
          }
          total += product / Rational(symmetry);
          return;
        }
        const std::size_t bit = std::size_t{1} << position;
        for (std::size_t idx = start; idx < support.size(); ++idx) {
          const Subset s = support[idx];
          bool ok = true;
          for (std::size_t mask = 0; mask < bit && ok; ++mask) {
            const Subset u = unions[mask] | s;
            unions[mask | bit] = u;
            ok = u.size() >= std::popcount(mask) + 2;
          }
          if (!ok) continue;
          chosen.push_back(static_cast<int>(idx));
          place(position + 1, idx, product * y[s]);
          chosen.pop_back();
        }
      };
  place(0, 0, Rational(1));
  return total;
}

}  // namespace matvol
