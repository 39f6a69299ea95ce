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

#include "matvol/rational.h"

#include <array>
#include <atomic>
#include <cctype>
#include <stdexcept>

namespace matvol {
namespace {

constexpr int kTableSize = 64;

std::atomic<bool> g_binomial_fault{false};

// Pascal triangle, built once; entries beyond the table fall back to GMP.
const std::array<std::array<Integer, kTableSize>, kTableSize>& pascal() {
  static const auto table = [] {
    std::array<std::array<Integer, kTableSize>, kTableSize> t;
    for (int n = 0; n < kTableSize; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) {
        t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : Integer(0));
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (g_binomial_fault.load(std::memory_order_relaxed) && n == 2 && k == 1) {
    return 3;
  }
  if (n < kTableSize) return pascal()[n][k];
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value{Integer(num), Integer(den)};
  value.canonicalize();
  return value;
}

Integer multinomial(std::span<const int> parts) {
  long total = 0;
  Integer denominator = 1;
  for (int part : parts) {
    if (part < 0) throw std::invalid_argument("negative multinomial part");
    total += part;
    denominator *= factorial(part);
  }
  return factorial(total) / denominator;
}

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) {
    ++begin;
  }
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
    --end;
  }
  std::string trimmed(text.substr(begin, end - begin));
  if (trimmed.empty()) throw std::invalid_argument("empty rational");
  std::size_t slash = trimmed.find('/');
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string numerator = trimmed.substr(0, slash);
  std::string denominator =
      slash == std::string::npos ? "1" : trimmed.substr(slash + 1);
  if (!numerator.empty() && numerator[0] == '+') numerator.erase(0, 1);
  if (!valid_integer(numerator) || !valid_integer(denominator) ||
      denominator[0] == '-' || denominator[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + trimmed + "'");
  }
  Integer den(denominator, 10);
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational value(Integer(numerator, 10), den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

namespace testing {

void set_binomial_fault(bool enabled) { g_binomial_fault.store(enabled); }

bool binomial_fault() { return g_binomial_fault.load(); }

}  // namespace testing
}  // namespace matvol
