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

#ifndef MATVOL_RATIONAL_H_
#define MATVOL_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>

namespace matvol {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k), zero whenever k < 0, k > n or n < 0.
Integer binomial(long n, long k);

// d! / (d_1! ... d_k!) where d = sum of parts.
Integer multinomial(std::span<const int> parts);

Integer factorial(long n);

// num / den in canonical form.
Rational ratio(long num, long den);

// Accepts "p", "p/q" and surrounding whitespace; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers are written without a denominator.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

namespace testing {

// Fault injection for the self-test: while enabled, binomial(2, 1) returns 3.
void set_binomial_fault(bool enabled);
bool binomial_fault();

}  // namespace testing
}  // namespace matvol

#endif  // MATVOL_RATIONAL_H_
