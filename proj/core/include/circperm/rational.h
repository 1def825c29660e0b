// Copyright 2026 The circperm Authors.
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

#ifndef CIRCPERM_RATIONAL_H_
#define CIRCPERM_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace circperm {

using Integer = mpz_class;
using Rational = mpq_class;

// "a" for integers, "a/b" otherwise; always canonical.
std::string ToString(const Rational& value);
std::string ToString(const Integer& value);

// Accepts "a", "-a" and "a/b". Throws SyntaxError on anything else or a zero
// denominator.
Rational ParseRational(std::string_view text);

bool IsInteger(const Rational& value);

// Decimal rendering; longer numbers are abbreviated as "1234…5678 (N digits)".
std::string Abbreviate(const Rational& value, std::size_t max_digits = 24);

std::vector<std::string> ToStrings(const std::vector<Rational>& values);

Rational Binomial(unsigned n, unsigned k);

}  // namespace circperm

#endif  // CIRCPERM_RATIONAL_H_
