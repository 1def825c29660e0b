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

#include "circperm/rational.h"

#include <cctype>

#include "circperm/errors.h"

namespace circperm {
namespace {

bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer ParseInteger(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

std::string ToString(const Rational& value) { return value.get_str(10); }

std::string ToString(const Integer& value) { return value.get_str(10); }

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!IsSignedDigits(num) || !IsSignedDigits(den) || den.front() == '-') {
    throw SyntaxError("malformed rational '" + std::string(text) + "'");
  }
  Integer d = ParseInteger(den);
  if (d == 0) throw SyntaxError("zero denominator in '" + std::string(text) + "'");
  Rational r(ParseInteger(num), d);
  r.canonicalize();
  return r;
}

bool IsInteger(const Rational& value) { return value.get_den() == 1; }

std::string Abbreviate(const Rational& value, std::size_t max_digits) {
  std::string s = ToString(value);
  if (!IsInteger(value) || s.size() <= max_digits) return s;
  const bool negative = s.front() == '-';
  const std::size_t digits = s.size() - (negative ? 1 : 0);
  const std::size_t keep = max_digits / 2;
  std::string head = s.substr(0, keep + (negative ? 1 : 0));
  std::string tail = s.substr(s.size() - keep);
  return head + "…" + tail + " (" + std::to_string(digits) + " digits)";
}

std::vector<std::string> ToStrings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(ToString(v));
  return out;
}

Rational Binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

}  // namespace circperm
