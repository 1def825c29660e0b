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

#include "circperm/recurrence.h"

#include <algorithm>

#include "circperm/errors.h"

namespace circperm {
namespace {

constexpr int64_t kDirectLimit = 20000;

}  // namespace

Polynomial Recurrence::CharacteristicPolynomial() const {
  const int d = order();
  std::vector<Rational> c(d + 1);
  c[d] = 1;
  for (int j = 1; j <= d; ++j) c[d - j] = -coeffs[j - 1];
  return Polynomial(std::move(c));
}

std::string Recurrence::ToString(const std::string& name) const {
  std::string out = name + "(n) =";
  bool first = true;
  for (int j = 1; j <= order(); ++j) {
    const Rational& c = coeffs[j - 1];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out += first ? (negative ? " -" : " ") : (negative ? " - " : " + ");
    if (mag != 1) out += circperm::ToString(mag) + " ";
    out += name + "(n-" + std::to_string(j) + ")";
    first = false;
  }
  if (first) out += " 0";
  return out;
}

Recurrence MinRecurrence(const std::vector<Rational>& terms, int64_t base,
                         int degree_cap, int guard) {
  if (guard < 4) guard = 4;
  const std::size_t needed = 2 * static_cast<std::size_t>(degree_cap) + guard;
  if (terms.size() < needed) {
    throw InconsistencyError("recurrence search up to order " +
                             std::to_string(degree_cap) + " needs " +
                             std::to_string(needed) + " terms, got " +
                             std::to_string(terms.size()));
  }

  // Berlekamp-Massey: c is the connection polynomial, 1 + c_1 x + ... .
  std::vector<Rational> c{1}, b{1};
  int len = 0;
  int shift = 1;
  Rational last = 1;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    Rational disc = terms[n];
    for (int i = 1; i <= len; ++i) disc += c[i] * terms[n - i];
    if (disc == 0) {
      ++shift;
      continue;
    }
    const Rational f = disc / last;
    std::vector<Rational> next = c;
    if (next.size() < b.size() + shift) next.resize(b.size() + shift);
    for (std::size_t i = 0; i < b.size(); ++i) next[i + shift] -= f * b[i];
    if (2 * len <= static_cast<int>(n)) {
      b = std::move(c);
      len = static_cast<int>(n) + 1 - len;
      last = disc;
      shift = 1;
    } else {
      ++shift;
    }
    c = std::move(next);
  }

  Recurrence rec;
  rec.base = base;
  if (len == 0) {
    rec.coeffs = {Rational(0)};
    rec.initials = {terms[0]};
    return rec;
  }
  if (len > degree_cap) {
    throw NoRecurrenceError("no linear recurrence of order <= " +
                            std::to_string(degree_cap) + " fits the " +
                            std::to_string(terms.size()) + " terms (minimal order " +
                            std::to_string(len) + ")");
  }
  c.resize(len + 1);
  for (int j = 1; j <= len; ++j) rec.coeffs.push_back(-c[j]);
  rec.initials.assign(terms.begin(), terms.begin() + len);
  if (!Reproduces(rec, terms, base)) {
    throw NoRecurrenceError("fitted recurrence of order " + std::to_string(len) +
                            " does not replay the input terms");
  }
  return rec;
}

Recurrence FromAnnihilator(const Polynomial& p, const std::vector<Rational>& terms,
                           int64_t base) {
  const Polynomial monic = p.Monic();
  const int d = monic.Degree();
  if (d < 1) throw InconsistencyError("annihilator must have positive degree");
  if (static_cast<int>(terms.size()) < d) {
    throw InconsistencyError("not enough terms to seed the annihilator recurrence");
  }
  Recurrence rec;
  rec.base = base;
  for (int k = 1; k <= d; ++k) rec.coeffs.push_back(-monic.Coefficient(d - k));
  rec.initials.assign(terms.begin(), terms.begin() + d);
  return rec;
}

bool Reproduces(const Recurrence& rec, const std::vector<Rational>& terms,
                int64_t base_of_terms) {
  if (terms.empty()) return true;
  const int64_t last = base_of_terms + static_cast<int64_t>(terms.size()) - 1;
  const int64_t from = std::max(base_of_terms, rec.base);
  if (from > last) return true;
  const std::vector<Rational> values = Unroll(rec, from, last);
  for (int64_t n = from; n <= last; ++n) {
    if (values[n - from] != terms[n - base_of_terms]) return false;
  }
  return true;
}

std::vector<Rational> Unroll(const Recurrence& rec, int64_t from, int64_t to) {
  if (from < rec.base) {
    throw InconsistencyError("recurrence evaluated below its base n=" +
                             std::to_string(rec.base));
  }
  std::vector<Rational> all = rec.initials;
  const int d = rec.order();
  const int64_t count = to - rec.base + 1;
  all.reserve(std::max<int64_t>(count, 0));
  while (static_cast<int64_t>(all.size()) < count) {
    Rational v = 0;
    const std::size_t k = all.size();
    for (int j = 1; j <= d; ++j) {
      if (rec.coeffs[j - 1] != 0) v += rec.coeffs[j - 1] * all[k - j];
    }
    all.push_back(std::move(v));
  }
  return std::vector<Rational>(all.begin() + (from - rec.base), all.begin() + count);
}

Rational EvalRecurrence(const Recurrence& rec, int64_t n) {
  if (n < rec.base) {
    throw InconsistencyError("recurrence evaluated at n=" + std::to_string(n) +
                             " below its base n=" + std::to_string(rec.base));
  }
  const int64_t k = n - rec.base;
  if (k < rec.order()) return rec.initials[k];
  if (k <= kDirectLimit) return Unroll(rec, n, n).front();

  // x^k mod the characteristic polynomial, by square and multiply.
  const Polynomial modulus = rec.CharacteristicPolynomial();
  Polynomial result = Polynomial::Constant(1);
  Polynomial power = Polynomial::X();
  for (int64_t e = k; e > 0; e >>= 1) {
    if (e & 1) result = Polynomial::DivMod(result * power, modulus).second;
    power = Polynomial::DivMod(power * power, modulus).second;
  }
  Rational v = 0;
  for (int i = 0; i <= result.Degree(); ++i) v += result.Coefficient(i) * rec.initials[i];
  return v;
}

Polynomial Annihilator(const std::vector<RationalMatrix>& blocks,
                       std::vector<Polynomial>* block_polys) {
  std::vector<Polynomial> distinct;
  if (block_polys) block_polys->clear();
  for (const auto& b : blocks) {
    Polynomial p = CharPoly(b);
    if (block_polys) block_polys->push_back(p);
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end()) {
      distinct.push_back(std::move(p));
    }
  }
  Polynomial product = Polynomial::Constant(1);
  for (const auto& p : distinct) product = product * p;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (!EvaluateAt(product, blocks[i]).IsZero()) {
      throw AnnihilationError("annihilator " + product.ToString() +
                              " does not vanish on block " + std::to_string(i));
    }
  }
  return product;
}

}  // namespace circperm
