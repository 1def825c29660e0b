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

#include "circperm/polynomial.h"

#include <cassert>

#include "circperm/errors.h"

namespace circperm {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  Trim();
}

Polynomial Polynomial::Constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::X() { return Polynomial({Rational(0), Rational(1)}); }

void Polynomial::Trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::Coefficient(int i) const {
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0);
}

Polynomial Polynomial::Monic() const {
  if (IsZero()) return *this;
  const Rational lead = Leading();
  std::vector<Rational> out = c_;
  for (auto& v : out) v /= lead;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::Derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(c_[i] * static_cast<long>(i));
  return Polynomial(std::move(out));
}

Rational Polynomial::Evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::EvaluateDouble(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.IsZero() || b.IsZero()) return Polynomial();
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& k, const Polynomial& a) {
  std::vector<Rational> out = a.c_;
  for (auto& v : out) v *= k;
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::DivMod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.IsZero()) throw InconsistencyError("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  const int db = b.Degree();
  if (a.Degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(a.Degree() - db + 1);
  for (int i = a.Degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const Rational f = r[i] / b.Leading();
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

std::string Polynomial::ToString() const {
  if (IsZero()) return "0";
  std::string out;
  for (int i = Degree(); i >= 0; --i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    const bool negative = v < 0;
    const Rational mag = negative ? Rational(-v) : v;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string m = circperm::ToString(mag);
    const bool unit = mag == 1;
    if (i == 0) {
      out += m;
      continue;
    }
    if (!unit) out += IsInteger(mag) ? m : "(" + m + ")";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

std::vector<std::string> Polynomial::ToStrings() const { return circperm::ToStrings(c_); }

Polynomial Gcd(Polynomial a, Polynomial b) {
  while (!b.IsZero()) {
    Polynomial r = Polynomial::DivMod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.Monic();
}

RationalMatrix EvaluateAt(const Polynomial& p, const RationalMatrix& m) {
  assert(m.square());
  RationalMatrix acc(m.rows(), m.cols());
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    acc.AddScaledIdentity(*it);
  }
  return acc;
}

Polynomial CharPoly(const RationalMatrix& m) {
  if (!m.square()) throw InconsistencyError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix h = m;

  // Similarity transforms to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t pivot = col + 1;
    while (pivot < n && h(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(pivot, j), h(col + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, pivot), h(i, col + 1));
    }
    const Rational piv = h(col + 1, col);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h(i, col) == 0) continue;
      const Rational t = h(i, col) / piv;
      for (std::size_t j = 0; j < n; ++j) h(i, j) -= t * h(col + 1, j);
      for (std::size_t r = 0; r < n; ++r) h(r, col + 1) += t * h(r, i);
    }
  }

  // p_k is the characteristic polynomial of the leading k x k block.
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::Constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = (Polynomial::X() - Polynomial::Constant(h(k - 1, k - 1))) * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h(k - i, k - i - 1);
      if (prod == 0) break;
      p[k] = p[k] - (prod * h(k - i - 1, k - 1)) * p[k - i - 1];
    }
  }
  return p[n];
}

}  // namespace circperm
