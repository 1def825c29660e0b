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

#ifndef CIRCPERM_POLYNOMIAL_H_
#define CIRCPERM_POLYNOMIAL_H_

#include <string>
#include <utility>
#include <vector>

#include "circperm/matrix.h"
#include "circperm/rational.h"

namespace circperm {

// Univariate polynomial over Q, coefficients in ascending degree. The zero
// polynomial has no coefficients; otherwise the leading coefficient is
// nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);
  static Polynomial Constant(const Rational& c);
  static Polynomial X();  // the monomial x

  bool IsZero() const { return c_.empty(); }
  int Degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational Coefficient(int i) const;
  const Rational& Leading() const { return c_.back(); }

  Polynomial Monic() const;
  Polynomial Derivative() const;
  Rational Evaluate(const Rational& x) const;
  double EvaluateDouble(double x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& k, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  // Quotient and remainder; b must be nonzero.
  static std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                                  const Polynomial& b);

  // Human-readable form such as "x^3 - 2x^2 + 1".
  std::string ToString() const;
  std::vector<std::string> ToStrings() const;

 private:
  void Trim();
  std::vector<Rational> c_;
};

// Monic greatest common divisor.
Polynomial Gcd(Polynomial a, Polynomial b);

// P(M) evaluated exactly by Horner's rule.
RationalMatrix EvaluateAt(const Polynomial& p, const RationalMatrix& m);

// det(xI - M): similarity reduction to upper Hessenberg form over Q followed
// by the standard Hessenberg determinant recurrence.
Polynomial CharPoly(const RationalMatrix& m);

}  // namespace circperm

#endif  // CIRCPERM_POLYNOMIAL_H_
