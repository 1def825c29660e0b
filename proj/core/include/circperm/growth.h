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

#ifndef CIRCPERM_GROWTH_H_
#define CIRCPERM_GROWTH_H_

#include <string>

#include "circperm/rational.h"
#include "circperm/recurrence.h"

namespace circperm {

struct GrowthEstimate {
  // Largest-modulus real root of the characteristic polynomial, certified to
  // lie in [lower, upper].
  double dominant_root = 0;
  Rational lower;
  Rational upper;
  int multiplicity = 0;
  // Largest modulus over all complex roots (floating point).
  double modulus = 0;
  // Some non-real root is strictly larger in modulus than every real root.
  bool non_real_dominant = false;
  bool has_real_root = false;

  std::string Note() const;
};

// Sturm-sequence bisection on the square-free part inside the Cauchy bound,
// to a bracket narrower than 1e-12. Complex moduli come from the eigenvalues
// of the companion matrix.
GrowthEstimate Growth(const Recurrence& rec);
GrowthEstimate GrowthOf(const Polynomial& p);

// Number of distinct real roots of a square-free polynomial in (a, b].
int CountRootsIn(const std::vector<Polynomial>& sturm, const Rational& a,
                 const Rational& b);
std::vector<Polynomial> SturmSequence(const Polynomial& square_free);

}  // namespace circperm

#endif  // CIRCPERM_GROWTH_H_
