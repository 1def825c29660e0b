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

#ifndef CIRCPERM_RECURRENCE_H_
#define CIRCPERM_RECURRENCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "circperm/matrix.h"
#include "circperm/polynomial.h"
#include "circperm/rational.h"

namespace circperm {

// T(n) = sum_{j=1..d} coeffs[j-1] * T(n-j) for n >= base + d, with
// T(base + i) = initials[i].
struct Recurrence {
  std::vector<Rational> coeffs;
  int64_t base = 0;
  std::vector<Rational> initials;

  int order() const { return static_cast<int>(coeffs.size()); }
  // x^d - c_1 x^(d-1) - ... - c_d.
  Polynomial CharacteristicPolynomial() const;
  std::string ToString(const std::string& name = "T") const;

  friend bool operator==(const Recurrence&, const Recurrence&) = default;
};

// Smallest-order recurrence reproducing every term, found with the
// Berlekamp-Massey algorithm over Q and confirmed by replaying all terms.
// Requires terms.size() >= 2 * degree_cap + guard. Throws NoRecurrenceError
// when the minimal order exceeds degree_cap. An identically zero sequence
// yields order 1 with coefficient 0.
Recurrence MinRecurrence(const std::vector<Rational>& terms, int64_t base,
                         int degree_cap, int guard = 4);

// The recurrence read off a monic annihilating polynomial, seeded with the
// first deg(P) terms.
Recurrence FromAnnihilator(const Polynomial& p, const std::vector<Rational>& terms,
                           int64_t base);

// True when rec reproduces terms[i] = T(base_of_terms + i) for all i.
bool Reproduces(const Recurrence& rec, const std::vector<Rational>& terms,
                int64_t base_of_terms);

// Exact T(n). Iterates directly for moderate n and switches to computing
// x^(n - base) modulo the characteristic polynomial for large n.
Rational EvalRecurrence(const Recurrence& rec, int64_t n);

// T(from), ..., T(to).
std::vector<Rational> Unroll(const Recurrence& rec, int64_t from, int64_t to);

// Product of the distinct characteristic polynomials of the blocks. Throws
// AnnihilationError if the product fails to vanish on any block. block_polys
// receives one characteristic polynomial per block, in block order.
Polynomial Annihilator(const std::vector<RationalMatrix>& blocks,
                       std::vector<Polynomial>* block_polys = nullptr);

}  // namespace circperm

#endif  // CIRCPERM_RECURRENCE_H_
