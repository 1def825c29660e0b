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

#ifndef CIRCPERM_PIPELINE_H_
#define CIRCPERM_PIPELINE_H_

#include <cstdint>
#include <vector>

#include "circperm/decompose.h"
#include "circperm/oracle.h"
#include "circperm/polynomial.h"
#include "circperm/recurrence.h"
#include "circperm/spec.h"
#include "circperm/transfer.h"

namespace circperm {

struct DeriveOptions {
  OracleBudget budget;
  int threads = 1;
  // Extra terms past 2 * deg(P) used to fit and confirm the recurrence.
  int guard = 8;
  // Largest classification key, in bits (twice the boundary width).
  int max_key_bits = 20;
};

struct DeriveResult {
  CirculantSpec input = CirculantSpec::Constant({0});
  CirculantSpec normalized = CirculantSpec::Constant({0});
  Decomposition decomposition;
  TransferSystem system;
  Polynomial annihilator;
  std::vector<Polynomial> block_polys;
  // Indexed by the caller's n. Its base may sit below n0 when the Ryser
  // oracle confirms that the recurrence also runs backwards there.
  Recurrence recurrence;
  // T(terms_base), T(terms_base + 1), ... in the caller's n.
  int64_t terms_base = 0;
  std::vector<Rational> terms;
  // n0 of the transfer system, in the caller's n.
  int64_t n0 = 0;
  // The n at which beta . Tbar(n0) was compared with Ryser, or -1 if the
  // graph was too large or degenerate there.
  int64_t checked_n0 = -1;
};

// The full derivation: normalize, decompose, build the transfer system, take
// the product of the zero-count block polynomials as annihilator, generate
// enough terms and fit the minimal recurrence. Throws AnnihilationError when
// the annihilator recurrence fails to replay the transfer terms and
// OracleMismatchError when beta . Tbar(n0) disagrees with Ryser.
DeriveResult Derive(const CirculantSpec& spec, const DeriveOptions& options = {});

// T(n) for the caller's n from a derived result: transfer terms when cached,
// the recurrence otherwise.
Rational TermAt(const DeriveResult& result, int64_t n);

}  // namespace circperm

#endif  // CIRCPERM_PIPELINE_H_
