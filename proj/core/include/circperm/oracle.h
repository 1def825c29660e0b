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

#ifndef CIRCPERM_ORACLE_H_
#define CIRCPERM_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "circperm/matrix.h"
#include "circperm/rational.h"
#include "circperm/spec.h"

namespace circperm {

// Caps for the brute-force oracles and for augmented state spaces.
struct OracleBudget {
  int ryser_max_dim = 24;
  int enum_max_size = 20;
  int enum_max_jumps = 4;
  std::size_t max_states = 200000;
  int max_moment = 3;

  // "ryser=24,enum=20,jumps=4,states=200000,moment=3"; keys may be omitted.
  static OracleBudget Parse(const std::string& text);
  // Defaults overridden by the CIRCPERM_BUDGET environment variable if set.
  static OracleBudget FromEnv();
};

// Exact permanent by Ryser's formula with Gray-code column updates. Uses
// 128-bit accumulation when the entries are small enough to rule out
// overflow and GMP otherwise. Throws SizeCapError above max_dim.
Rational RyserPermanent(const RationalMatrix& m, int max_dim = 24);

struct CoverStats {
  Integer count;
  std::vector<Integer> moment_sums;  // sum over covers of cycles^i, i = 0..i_max
  Integer hamiltonian_count;         // covers that are a single cycle
};

// Backtracking over rows with a used-column mask. Works on the raw jumps,
// since cycle counts are not invariant under shifting. Counts are unweighted:
// jump weights only enter through the permanent. Throws SizeCapError when the
// graph or jump count exceeds the budget.
CoverStats EnumerateStats(const CirculantSpec& spec, int64_t n, int i_max,
                          const OracleBudget& budget = {});

Integer BruteHamiltonian(const CirculantSpec& spec, int64_t n,
                         const OracleBudget& budget = {});

}  // namespace circperm

#endif  // CIRCPERM_ORACLE_H_
