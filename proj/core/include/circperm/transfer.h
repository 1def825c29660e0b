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

#ifndef CIRCPERM_TRANSFER_H_
#define CIRCPERM_TRANSFER_H_

#include <cstdint>
#include <vector>

#include "circperm/classify.h"
#include "circperm/decompose.h"
#include "circperm/matrix.h"
#include "circperm/spec.h"

namespace circperm {

// T(n) = beta . Tbar(n) and Tbar(n+1) = A Tbar(n) for n >= n0, where
// A = diag(a_bar, ..., a_bar) under the canonical order. Only a_bar is kept;
// beta and t0 are indexed by canonical position.
struct TransferSystem {
  int width = 0;
  int64_t n0 = 0;
  bool weighted = false;
  Ordering ordering;
  RationalMatrix a_bar;
  std::vector<RationalMatrix> blocks;       // zero-count blocks of a_bar
  std::vector<std::size_t> block_offsets;   // first row of each block
  std::vector<Rational> beta;
  std::vector<Rational> t0;

  // The full 2^(2w) square matrix, for dumps and small checks.
  RationalMatrix FullA() const;
};

// a_bar[r][c] sums the weights of New-edge choices taking a profile whose
// right tuple has rank c to one with rank r. Every left block is checked
// against the first one under `order`; a nonzero entry between different
// blocks or a block that differs raises BlockStructureError.
RationalMatrix BuildAlphaBar(const CirculantSpec& spec, const Decomposition& d,
                             const Ordering& order);

// Splits a_bar along runs of equal right zero count. Throws
// BlockStructureError if an entry connects different zero counts.
std::vector<RationalMatrix> SplitBlocks(const RationalMatrix& a_bar, const Ordering& order,
                                        std::vector<std::size_t>* offsets = nullptr);

// beta_X as the permanent of the bipartite matrix from zero right slots to
// zero left slots through Hook edges.
std::vector<Rational> BuildBeta(const CirculantSpec& spec, const Decomposition& d,
                                const Ordering& order);

// Tbar(n0) from permanents of the graphs G_X built on the lattice at n0.
std::vector<Rational> BuildInitial(const CirculantSpec& spec, const Decomposition& d,
                                   const Ordering& order, int ryser_cap = 24);

TransferSystem BuildTransferSystem(const CirculantSpec& spec, const Decomposition& d,
                                   int ryser_cap = 24);

// T(from), ..., T(to) for n0 <= from. Left blocks are independent and may be
// spread over `threads` workers.
std::vector<Rational> Sequence(const TransferSystem& sys, int64_t from, int64_t to,
                               int threads = 1);

}  // namespace circperm

#endif  // CIRCPERM_TRANSFER_H_
