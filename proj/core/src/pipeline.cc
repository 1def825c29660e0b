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

#include "circperm/pipeline.h"

#include "circperm/errors.h"
#include "circperm/lattice.h"

namespace circperm {
namespace {

// T(base - 1) from the recurrence read backwards, if c_d != 0.
bool StepBack(const Recurrence& rec, const std::vector<Rational>& terms, Rational* out) {
  const int d = rec.order();
  const Rational& last = rec.coeffs[d - 1];
  if (last == 0 || static_cast<int>(terms.size()) < d) return false;
  Rational v = terms[d - 1];
  for (int j = 1; j < d; ++j) v -= rec.coeffs[j - 1] * terms[d - 1 - j];
  *out = v / last;
  return true;
}

}  // namespace

DeriveResult Derive(const CirculantSpec& spec, const DeriveOptions& options) {
  DeriveResult r;
  r.input = spec;
  r.normalized = Normalize(spec);
  const CirculantSpec& norm = r.normalized;
  const int64_t shift = norm.provenance().index_shift;

  r.decomposition = Decompose(norm);
  if (2 * r.decomposition.width > options.max_key_bits) {
    throw StateBudgetError("classification keys need " +
                           std::to_string(2 * r.decomposition.width) + " bits, above the cap of " +
                           std::to_string(options.max_key_bits));
  }
  r.system = BuildTransferSystem(norm, r.decomposition, options.budget.ryser_max_dim);
  r.annihilator = Annihilator(r.system.blocks, &r.block_polys);

  const int degree = r.annihilator.Degree();
  const int64_t n0 = r.system.n0;
  const int guard = std::max(options.guard, 4);
  const int64_t count = 2 * static_cast<int64_t>(degree) + guard;
  std::vector<Rational> terms = Sequence(r.system, n0, n0 + count - 1, options.threads);

  if (!Reproduces(FromAnnihilator(r.annihilator, terms, n0), terms, n0)) {
    throw AnnihilationError("recurrence from " + r.annihilator.ToString() +
                            " does not replay the transfer terms");
  }
  Recurrence rec = MinRecurrence(terms, n0, degree, guard);

  if (n0 >= 1 && norm.DistinctAt(n0) && norm.Size(n0) <= options.budget.ryser_max_dim) {
    const Rational direct =
        RyserPermanent(AdjacencyMatrix(norm, n0), options.budget.ryser_max_dim);
    if (direct != terms.front()) {
      throw OracleMismatchError("beta . Tbar(" + std::to_string(n0) + ") = " +
                                ToString(terms.front()) + " but the permanent is " +
                                ToString(direct));
    }
    r.checked_n0 = n0 - shift;
  }

  // Walk the base down while the recurrence, run backwards, keeps agreeing
  // with the permanent of the actual graph.
  int64_t base = n0;
  for (;;) {
    const int64_t n = base - 1;
    if (n < 1 || !norm.DistinctAt(n) || norm.Size(n) > options.budget.ryser_max_dim) break;
    Rational back;
    if (!StepBack(rec, terms, &back)) break;
    if (RyserPermanent(AdjacencyMatrix(norm, n), options.budget.ryser_max_dim) != back) break;
    terms.insert(terms.begin(), back);
    base = n;
  }
  rec.base = base - shift;
  rec.initials.assign(terms.begin(), terms.begin() + rec.order());

  r.recurrence = std::move(rec);
  r.terms_base = base - shift;
  r.terms = std::move(terms);
  r.n0 = n0 - shift;
  return r;
}

Rational TermAt(const DeriveResult& result, int64_t n) {
  const int64_t k = n - result.terms_base;
  if (k >= 0 && k < static_cast<int64_t>(result.terms.size())) return result.terms[k];
  return EvalRecurrence(result.recurrence, n);
}

}  // namespace circperm
