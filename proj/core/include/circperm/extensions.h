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

#ifndef CIRCPERM_EXTENSIONS_H_
#define CIRCPERM_EXTENSIONS_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "circperm/oracle.h"
#include "circperm/pipeline.h"
#include "circperm/recurrence.h"
#include "circperm/spec.h"

namespace circperm {

// Boundary state of a partial cover of the lattice at n, used for cycle
// statistics. With a = max(s+, s-) the window has 2a positions: position i < a
// is vertex i and position a + j is vertex n - a + j. Every vertex outside the
// window has full degree, so the partial cover is a set of closed cycles plus
// open paths whose endpoints sit in the window. A vertex with no edges is a
// path of length zero from itself to itself.
struct PairingState {
  std::vector<uint8_t> in;
  std::vector<uint8_t> out;
  // end_of[i] is the position where the path starting at i ends; -1 when
  // in[i] == 1.
  std::vector<int> end_of;
  // Hamiltonian mode only: every vertex lies on one cycle already. Such a
  // state admits no extension and completes with no Hook edges.
  bool closed = false;

  // Every position starts as its own empty path.
  explicit PairingState(int positions = 0)
      : in(positions, 0), out(positions, 0), end_of(positions) {
    for (int i = 0; i < positions; ++i) end_of[i] = i;
  }

  int size() const { return static_cast<int>(in.size()); }
  // Start position of the path ending at `end`, or -1.
  int StartOf(int end) const;
  // Adds u -> v. Returns 1 if the edge closes a cycle, 0 if it joins two
  // paths, and -1 if u already has an out-edge or v an in-edge.
  int AddEdge(int u, int v);
  std::string ToString() const;

  friend bool operator==(const PairingState&, const PairingState&) = default;
  friend auto operator<=>(const PairingState&, const PairingState&) = default;
};

// Maps the moment vector (m_0, ..., m_k) of a set of covers to the one after
// every cover gains `delta` cycles: m'_t = sum_j C(t, j) delta^(t - j) m_j.
std::vector<Integer> ShiftMoments(const std::vector<Integer>& m, int delta);

enum class TourMode { kMoments, kHamiltonian };

// Transfer operator over pairing states for a constant spec with raw jumps.
struct AugmentedSystem {
  struct Transition {
    std::size_t to = 0;
    int cycles = 0;
  };

  TourMode mode = TourMode::kMoments;
  int moment = 0;        // TC_moment is produced in moments mode
  int half = 0;          // a = max(s+, s-)
  int64_t n0 = 0;
  int64_t s_plus = 0;
  int64_t s_minus = 0;
  std::vector<PairingState> states;
  std::vector<std::vector<Transition>> transitions;
  // Moment vectors (length moment + 1) of the covers of L_{n0} in each state.
  std::vector<std::vector<Integer>> initial;
  // Cycles added by each Hook subset that completes a state.
  std::vector<std::vector<int>> completions;
  // Hamiltonian mode: covers that closed a Hamiltonian cycle inside the
  // lattice itself, counted over the initial covers and the transitions.
  std::size_t lattice_cycles = 0;
};

// Builds the reachable state graph by BFS from the covers of L_{n0}, where
// n0 = max(1, 2a, s+ + s- + 1) keeps the window halves apart and the jumps
// distinct. Throws InconsistencyError for linear specs and StateBudgetError
// when the states exceed the budget.
AugmentedSystem BuildAugmented(const CirculantSpec& raw, TourMode mode, int moment,
                               const OracleBudget& budget = {});

// TC_moment(n) (or HC(n)) for n in [from, to], from >= n0.
std::vector<Integer> AugmentedTerms(const AugmentedSystem& sys, int64_t from, int64_t to,
                                    int threads = 1);

struct ExtensionResult {
  AugmentedSystem system;
  Recurrence recurrence;
  int64_t terms_base = 0;
  std::vector<Rational> terms;
};

// Fits the minimal recurrence to the augmented terms. The state count times
// (moment + 1) bounds the order; a few later bases are also tried and the
// smallest order wins, earliest base first.
ExtensionResult MomentsDerive(const CirculantSpec& raw, int moment,
                              const OracleBudget& budget = {}, int threads = 1);
ExtensionResult HamiltonianDerive(const CirculantSpec& raw, const OracleBudget& budget = {},
                                  int threads = 1);

std::vector<Integer> MomentsTerms(const CirculantSpec& raw, int moment, int64_t from,
                                  int64_t to, const OracleBudget& budget = {});

// TC_1(n) / TC_0(n) exactly, via the two derived recurrences.
Rational MomentsRatio(const CirculantSpec& raw, int64_t n, const OracleBudget& budget = {});

// The counting pipeline run with the jump weights.
DeriveResult WeightedDerive(const CirculantSpec& spec, const DeriveOptions& options = {});

}  // namespace circperm

#endif  // CIRCPERM_EXTENSIONS_H_
