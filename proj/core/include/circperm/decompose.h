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

#ifndef CIRCPERM_DECOMPOSE_H_
#define CIRCPERM_DECOMPOSE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "circperm/lattice.h"
#include "circperm/spec.h"

namespace circperm {

// Where a symbolic vertex is measured from. Left vertices sit at column
// `offset` of their row, right vertices at column rowlen-1-offset, and the new
// vertex of a row at column rowlen (it exists only in the next lattice).
enum class Anchor { kLeft, kRight, kNew };

struct SymbolicVertex {
  Anchor anchor = Anchor::kLeft;
  int64_t row = 0;
  int64_t offset = 0;

  friend bool operator==(const SymbolicVertex&, const SymbolicVertex&) = default;
  friend auto operator<=>(const SymbolicVertex&, const SymbolicVertex&) = default;
};

struct SymbolicEdge {
  SymbolicVertex tail;
  SymbolicVertex head;
  std::size_t jump = 0;

  friend bool operator==(const SymbolicEdge&, const SymbolicEdge&) = default;
  friend auto operator<=>(const SymbolicEdge&, const SymbolicEdge&) = default;
};

struct BoundarySets {
  std::vector<SymbolicVertex> left;   // slot order, u * bar_s + j
  std::vector<SymbolicVertex> right;  // slot order, u * bar_s + j
  std::vector<SymbolicVertex> new_vertices;
  int64_t bar_s = 0;
};

struct Decomposition {
  std::vector<SymbolicEdge> hook;
  std::vector<SymbolicEdge> new_edges;
  BoundarySets boundaries;
  int64_t n0 = 0;
  int64_t rows = 1;   // p
  int64_t width = 0;  // p * bar_s, the length of each boundary tuple

  int64_t SlotOf(const SymbolicVertex& v) const {
    return v.row * boundaries.bar_s + v.offset;
  }
};

// Derives Hook and New for a normalized spec by materializing the lattice at
// three consecutive sizes, rewriting every edge relative to the boundaries and
// requiring the three symbolic sets to agree. Throws DecompositionError when
// an edge falls outside the boundary windows or the sets drift with n.
Decomposition Decompose(const CirculantSpec& spec);

// Concrete lattice vertex of `v` in L_n (kNew vertices live in L_{n+1}).
LatticeVertex Evaluate(const SymbolicVertex& v, const Lattice& lattice);

std::string ToString(const SymbolicVertex& v);
std::string ToString(const SymbolicEdge& e);

}  // namespace circperm

#endif  // CIRCPERM_DECOMPOSE_H_
