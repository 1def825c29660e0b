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

#ifndef CIRCPERM_LATTICE_H_
#define CIRCPERM_LATTICE_H_

#include <cstdint>
#include <vector>

#include "circperm/matrix.h"
#include "circperm/spec.h"

namespace circperm {

// Weighted adjacency matrix of the circulant at n. Entry (i, j) is the weight
// of the jump t with (j - i) mod size == t(n). Throws CollisionError when two
// jumps coincide at this n or the size is not positive.
RationalMatrix AdjacencyMatrix(const CirculantSpec& spec, int64_t n);

// A vertex of the lattice picture: row u, column v, flat index u*n + v.
struct LatticeVertex {
  int64_t u = 0;
  int64_t v = 0;
  friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
  friend auto operator<=>(const LatticeVertex&, const LatticeVertex&) = default;
};

struct LatticeEdge {
  int64_t tail = 0;  // flat index
  int64_t head = 0;
  std::size_t jump = 0;
  bool in_lattice = false;  // false: a wrap-around edge
};

// The circulant at a concrete n laid out as p rows; rows 0..p-2 have n
// columns and row p-1 has n+s. Every circulant edge is tagged with whether it
// survives in the lattice graph. Constant specs keep edges with j - i equal to
// the jump; linear specs keep edges whose row difference matches the jump's
// n-coefficient modulo p.
class Lattice {
 public:
  Lattice(const CirculantSpec& spec, int64_t n);

  int64_t n() const { return n_; }
  int64_t size() const { return size_; }
  int64_t rows() const { return p_; }
  int64_t RowLength(int64_t u) const { return u == p_ - 1 ? n_ + s_ : n_; }

  LatticeVertex Coord(int64_t flat) const;
  int64_t Flat(LatticeVertex x) const { return x.u * n_ + x.v; }

  const std::vector<LatticeEdge>& edges() const { return edges_; }
  std::vector<LatticeEdge> LatticeEdges() const;
  std::vector<LatticeEdge> HookEdges() const;

  // Weighted adjacency of the lattice graph only.
  RationalMatrix LatticeMatrix(const std::vector<Rational>& weights) const;

 private:
  int64_t n_;
  int64_t p_;
  int64_t s_;
  int64_t size_;
  std::vector<LatticeEdge> edges_;
};

}  // namespace circperm

#endif  // CIRCPERM_LATTICE_H_
