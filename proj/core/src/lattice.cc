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

#include "circperm/lattice.h"

#include <algorithm>

#include "circperm/errors.h"

namespace circperm {
namespace {

int64_t Mod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

RationalMatrix AdjacencyMatrix(const CirculantSpec& spec, int64_t n) {
  spec.CheckDistinctAt(n);
  const int64_t size = spec.Size(n);
  RationalMatrix m(size, size);
  for (std::size_t t = 0; t < spec.num_jumps(); ++t) {
    const int64_t jump = Mod(spec.JumpValue(t, n), size);
    for (int64_t i = 0; i < size; ++i) m(i, (i + jump) % size) = spec.weights()[t];
  }
  return m;
}

Lattice::Lattice(const CirculantSpec& spec, int64_t n)
    : n_(n), p_(spec.slope()), s_(spec.size_offset()), size_(spec.Size(n)) {
  if (n < 0 || size_ < 0) {
    throw InconsistencyError("lattice requested at negative size for n=" +
                             std::to_string(n));
  }
  for (int64_t i = 0; i < size_; ++i) {
    const LatticeVertex a = Coord(i);
    for (std::size_t t = 0; t < spec.num_jumps(); ++t) {
      const Jump& jump = spec.jumps()[t];
      const int64_t raw = i + spec.JumpValue(t, n);
      const int64_t j = Mod(raw, size_);
      bool in_lattice;
      if (spec.is_constant()) {
        in_lattice = raw >= 0 && raw < size_;
      } else {
        in_lattice = Mod(Coord(j).u - a.u - jump.coeff, p_) == 0;
      }
      edges_.push_back(LatticeEdge{i, j, t, in_lattice});
    }
  }
}

LatticeVertex Lattice::Coord(int64_t flat) const {
  if (n_ == 0) return LatticeVertex{p_ - 1, flat};
  const int64_t u = std::min(flat / n_, p_ - 1);
  return LatticeVertex{u, flat - u * n_};
}

std::vector<LatticeEdge> Lattice::LatticeEdges() const {
  std::vector<LatticeEdge> out;
  for (const auto& e : edges_) {
    if (e.in_lattice) out.push_back(e);
  }
  return out;
}

std::vector<LatticeEdge> Lattice::HookEdges() const {
  std::vector<LatticeEdge> out;
  for (const auto& e : edges_) {
    if (!e.in_lattice) out.push_back(e);
  }
  return out;
}

RationalMatrix Lattice::LatticeMatrix(const std::vector<Rational>& weights) const {
  RationalMatrix m(size_, size_);
  for (const auto& e : edges_) {
    if (e.in_lattice) m(e.tail, e.head) += weights[e.jump];
  }
  return m;
}

}  // namespace circperm
