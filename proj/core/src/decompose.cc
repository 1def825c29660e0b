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

#include "circperm/decompose.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "circperm/errors.h"

namespace circperm {
namespace {

using CoordEdge = std::tuple<LatticeVertex, LatticeVertex, std::size_t>;

SymbolicVertex Symbolize(const LatticeVertex& x, const Lattice& lattice,
                         int64_t bar_s) {
  const int64_t len = lattice.RowLength(x.u);
  if (x.v < bar_s) return SymbolicVertex{Anchor::kLeft, x.u, x.v};
  if (x.v >= len - bar_s) return SymbolicVertex{Anchor::kRight, x.u, len - 1 - x.v};
  throw DecompositionError("vertex (" + std::to_string(x.u) + "," +
                           std::to_string(x.v) + ") at n=" +
                           std::to_string(lattice.n()) +
                           " lies outside both boundary windows");
}

std::set<CoordEdge> LatticeEdgeCoords(const Lattice& lattice) {
  std::set<CoordEdge> out;
  for (const auto& e : lattice.LatticeEdges()) {
    out.emplace(lattice.Coord(e.tail), lattice.Coord(e.head), e.jump);
  }
  return out;
}

std::vector<SymbolicEdge> HookAt(const CirculantSpec& spec, int64_t n,
                                 int64_t bar_s) {
  const Lattice lattice(spec, n);
  std::vector<SymbolicEdge> out;
  for (const auto& e : lattice.HookEdges()) {
    SymbolicEdge s{Symbolize(lattice.Coord(e.tail), lattice, bar_s),
                   Symbolize(lattice.Coord(e.head), lattice, bar_s), e.jump};
    if (s.tail.anchor != Anchor::kRight || s.head.anchor != Anchor::kLeft) {
      throw DecompositionError("wrap-around edge " + ToString(s) +
                               " does not run from the right boundary to the left");
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SymbolicEdge> NewAt(const CirculantSpec& spec, int64_t n,
                                int64_t bar_s) {
  const Lattice small(spec, n);
  const Lattice big(spec, n + 1);
  const std::set<CoordEdge> old_edges = LatticeEdgeCoords(small);
  const std::set<CoordEdge> new_edges = LatticeEdgeCoords(big);
  for (const auto& e : old_edges) {
    if (!new_edges.count(e)) {
      throw DecompositionError("a lattice edge at n=" + std::to_string(n) +
                               " disappears at n+1");
    }
  }
  auto symbolize = [&](const LatticeVertex& x) {
    if (x.v == small.RowLength(x.u)) return SymbolicVertex{Anchor::kNew, x.u, 0};
    return Symbolize(x, small, bar_s);
  };
  std::vector<SymbolicEdge> out;
  for (const auto& [tail, head, jump] : new_edges) {
    if (old_edges.count({tail, head, jump})) continue;
    SymbolicEdge s{symbolize(tail), symbolize(head), jump};
    if (s.head.anchor != Anchor::kNew) {
      throw DecompositionError("new lattice edge " + ToString(s) +
                               " does not end at a new vertex");
    }
    if (s.tail.anchor == Anchor::kLeft) {
      throw DecompositionError("new lattice edge " + ToString(s) +
                               " starts on the left boundary");
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Decomposition Decompose(const CirculantSpec& spec) {
  if (!spec.IsNormalized()) {
    throw InconsistencyError("decomposition needs a normalized spec, got " +
                             spec.Name());
  }
  Decomposition d;
  d.rows = spec.slope();
  d.boundaries.bar_s = spec.BarS();
  const int64_t bar_s = d.boundaries.bar_s;
  d.width = d.rows * bar_s;
  d.n0 = 2 * bar_s;

  for (int64_t u = 0; u < d.rows; ++u) {
    for (int64_t j = 0; j < bar_s; ++j) {
      d.boundaries.left.push_back(SymbolicVertex{Anchor::kLeft, u, j});
      d.boundaries.right.push_back(SymbolicVertex{Anchor::kRight, u, j});
    }
    d.boundaries.new_vertices.push_back(SymbolicVertex{Anchor::kNew, u, 0});
  }

  const int64_t m = std::max<int64_t>(d.n0, 1);
  d.hook = HookAt(spec, m, bar_s);
  d.new_edges = NewAt(spec, m, bar_s);
  for (int64_t k = 1; k <= 2; ++k) {
    if (HookAt(spec, m + k, bar_s) != d.hook) {
      throw DecompositionError("wrap-around edges change between n=" +
                               std::to_string(m) + " and n=" + std::to_string(m + k));
    }
    if (NewAt(spec, m + k, bar_s) != d.new_edges) {
      throw DecompositionError("new lattice edges change between n=" +
                               std::to_string(m) + " and n=" + std::to_string(m + k));
    }
  }
  return d;
}

LatticeVertex Evaluate(const SymbolicVertex& v, const Lattice& lattice) {
  const int64_t len = lattice.RowLength(v.row);
  switch (v.anchor) {
    case Anchor::kLeft:
      return LatticeVertex{v.row, v.offset};
    case Anchor::kRight:
      return LatticeVertex{v.row, len - 1 - v.offset};
    case Anchor::kNew:
      return LatticeVertex{v.row, len};
  }
  return {};
}

std::string ToString(const SymbolicVertex& v) {
  switch (v.anchor) {
    case Anchor::kLeft:
      return "L(" + std::to_string(v.row) + "," + std::to_string(v.offset) + ")";
    case Anchor::kRight:
      return "R(" + std::to_string(v.row) + "," + std::to_string(v.offset) + ")";
    case Anchor::kNew:
      return "NV(" + std::to_string(v.row) + ")";
  }
  return "?";
}

std::string ToString(const SymbolicEdge& e) {
  return ToString(e.tail) + "->" + ToString(e.head) + "#" + std::to_string(e.jump);
}

}  // namespace circperm
