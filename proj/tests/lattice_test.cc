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

#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "circperm/decompose.h"
#include "circperm/errors.h"
#include "circperm/lattice.h"
#include "circperm/spec.h"

namespace circperm {
namespace {

using CoordEdge = std::tuple<LatticeVertex, LatticeVertex, std::size_t>;

std::multiset<CoordEdge> Coords(const Lattice& l, const std::vector<LatticeEdge>& edges) {
  std::multiset<CoordEdge> out;
  for (const auto& e : edges) out.emplace(l.Coord(e.tail), l.Coord(e.head), e.jump);
  return out;
}

// Every edge i -> i + jump mod size, in lattice coordinates.
std::multiset<CoordEdge> CirculantEdges(const CirculantSpec& spec, int64_t n) {
  const Lattice l(spec, n);
  std::multiset<CoordEdge> out;
  const int64_t size = spec.Size(n);
  for (int64_t i = 0; i < size; ++i) {
    for (std::size_t t = 0; t < spec.num_jumps(); ++t) {
      const int64_t j = ((i + spec.JumpValue(t, n)) % size + size) % size;
      out.emplace(l.Coord(i), l.Coord(j), t);
    }
  }
  return out;
}

std::multiset<CoordEdge> Evaluated(const std::vector<SymbolicEdge>& edges, const Lattice& l) {
  std::multiset<CoordEdge> out;
  for (const auto& e : edges) out.emplace(Evaluate(e.tail, l), Evaluate(e.head, l), e.jump);
  return out;
}

SymbolicVertex L(int64_t row, int64_t offset) { return {Anchor::kLeft, row, offset}; }
SymbolicVertex R(int64_t row, int64_t offset) { return {Anchor::kRight, row, offset}; }
SymbolicVertex NV(int64_t row) { return {Anchor::kNew, row, 0}; }

TEST(Lattice, ConstantEdgesSplitAtTheBoundary) {
  const Lattice l(ParseSpec("0,1,2"), 5);
  EXPECT_EQ(l.size(), 5);
  EXPECT_EQ(l.edges().size(), 15u);
  EXPECT_EQ(l.LatticeEdges().size(), 12u);
  EXPECT_EQ(l.HookEdges().size(), 3u);
  for (const auto& e : l.LatticeEdges()) EXPECT_GT(e.head, e.tail - 1);
}

TEST(Lattice, LinearCoordinates) {
  const Lattice l(ParseSpec("2,n+1,2n+2", "3n+1"), 4);
  EXPECT_EQ(l.size(), 13);
  EXPECT_EQ(l.rows(), 3);
  EXPECT_EQ(l.RowLength(0), 4);
  EXPECT_EQ(l.RowLength(2), 5);
  EXPECT_EQ(l.Coord(12), (LatticeVertex{2, 4}));
  EXPECT_EQ(l.Coord(5), (LatticeVertex{1, 1}));
  EXPECT_EQ(l.Flat({2, 4}), 12);
}

TEST(Lattice, MatrixCarriesWeights) {
  const CirculantSpec spec = ParseSpec("0,1", std::nullopt, "3,2");
  const RationalMatrix m = Lattice(spec, 4).LatticeMatrix(spec.weights());
  EXPECT_EQ(m(0, 0), 3);
  EXPECT_EQ(m(2, 3), 2);
  EXPECT_EQ(m(3, 0), 0);
}

TEST(Decompose, WorkedExample012) {
  const Decomposition d = Decompose(ParseSpec("0,1,2"));
  EXPECT_EQ(d.n0, 4);
  EXPECT_EQ(d.width, 2);
  EXPECT_EQ(d.boundaries.left, (std::vector<SymbolicVertex>{L(0, 0), L(0, 1)}));
  EXPECT_EQ(d.boundaries.right, (std::vector<SymbolicVertex>{R(0, 0), R(0, 1)}));
  const std::vector<SymbolicEdge> hook = {
      {R(0, 0), L(0, 0), 1}, {R(0, 0), L(0, 1), 2}, {R(0, 1), L(0, 0), 2}};
  EXPECT_EQ(d.hook, hook);
  const std::vector<SymbolicEdge> added = {
      {R(0, 0), NV(0), 1}, {R(0, 1), NV(0), 2}, {NV(0), NV(0), 0}};
  EXPECT_EQ(d.new_edges, added);
  EXPECT_EQ(ToString(hook[0]), "R(0,0)->L(0,0)#1");
}

TEST(Decompose, SingleLoop) {
  const Decomposition d = Decompose(ParseSpec("0"));
  EXPECT_EQ(d.width, 0);
  EXPECT_TRUE(d.hook.empty());
  ASSERT_EQ(d.new_edges.size(), 1u);
  EXPECT_EQ(d.new_edges[0], (SymbolicEdge{NV(0), NV(0), 0}));
}

TEST(Decompose, NeedsNormalizedSpec) {
  EXPECT_THROW(Decompose(ParseSpec("-1,0,1")), InconsistencyError);
  EXPECT_THROW(Decompose(ParseSpec("0,n,2n-1", "3n")), InconsistencyError);
}

class DecomposeProperty : public ::testing::TestWithParam<std::pair<const char*, const char*>> {};

// E_C(n) = E_L(n) + Hook(n), and E_L(n+1) = E_L(n) + New(n), as multisets.
TEST_P(DecomposeProperty, EdgeSetsSplitForAllLargeN) {
  const auto [jumps, size] = GetParam();
  const CirculantSpec spec = Normalize(ParseSpec(jumps, *size ? std::optional<std::string_view>(size)
                                                              : std::nullopt));
  const Decomposition d = Decompose(spec);
  for (int64_t n = std::max<int64_t>(d.n0, 1); n <= d.n0 + 8; ++n) {
    const Lattice l(spec, n);
    const Lattice next(spec, n + 1);
    std::multiset<CoordEdge> lattice = Coords(l, l.LatticeEdges());
    std::multiset<CoordEdge> hook = Evaluated(d.hook, l);
    std::multiset<CoordEdge> sum = lattice;
    sum.insert(hook.begin(), hook.end());
    EXPECT_EQ(sum, CirculantEdges(spec, n)) << spec.Name() << " n=" << n;

    std::multiset<CoordEdge> grown = lattice;
    const std::multiset<CoordEdge> added = Evaluated(d.new_edges, l);
    grown.insert(added.begin(), added.end());
    EXPECT_EQ(grown, Coords(next, next.LatticeEdges())) << spec.Name() << " n=" << n;
  }
}

TEST_P(DecomposeProperty, HooksRunFromRightToLeft) {
  const auto [jumps, size] = GetParam();
  const CirculantSpec spec = Normalize(ParseSpec(jumps, *size ? std::optional<std::string_view>(size)
                                                              : std::nullopt));
  const Decomposition d = Decompose(spec);
  for (const auto& e : d.hook) {
    EXPECT_EQ(e.tail.anchor, Anchor::kRight);
    EXPECT_EQ(e.head.anchor, Anchor::kLeft);
    EXPECT_LT(d.SlotOf(e.tail), d.width);
    EXPECT_LT(d.SlotOf(e.head), d.width);
  }
  for (const auto& e : d.new_edges) {
    EXPECT_EQ(e.head.anchor, Anchor::kNew);
    EXPECT_NE(e.tail.anchor, Anchor::kLeft);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Specs, DecomposeProperty,
    ::testing::Values(std::make_pair("0,1,2", ""), std::make_pair("0", ""),
                      std::make_pair("1,2,3", ""), std::make_pair("0,1,3", ""),
                      std::make_pair("0,2,5", ""), std::make_pair("-1,1", ""),
                      std::make_pair("0,n,2n-1", "3n"), std::make_pair("2,n+1,2n+2", "3n+1"),
                      std::make_pair("1,n+2,2n+1", "4n+1"), std::make_pair("0,n+1", "2n")));

}  // namespace
}  // namespace circperm
