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

#ifndef CIRCPERM_TESTS_TEST_UTIL_H_
#define CIRCPERM_TESTS_TEST_UTIL_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "circperm/classify.h"
#include "circperm/lattice.h"
#include "circperm/spec.h"

namespace circperm::testing_util {

// All legal partial covers of the lattice: each vertex outside the right
// window picks one lattice out-edge, vertices inside it may pick none, and no
// vertex receives two edges.
inline std::vector<PartialCover> LegalCovers(const Lattice& l, int64_t bar_s) {
  std::vector<std::vector<LatticeEdge>> out_edges(l.size());
  for (const auto& e : l.LatticeEdges()) out_edges[e.tail].push_back(e);
  std::vector<PartialCover> result;
  PartialCover cover(l);
  std::function<void(int64_t)> rec = [&](int64_t f) {
    if (f == l.size()) {
      if (Classify(cover, bar_s)) result.push_back(cover);
      return;
    }
    const LatticeVertex x = l.Coord(f);
    if (x.v >= l.RowLength(x.u) - bar_s) rec(f + 1);
    for (const auto& e : out_edges[f]) {
      if (cover.in_degree[e.head]) continue;
      PartialCover saved = cover;
      cover.Add(e);
      rec(f + 1);
      cover = std::move(saved);
    }
  };
  rec(0);
  return result;
}

inline std::vector<std::vector<std::size_t>> Subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

// Product of the jump weights of a cover's edges.
inline Rational CoverWeight(const CirculantSpec& spec, const PartialCover& cover) {
  Rational w = 1;
  for (const auto& e : cover.edges) w *= spec.weights()[e.jump];
  return w;
}

inline CirculantSpec Spec(const char* jumps, const char* size = "", const char* weights = "") {
  auto opt = [](const char* s) {
    return *s ? std::optional<std::string_view>(s) : std::nullopt;
  };
  return ParseSpec(jumps, opt(size), opt(weights));
}

}  // namespace circperm::testing_util

#endif  // CIRCPERM_TESTS_TEST_UTIL_H_
