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

#ifndef CIRCPERM_CLASSIFY_H_
#define CIRCPERM_CLASSIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circperm/decompose.h"
#include "circperm/lattice.h"

namespace circperm {

// Boundary degree profile of a legal cover. Bit i of `left` is the in-degree
// of left slot i and bit i of `right` the out-degree of right slot i, where
// slot i is row i / bar_s, offset i % bar_s.
struct Classification {
  uint64_t left = 0;
  uint64_t right = 0;
  int width = 0;

  bool LeftBit(int i) const { return (left >> i) & 1u; }
  bool RightBit(int i) const { return (right >> i) & 1u; }

  friend bool operator==(const Classification&, const Classification&) = default;
};

int ZeroCount(uint64_t bits, int width);

// "(L0 L1 ..., R0 R1 ...)" with slot 0 first.
std::string ToString(const Classification& x);

// A total order on the 2^(2w) classifications. The canonical order sorts by
// the left tuple read as a little-endian integer, then by the right tuple with
// more zeros first and ties broken by reading the right tuple big-endian. It
// is consistent and keeps right tuples with equal zero counts contiguous, so
// the transfer matrix splits into identical diagonal blocks which themselves
// split by zero count. For width 2 it is exactly the order of the
// hand-computed C_n^{0,1,2} example.
class Ordering {
 public:
  static Ordering Canonical(int width);
  // Right tuple major, left tuple minor. Not consistent; used to show that
  // the block checks reject a bad order.
  static Ordering RightMajor(int width);

  int width() const { return width_; }
  uint64_t size() const { return uint64_t{1} << (2 * width_); }
  uint64_t block_size() const { return uint64_t{1} << width_; }

  uint64_t Position(const Classification& x) const;
  Classification At(uint64_t position) const;

  // Rank of a right tuple inside a left block (canonical order only).
  uint32_t RightRank(uint64_t right) const { return right_rank_[right]; }
  uint64_t RightAt(uint32_t rank) const { return right_at_[rank]; }
  bool right_major() const { return right_major_; }

 private:
  int width_ = 0;
  bool right_major_ = false;
  std::vector<uint32_t> right_rank_;
  std::vector<uint64_t> right_at_;
};

// Every classification in the order's sequence.
std::vector<Classification> EnumerateClassifications(const Ordering& order);

// A set of lattice edges with its degree maps.
struct PartialCover {
  const Lattice* lattice = nullptr;
  std::vector<LatticeEdge> edges;
  std::vector<int> in_degree;
  std::vector<int> out_degree;

  explicit PartialCover(const Lattice& l);
  void Add(const LatticeEdge& e);
};

// The classification of `cover`, or nullopt when it is not a legal cover
// with respect to boundary windows of width bar_s.
std::optional<Classification> Classify(const PartialCover& cover, int64_t bar_s);

// Classification of T plus the given New edges, for any T classified as x.
std::optional<Classification> Extend(const Decomposition& d, const Classification& x,
                                     const std::vector<std::size_t>& new_edges);

// True when x plus the given Hook edges is a cycle cover.
bool Completes(const Decomposition& d, const Classification& x,
               const std::vector<std::size_t>& hook_edges);

// New edge indices grouped by the row of their head. A legal extension picks
// exactly one edge from each group.
std::vector<std::vector<std::size_t>> NewEdgesByHead(const Decomposition& d);

}  // namespace circperm

#endif  // CIRCPERM_CLASSIFY_H_
