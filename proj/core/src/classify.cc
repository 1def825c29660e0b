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

#include "circperm/classify.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "circperm/errors.h"

namespace circperm {
namespace {

uint64_t ReverseBits(uint64_t bits, int width) {
  uint64_t out = 0;
  for (int i = 0; i < width; ++i) {
    if ((bits >> i) & 1u) out |= uint64_t{1} << (width - 1 - i);
  }
  return out;
}

uint64_t AllOnes(int width) { return (uint64_t{1} << width) - 1; }

}  // namespace

int ZeroCount(uint64_t bits, int width) {
  return width - std::popcount(bits & AllOnes(width));
}

std::string ToString(const Classification& x) {
  std::string out = "(";
  for (int i = 0; i < x.width; ++i) out += x.LeftBit(i) ? '1' : '0';
  out += ",";
  for (int i = 0; i < x.width; ++i) out += x.RightBit(i) ? '1' : '0';
  return out + ")";
}

Ordering Ordering::Canonical(int width) {
  if (width < 0 || width > 24) {
    throw StateBudgetError("boundary width " + std::to_string(width) +
                           " is too large to enumerate");
  }
  Ordering o;
  o.width_ = width;
  const uint64_t m = uint64_t{1} << width;
  o.right_at_.resize(m);
  std::iota(o.right_at_.begin(), o.right_at_.end(), uint64_t{0});
  std::sort(o.right_at_.begin(), o.right_at_.end(), [width](uint64_t a, uint64_t b) {
    const int za = ZeroCount(a, width);
    const int zb = ZeroCount(b, width);
    if (za != zb) return za > zb;
    return ReverseBits(a, width) < ReverseBits(b, width);
  });
  o.right_rank_.resize(m);
  for (uint64_t r = 0; r < m; ++r) o.right_rank_[o.right_at_[r]] = static_cast<uint32_t>(r);
  return o;
}

Ordering Ordering::RightMajor(int width) {
  Ordering o = Canonical(width);
  o.right_major_ = true;
  return o;
}

uint64_t Ordering::Position(const Classification& x) const {
  if (right_major_) return (x.right << width_) | x.left;
  return (x.left << width_) | right_rank_[x.right];
}

Classification Ordering::At(uint64_t position) const {
  const uint64_t hi = position >> width_;
  const uint64_t lo = position & AllOnes(width_);
  if (right_major_) return Classification{lo, hi, width_};
  return Classification{hi, right_at_[lo], width_};
}

std::vector<Classification> EnumerateClassifications(const Ordering& order) {
  std::vector<Classification> out;
  out.reserve(order.size());
  for (uint64_t pos = 0; pos < order.size(); ++pos) out.push_back(order.At(pos));
  return out;
}

PartialCover::PartialCover(const Lattice& l)
    : lattice(&l), in_degree(l.size(), 0), out_degree(l.size(), 0) {}

void PartialCover::Add(const LatticeEdge& e) {
  edges.push_back(e);
  ++out_degree[e.tail];
  ++in_degree[e.head];
}

std::optional<Classification> Classify(const PartialCover& cover, int64_t bar_s) {
  const Lattice& l = *cover.lattice;
  for (int64_t f = 0; f < l.size(); ++f) {
    const LatticeVertex x = l.Coord(f);
    const int64_t len = l.RowLength(x.u);
    const bool in_left = x.v < bar_s;
    const bool in_right = x.v >= len - bar_s;
    if (cover.in_degree[f] > 1 || cover.out_degree[f] > 1) return std::nullopt;
    if (!in_left && cover.in_degree[f] != 1) return std::nullopt;
    if (!in_right && cover.out_degree[f] != 1) return std::nullopt;
  }
  Classification c;
  c.width = static_cast<int>(l.rows() * bar_s);
  for (int64_t u = 0; u < l.rows(); ++u) {
    const int64_t len = l.RowLength(u);
    for (int64_t j = 0; j < bar_s; ++j) {
      const int slot = static_cast<int>(u * bar_s + j);
      if (cover.in_degree[l.Flat({u, j})]) c.left |= uint64_t{1} << slot;
      if (cover.out_degree[l.Flat({u, len - 1 - j})]) c.right |= uint64_t{1} << slot;
    }
  }
  return c;
}

std::optional<Classification> Extend(const Decomposition& d, const Classification& x,
                                     const std::vector<std::size_t>& new_edges) {
  const int64_t bar_s = d.boundaries.bar_s;
  const int64_t p = d.rows;
  std::vector<char> right_out(d.width);
  for (int i = 0; i < d.width; ++i) right_out[i] = x.RightBit(i);
  std::vector<char> nv_in(p, 0), nv_out(p, 0);

  for (std::size_t idx : new_edges) {
    const SymbolicEdge& e = d.new_edges[idx];
    if (e.tail.anchor == Anchor::kRight) {
      char& bit = right_out[d.SlotOf(e.tail)];
      if (bit) return std::nullopt;
      bit = 1;
    } else {
      char& bit = nv_out[e.tail.row];
      if (bit) return std::nullopt;
      bit = 1;
    }
    char& in = nv_in[e.head.row];
    if (in) return std::nullopt;
    in = 1;
  }

  Classification out{x.left, 0, x.width};
  for (int64_t u = 0; u < p; ++u) {
    if (!nv_in[u]) return std::nullopt;
    // Row window after the step: the new vertex, then the old slots shifted
    // one place inward; the innermost old slot leaves the window.
    const char exiting = bar_s == 0 ? nv_out[u] : right_out[u * bar_s + bar_s - 1];
    if (!exiting) return std::nullopt;
    for (int64_t j = 0; j < bar_s; ++j) {
      const char bit = j == 0 ? nv_out[u] : right_out[u * bar_s + j - 1];
      if (bit) out.right |= uint64_t{1} << (u * bar_s + j);
    }
  }
  return out;
}

bool Completes(const Decomposition& d, const Classification& x,
               const std::vector<std::size_t>& hook_edges) {
  uint64_t left = x.left;
  uint64_t right = x.right;
  for (std::size_t idx : hook_edges) {
    const SymbolicEdge& e = d.hook[idx];
    const uint64_t r = uint64_t{1} << d.SlotOf(e.tail);
    const uint64_t l = uint64_t{1} << d.SlotOf(e.head);
    if ((right & r) || (left & l)) return false;
    right |= r;
    left |= l;
  }
  const uint64_t full = AllOnes(d.width);
  return left == full && right == full;
}

std::vector<std::vector<std::size_t>> NewEdgesByHead(const Decomposition& d) {
  std::vector<std::vector<std::size_t>> out(d.rows);
  for (std::size_t i = 0; i < d.new_edges.size(); ++i) {
    out[d.new_edges[i].head.row].push_back(i);
  }
  return out;
}

}  // namespace circperm
