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

#ifndef CIRCPERM_SPEC_H_
#define CIRCPERM_SPEC_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circperm/rational.h"

namespace circperm {

enum class SpecMode { kConstant, kLinear };

// One jump `coeff * n + offset`. Constant jumps have coeff == 0.
struct Jump {
  int64_t coeff = 0;
  int64_t offset = 0;

  friend bool operator==(const Jump&, const Jump&) = default;
  friend auto operator<=>(const Jump&, const Jump&) = default;
};

// How a normalized spec relates to its input.
struct Provenance {
  bool normalized = false;
  // n_normalized = n_input + index_shift.
  int64_t index_shift = 0;
  // Every jump offset was moved by this amount (a cyclic row shift).
  int64_t offset_shift = 0;
};

// A circulant digraph family C_{p n + s}^{p_1 n + s_1, ..., p_k n + s_k}.
//
// The constant family is p = 1, s = 0 with every p_i = 0. Instances are
// immutable; all transformations return new values.
class CirculantSpec {
 public:
  static CirculantSpec Constant(std::vector<int64_t> offsets,
                                std::vector<Rational> weights = {});
  static CirculantSpec Linear(int64_t slope, int64_t size_offset,
                              std::vector<Jump> jumps,
                              std::vector<Rational> weights = {});

  SpecMode mode() const { return mode_; }
  bool is_constant() const { return mode_ == SpecMode::kConstant; }
  int64_t slope() const { return p_; }
  int64_t size_offset() const { return s_; }
  const std::vector<Jump>& jumps() const { return jumps_; }
  const std::vector<Rational>& weights() const { return weights_; }
  std::size_t num_jumps() const { return jumps_.size(); }
  const Provenance& provenance() const { return provenance_; }

  // True when some weight differs from 1.
  bool weighted() const;

  int64_t Size(int64_t n) const { return p_ * n + s_; }
  int64_t JumpValue(std::size_t i, int64_t n) const {
    return jumps_[i].coeff * n + jumps_[i].offset;
  }

  // Largest jump offset. This is the boundary width once the jumps are
  // normalized.
  int64_t BarS() const;
  int64_t MinOffset() const;
  bool IsNormalized() const;

  // Throws CollisionError when two jumps coincide modulo Size(n), or when
  // Size(n) < 1.
  void CheckDistinctAt(int64_t n) const;
  bool DistinctAt(int64_t n) const;

  // Re-parseable renderings of the jump list, size law and weights.
  std::string JumpsText() const;
  std::string SizeText() const;
  std::string WeightsText() const;
  std::string Name() const;

  CirculantSpec WithWeights(std::vector<Rational> weights) const;
  CirculantSpec WithProvenance(Provenance provenance) const;

  friend bool operator==(const CirculantSpec& a, const CirculantSpec& b) {
    return a.p_ == b.p_ && a.s_ == b.s_ && a.jumps_ == b.jumps_ &&
           a.weights_ == b.weights_;
  }

 private:
  CirculantSpec() = default;
  void Validate() const;

  SpecMode mode_ = SpecMode::kConstant;
  int64_t p_ = 1;
  int64_t s_ = 0;
  std::vector<Jump> jumps_;
  std::vector<Rational> weights_;
  Provenance provenance_;
};

// Parses the jump grammar
//   jumps := term ("," term)*
//   term  := INT | [INT] "n" [("+"|"-") UINT]
//   size  := UINT "n" [("+"|"-") UINT]
//   weights := rational ("," rational)*      rational := INT ["/" UINT]
// A size law is required when any jump mentions n.
CirculantSpec ParseSpec(std::string_view jumps,
                        std::optional<std::string_view> size = std::nullopt,
                        std::optional<std::string_view> weights = std::nullopt);

// Moves a spec into the form the transfer construction analyzes without
// changing its permanent: constant jumps are shifted so the smallest is 0;
// linear specs are reindexed so 0 <= s < p and then shifted so every
// s_i >= s with min s_i = s. Jumps come back sorted, weights follow their
// jumps. Cycle-count moments are not shift-invariant, so callers computing
// them must keep the raw spec.
CirculantSpec Normalize(const CirculantSpec& spec);

}  // namespace circperm

#endif  // CIRCPERM_SPEC_H_
