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

#include "circperm/spec.h"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "circperm/errors.h"

namespace circperm {
namespace {

std::string Strip(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  }
  return out;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

int64_t ToInt(const std::string& digits) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
    return v;
  } catch (const std::exception&) {
    throw SyntaxError("integer out of range or malformed: '" + digits + "'");
  }
}

Jump ParseTerm(const std::string& term) {
  static const std::regex kConstant(R"(^([+-]?\d+)$)");
  static const std::regex kLinear(R"(^([+-]?\d*)n(?:([+-])(\d+))?$)");
  std::smatch m;
  if (std::regex_match(term, m, kConstant)) return Jump{0, ToInt(m[1].str())};
  if (std::regex_match(term, m, kLinear)) {
    std::string c = m[1].str();
    int64_t coeff = 1;
    if (c == "-") {
      coeff = -1;
    } else if (!c.empty() && c != "+") {
      coeff = ToInt(c);
    }
    int64_t offset = 0;
    if (m[2].matched) {
      offset = ToInt(m[3].str());
      if (m[2].str() == "-") offset = -offset;
    }
    return Jump{coeff, offset};
  }
  throw SyntaxError("malformed jump term '" + term + "'");
}

std::string RenderJump(const Jump& j) {
  if (j.coeff == 0) return std::to_string(j.offset);
  std::string out = j.coeff == 1 ? "n" : std::to_string(j.coeff) + "n";
  if (j.offset > 0) out += "+" + std::to_string(j.offset);
  if (j.offset < 0) out += std::to_string(j.offset);
  return out;
}

int64_t FloorDiv(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

CirculantSpec CirculantSpec::Constant(std::vector<int64_t> offsets,
                                      std::vector<Rational> weights) {
  std::vector<Jump> jumps;
  jumps.reserve(offsets.size());
  for (int64_t o : offsets) jumps.push_back(Jump{0, o});
  return Linear(1, 0, std::move(jumps), std::move(weights));
}

CirculantSpec CirculantSpec::Linear(int64_t slope, int64_t size_offset,
                                    std::vector<Jump> jumps,
                                    std::vector<Rational> weights) {
  CirculantSpec spec;
  spec.p_ = slope;
  spec.s_ = size_offset;
  spec.jumps_ = std::move(jumps);
  if (weights.empty()) weights.assign(spec.jumps_.size(), Rational(1));
  spec.weights_ = std::move(weights);
  const bool constant_jumps =
      std::all_of(spec.jumps_.begin(), spec.jumps_.end(),
                  [](const Jump& j) { return j.coeff == 0; });
  spec.mode_ = (slope == 1 && size_offset == 0 && constant_jumps)
                   ? SpecMode::kConstant
                   : SpecMode::kLinear;
  spec.Validate();
  return spec;
}

void CirculantSpec::Validate() const {
  if (jumps_.empty()) throw SyntaxError("at least one jump is required");
  if (p_ < 1) throw InconsistencyError("size slope must be positive");
  std::set<Jump> seen;
  for (const Jump& j : jumps_) {
    if (j.coeff < 0 || j.coeff >= p_) {
      throw InconsistencyError("jump " + RenderJump(j) +
                               " has n-coefficient outside [0, " +
                               std::to_string(p_) + ")");
    }
    if (!seen.insert(j).second) {
      throw SyntaxError("duplicate jump " + RenderJump(j));
    }
  }
  if (weights_.size() != jumps_.size()) {
    throw InconsistencyError("expected " + std::to_string(jumps_.size()) +
                             " weights, got " + std::to_string(weights_.size()));
  }
}

bool CirculantSpec::weighted() const {
  return std::any_of(weights_.begin(), weights_.end(),
                     [](const Rational& w) { return w != 1; });
}

int64_t CirculantSpec::BarS() const {
  int64_t m = jumps_.front().offset;
  for (const Jump& j : jumps_) m = std::max(m, j.offset);
  return m;
}

int64_t CirculantSpec::MinOffset() const {
  int64_t m = jumps_.front().offset;
  for (const Jump& j : jumps_) m = std::min(m, j.offset);
  return m;
}

bool CirculantSpec::IsNormalized() const {
  if (mode_ == SpecMode::kConstant) return MinOffset() == 0;
  return p_ >= 2 && s_ >= 0 && s_ < p_ && MinOffset() == s_;
}

bool CirculantSpec::DistinctAt(int64_t n) const {
  const int64_t size = Size(n);
  if (size < 1) return false;
  std::set<int64_t> residues;
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    int64_t r = JumpValue(i, n) % size;
    if (r < 0) r += size;
    if (!residues.insert(r).second) return false;
  }
  return true;
}

void CirculantSpec::CheckDistinctAt(int64_t n) const {
  if (Size(n) < 1) {
    throw CollisionError(Name() + " has no vertices at n=" + std::to_string(n));
  }
  if (!DistinctAt(n)) {
    throw CollisionError("two jumps of " + Name() + " coincide modulo " +
                         std::to_string(Size(n)) + " at n=" + std::to_string(n));
  }
}

std::string CirculantSpec::JumpsText() const {
  std::string out;
  for (std::size_t i = 0; i < jumps_.size(); ++i) {
    if (i) out += ",";
    out += RenderJump(jumps_[i]);
  }
  return out;
}

std::string CirculantSpec::SizeText() const {
  if (mode_ == SpecMode::kConstant) return "";
  std::string out = std::to_string(p_) + "n";
  if (s_ > 0) out += "+" + std::to_string(s_);
  if (s_ < 0) out += std::to_string(s_);
  return out;
}

std::string CirculantSpec::WeightsText() const {
  if (!weighted()) return "";
  std::string out;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ",";
    out += ToString(weights_[i]);
  }
  return out;
}

std::string CirculantSpec::Name() const {
  std::string size = mode_ == SpecMode::kConstant ? "n" : SizeText();
  return "C_{" + size + "}^{" + JumpsText() + "}";
}

CirculantSpec CirculantSpec::WithWeights(std::vector<Rational> weights) const {
  CirculantSpec out = Linear(p_, s_, jumps_, std::move(weights));
  out.provenance_ = provenance_;
  return out;
}

CirculantSpec CirculantSpec::WithProvenance(Provenance provenance) const {
  CirculantSpec out = *this;
  out.provenance_ = provenance;
  return out;
}

CirculantSpec ParseSpec(std::string_view jumps, std::optional<std::string_view> size,
                        std::optional<std::string_view> weights) {
  const std::string text = Strip(jumps);
  if (text.empty()) throw SyntaxError("empty jump list");
  std::vector<Jump> parsed;
  for (const std::string& term : SplitCommas(text)) {
    if (term.empty()) throw SyntaxError("empty jump term in '" + text + "'");
    parsed.push_back(ParseTerm(term));
  }

  int64_t p = 1;
  int64_t s = 0;
  if (size.has_value() && !Strip(*size).empty()) {
    static const std::regex kSize(R"(^(\d*)n(?:([+-])(\d+))?$)");
    const std::string law = Strip(*size);
    std::smatch m;
    if (!std::regex_match(law, m, kSize)) {
      throw SyntaxError("malformed size law '" + law + "'");
    }
    p = m[1].str().empty() ? 1 : ToInt(m[1].str());
    if (m[2].matched) {
      s = ToInt(m[3].str());
      if (m[2].str() == "-") s = -s;
    }
    if (p < 1) throw InconsistencyError("size slope must be positive");
  } else {
    for (const Jump& j : parsed) {
      if (j.coeff != 0) {
        throw InconsistencyError("jump " + RenderJump(j) +
                                 " depends on n but no size law was given");
      }
    }
  }

  std::vector<Rational> w;
  if (weights.has_value() && !Strip(*weights).empty()) {
    for (const std::string& t : SplitCommas(Strip(*weights))) {
      w.push_back(ParseRational(t));
    }
    if (w.size() != parsed.size()) {
      throw InconsistencyError("expected " + std::to_string(parsed.size()) +
                               " weights, got " + std::to_string(w.size()));
    }
  }
  return CirculantSpec::Linear(p, s, std::move(parsed), std::move(w));
}

CirculantSpec Normalize(const CirculantSpec& spec) {
  Provenance prov = spec.provenance();
  const int64_t p = spec.slope();

  // Reindex so that 0 <= s < p: C_{pn+s} = C_{p(n+a)+b} with s = a p + b,
  // and each jump p_i n + s_i becomes p_i (n+a) + (s_i - a p_i).
  const int64_t a = FloorDiv(spec.size_offset(), p);
  const int64_t b = spec.size_offset() - a * p;
  std::vector<Jump> jumps = spec.jumps();
  for (Jump& j : jumps) j.offset -= a * j.coeff;

  // Cyclic row shift: bring the smallest offset to b.
  int64_t min_offset = jumps.front().offset;
  for (const Jump& j : jumps) min_offset = std::min(min_offset, j.offset);
  const int64_t shift = b - min_offset;
  for (Jump& j : jumps) j.offset += shift;

  std::vector<std::size_t> order(jumps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return jumps[x] < jumps[y]; });
  std::vector<Jump> sorted;
  std::vector<Rational> weights;
  for (std::size_t i : order) {
    sorted.push_back(jumps[i]);
    weights.push_back(spec.weights()[i]);
  }

  prov.normalized = true;
  prov.index_shift += a;
  prov.offset_shift += shift;
  return CirculantSpec::Linear(p, b, std::move(sorted), std::move(weights))
      .WithProvenance(prov);
}

}  // namespace circperm
