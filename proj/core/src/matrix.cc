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

#include "circperm/matrix.h"

#include <sstream>

namespace circperm {

std::vector<std::vector<std::string>> ToStringRows(const RationalMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows[r].reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(ToString(m(r, c)));
  }
  return rows;
}

RationalMatrix BlockDiagonal(const std::vector<RationalMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  RationalMatrix out(n, n);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) out(at + r, at + c) = b(r, c);
    }
    at += b.rows();
  }
  return out;
}

std::string DebugString(const RationalMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << ToString(m(r, c));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace circperm
