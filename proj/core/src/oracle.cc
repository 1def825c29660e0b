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

#include "circperm/oracle.h"

#include <bit>
#include <cmath>
#include <cstdlib>

#include "circperm/errors.h"
#include "circperm/lattice.h"

namespace circperm {
namespace {

using Int128 = __int128;

Integer FromInt128(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(u >> 64));
  Integer lo(static_cast<unsigned long>(u & ~uint64_t{0}));
  Integer out = (hi << 64) + lo;
  return neg ? Integer(-out) : out;
}

// Ryser over an integer matrix, 128-bit path.
Integer RyserSmall(const std::vector<std::vector<int64_t>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Int128> row_sum(n, 0);
  std::vector<char> in_set(n, 0);
  Int128 total = 0;
  const uint64_t subsets = uint64_t{1} << n;
  for (uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const int sign_col = in_set[j] ? -1 : 1;
    in_set[j] ^= 1;
    for (int i = 0; i < n; ++i) row_sum[i] += sign_col * a[i][j];
    Int128 prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    // Gray code k has popcount(k ^ (k >> 1)) columns.
    const int size = std::popcount(k ^ (k >> 1));
    total += ((n - size) % 2 == 0) ? prod : -prod;
  }
  return FromInt128(total);
}

Integer RyserBig(const std::vector<std::vector<Integer>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Integer> row_sum(n, 0);
  std::vector<char> in_set(n, 0);
  Integer total = 0;
  Integer prod;
  const uint64_t subsets = uint64_t{1} << n;
  for (uint64_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const bool removing = in_set[j];
    in_set[j] ^= 1;
    for (int i = 0; i < n; ++i) {
      if (removing) {
        row_sum[i] -= a[i][j];
      } else {
        row_sum[i] += a[i][j];
      }
    }
    prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    const int size = std::popcount(k ^ (k >> 1));
    if ((n - size) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

int CountCycles(const std::vector<int>& perm, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t v = i; !seen[v]; v = perm[v]) seen[v] = 1;
  }
  return cycles;
}

}  // namespace

OracleBudget OracleBudget::Parse(const std::string& text) {
  OracleBudget b;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw SyntaxError("budget item '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    long long value;
    try {
      std::size_t used = 0;
      value = std::stoll(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1 || value < 0) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SyntaxError("budget item '" + item + "' has a malformed value");
    }
    if (key == "ryser") {
      b.ryser_max_dim = static_cast<int>(value);
    } else if (key == "enum") {
      b.enum_max_size = static_cast<int>(value);
    } else if (key == "jumps") {
      b.enum_max_jumps = static_cast<int>(value);
    } else if (key == "states") {
      b.max_states = static_cast<std::size_t>(value);
    } else if (key == "moment") {
      b.max_moment = static_cast<int>(value);
    } else {
      throw SyntaxError("unknown budget key '" + key + "'");
    }
  }
  return b;
}

OracleBudget OracleBudget::FromEnv() {
  const char* env = std::getenv("CIRCPERM_BUDGET");
  return env ? Parse(env) : OracleBudget{};
}

Rational RyserPermanent(const RationalMatrix& m, int max_dim) {
  if (!m.square()) throw InconsistencyError("permanent of a non-square matrix");
  const int n = static_cast<int>(m.rows());
  if (n > max_dim) {
    throw SizeCapError("permanent of dimension " + std::to_string(n) +
                       " exceeds the cap of " + std::to_string(max_dim));
  }
  if (n == 0) return Rational(1);

  // Clear denominators row by row.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale = 1;
  double log2_bound = n;
  bool fits_int64 = true;
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    Integer abs_sum = 0;
    for (int j = 0; j < n; ++j) {
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
      abs_sum += abs(a[i][j]);
      if (!a[i][j].fits_slong_p()) fits_int64 = false;
    }
    if (abs_sum == 0) return Rational(0);
    log2_bound += static_cast<double>(mpz_sizeinbase(abs_sum.get_mpz_t(), 2));
  }

  Integer value;
  if (fits_int64 && log2_bound <= 120) {
    std::vector<std::vector<int64_t>> small(n, std::vector<int64_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) small[i][j] = a[i][j].get_si();
    }
    value = RyserSmall(small);
  } else {
    value = RyserBig(a);
  }
  Rational out(value, scale);
  out.canonicalize();
  return out;
}

CoverStats EnumerateStats(const CirculantSpec& spec, int64_t n, int i_max,
                          const OracleBudget& budget) {
  const int64_t size = spec.Size(n);
  if (size > budget.enum_max_size || size > 62) {
    throw SizeCapError("enumeration of size " + std::to_string(size) +
                       " exceeds the cap of " + std::to_string(budget.enum_max_size));
  }
  if (static_cast<int>(spec.num_jumps()) > budget.enum_max_jumps) {
    throw SizeCapError("enumeration with " + std::to_string(spec.num_jumps()) +
                       " jumps exceeds the cap of " +
                       std::to_string(budget.enum_max_jumps));
  }
  const RationalMatrix adj = AdjacencyMatrix(spec, n);
  const int nv = static_cast<int>(size);
  std::vector<std::vector<int>> choices(nv);
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      if (adj(i, j) != 0) choices[i].push_back(j);
    }
  }

  CoverStats stats;
  stats.count = 0;
  stats.hamiltonian_count = 0;
  stats.moment_sums.assign(i_max + 1, Integer(0));
  std::vector<uint64_t> by_cycles(nv + 1, 0);
  std::vector<int> perm(nv, -1);
  std::vector<char> seen(nv);

  // Iterative depth-first search over rows.
  std::vector<std::size_t> next(nv, 0);
  uint64_t used = 0;
  int row = 0;
  while (row >= 0) {
    if (row == nv) {
      ++by_cycles[CountCycles(perm, seen)];
      --row;
      if (row >= 0) used &= ~(uint64_t{1} << perm[row]);
      continue;
    }
    bool advanced = false;
    while (next[row] < choices[row].size()) {
      const int col = choices[row][next[row]++];
      if (used & (uint64_t{1} << col)) continue;
      perm[row] = col;
      used |= uint64_t{1} << col;
      advanced = true;
      break;
    }
    if (advanced) {
      ++row;
      if (row < nv) next[row] = 0;
    } else {
      next[row] = 0;
      --row;
      if (row >= 0) used &= ~(uint64_t{1} << perm[row]);
    }
  }

  for (int c = 0; c <= nv; ++c) {
    if (!by_cycles[c]) continue;
    const Integer covers(static_cast<unsigned long>(by_cycles[c]));
    stats.count += covers;
    Integer power = 1;
    for (int i = 0; i <= i_max; ++i) {
      stats.moment_sums[i] += covers * power;
      power *= c;
    }
  }
  if (nv >= 1) stats.hamiltonian_count = Integer(static_cast<unsigned long>(by_cycles[1]));
  return stats;
}

Integer BruteHamiltonian(const CirculantSpec& spec, int64_t n, const OracleBudget& budget) {
  return EnumerateStats(spec, n, 0, budget).hamiltonian_count;
}

}  // namespace circperm
