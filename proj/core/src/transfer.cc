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

#include "circperm/transfer.h"

#include <map>
#include <thread>

#include "circperm/errors.h"
#include "circperm/lattice.h"
#include "circperm/oracle.h"

namespace circperm {
namespace {

struct Choice {
  std::vector<std::size_t> edges;
  Rational weight;
};

// One New edge into every new vertex; any other subset leaves some new
// vertex with in-degree 0 or 2.
std::vector<Choice> NewEdgeChoices(const CirculantSpec& spec, const Decomposition& d) {
  std::vector<Choice> out{Choice{{}, Rational(1)}};
  for (const auto& group : NewEdgesByHead(d)) {
    std::vector<Choice> next;
    for (const auto& partial : out) {
      for (std::size_t idx : group) {
        Choice c = partial;
        c.edges.push_back(idx);
        c.weight *= spec.weights()[d.new_edges[idx].jump];
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> ZeroSlots(uint64_t bits, int width) {
  std::vector<int> out;
  for (int i = 0; i < width; ++i) {
    if (!((bits >> i) & 1u)) out.push_back(i);
  }
  return out;
}

using SparseBlock = std::map<std::pair<uint64_t, uint64_t>, Rational>;

std::string BlockLabel(uint64_t left, int width) {
  std::string s;
  for (int i = 0; i < width; ++i) s += ((left >> i) & 1u) ? '1' : '0';
  return s.empty() ? "()" : s;
}

}  // namespace

RationalMatrix BuildAlphaBar(const CirculantSpec& spec, const Decomposition& d,
                             const Ordering& order) {
  const int w = order.width();
  const uint64_t m = order.block_size();
  const std::vector<Choice> choices = NewEdgeChoices(spec, d);

  std::vector<uint64_t> lefts;
  if (w <= 8) {
    for (uint64_t l = 0; l < m; ++l) lefts.push_back(l);
  } else {
    const uint64_t stride = m / 256;
    for (uint64_t l = 0; l < m; l += stride) lefts.push_back(l);
    lefts.push_back(m - 1);
  }

  SparseBlock reference;
  bool have_reference = false;
  for (uint64_t left : lefts) {
    SparseBlock block;
    for (uint64_t right = 0; right < m; ++right) {
      const Classification from{left, right, w};
      const uint64_t pos_from = order.Position(from);
      for (const auto& choice : choices) {
        const auto to = Extend(d, from, choice.edges);
        if (!to) continue;
        const uint64_t pos_to = order.Position(*to);
        if (pos_to / m != pos_from / m) {
          throw BlockStructureError("transition " + ToString(from) + " -> " +
                                    ToString(*to) +
                                    " lands outside the diagonal blocks");
        }
        block[{pos_to % m, pos_from % m}] += choice.weight;
      }
    }
    for (auto it = block.begin(); it != block.end();) {
      it = it->second == 0 ? block.erase(it) : std::next(it);
    }
    if (!have_reference) {
      reference = std::move(block);
      have_reference = true;
    } else if (block != reference) {
      throw BlockStructureError("diagonal block for left tuple " + BlockLabel(left, w) +
                                " differs from the first block");
    }
  }

  RationalMatrix a_bar(m, m);
  for (const auto& [rc, v] : reference) a_bar(rc.first, rc.second) = v;
  return a_bar;
}

std::vector<RationalMatrix> SplitBlocks(const RationalMatrix& a_bar, const Ordering& order,
                                        std::vector<std::size_t>* offsets) {
  const int w = order.width();
  const std::size_t m = a_bar.rows();
  std::vector<int> group(m);
  std::vector<std::size_t> starts;
  for (std::size_t r = 0; r < m; ++r) {
    group[r] = ZeroCount(order.RightAt(static_cast<uint32_t>(r)), w);
    if (r == 0 || group[r] != group[r - 1]) starts.push_back(r);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      if (a_bar(r, c) != 0 && group[r] != group[c]) {
        throw BlockStructureError("transfer entry (" + std::to_string(r) + "," +
                                  std::to_string(c) +
                                  ") joins profiles with different zero counts");
      }
    }
  }
  std::vector<RationalMatrix> blocks;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::size_t end = i + 1 < starts.size() ? starts[i + 1] : m;
    blocks.push_back(a_bar.Block(starts[i], starts[i], end - starts[i], end - starts[i]));
  }
  if (offsets) *offsets = starts;
  return blocks;
}

std::vector<Rational> BuildBeta(const CirculantSpec& spec, const Decomposition& d,
                                const Ordering& order) {
  const int w = order.width();
  std::vector<Rational> beta(order.size());
  for (uint64_t pos = 0; pos < order.size(); ++pos) {
    const Classification x = order.At(pos);
    const std::vector<int> zl = ZeroSlots(x.left, w);
    const std::vector<int> zr = ZeroSlots(x.right, w);
    if (zl.size() != zr.size()) continue;
    std::vector<int> left_index(w, -1), right_index(w, -1);
    for (std::size_t k = 0; k < zl.size(); ++k) left_index[zl[k]] = static_cast<int>(k);
    for (std::size_t j = 0; j < zr.size(); ++j) right_index[zr[j]] = static_cast<int>(j);
    RationalMatrix b(zr.size(), zl.size());
    for (const auto& e : d.hook) {
      const int j = right_index[d.SlotOf(e.tail)];
      const int k = left_index[d.SlotOf(e.head)];
      if (j >= 0 && k >= 0) b(j, k) += spec.weights()[e.jump];
    }
    beta[pos] = RyserPermanent(b, w);
  }
  return beta;
}

std::vector<Rational> BuildInitial(const CirculantSpec& spec, const Decomposition& d,
                                   const Ordering& order, int ryser_cap) {
  const int w = order.width();
  const Lattice lattice(spec, d.n0);
  const RationalMatrix base = lattice.LatticeMatrix(spec.weights());
  const int64_t size = lattice.size();
  if (size > ryser_cap) {
    throw SizeCapError("initial lattice has " + std::to_string(size) +
                       " vertices, above the permanent cap of " +
                       std::to_string(ryser_cap));
  }
  std::vector<int64_t> left_vertex(w), right_vertex(w);
  for (int i = 0; i < w; ++i) {
    left_vertex[i] = lattice.Flat(Evaluate(d.boundaries.left[i], lattice));
    right_vertex[i] = lattice.Flat(Evaluate(d.boundaries.right[i], lattice));
  }

  std::vector<Rational> t0(order.size());
  for (uint64_t pos = 0; pos < order.size(); ++pos) {
    const Classification x = order.At(pos);
    const std::vector<int> zl = ZeroSlots(x.left, w);
    const std::vector<int> zr = ZeroSlots(x.right, w);
    if (zl.size() != zr.size()) continue;
    RationalMatrix g = base;
    for (int a : zl) {
      for (int64_t r = 0; r < size; ++r) g(r, left_vertex[a]) = 0;
    }
    for (int b : zr) {
      for (int64_t c = 0; c < size; ++c) g(right_vertex[b], c) = 0;
    }
    for (std::size_t j = 0; j < zl.size(); ++j) g(right_vertex[zr[j]], left_vertex[zl[j]]) = 1;
    t0[pos] = RyserPermanent(g, ryser_cap);
  }
  return t0;
}

RationalMatrix TransferSystem::FullA() const {
  const uint64_t m = ordering.block_size();
  RationalMatrix a(ordering.size(), ordering.size());
  for (uint64_t b = 0; b < m; ++b) {
    for (uint64_t r = 0; r < m; ++r) {
      for (uint64_t c = 0; c < m; ++c) a(b * m + r, b * m + c) = a_bar(r, c);
    }
  }
  return a;
}

TransferSystem BuildTransferSystem(const CirculantSpec& spec, const Decomposition& d,
                                   int ryser_cap) {
  TransferSystem sys;
  sys.width = static_cast<int>(d.width);
  sys.n0 = d.n0;
  sys.weighted = spec.weighted();
  sys.ordering = Ordering::Canonical(sys.width);
  sys.a_bar = BuildAlphaBar(spec, d, sys.ordering);
  sys.blocks = SplitBlocks(sys.a_bar, sys.ordering, &sys.block_offsets);
  sys.beta = BuildBeta(spec, d, sys.ordering);
  sys.t0 = BuildInitial(spec, d, sys.ordering, ryser_cap);
  return sys;
}

std::vector<Rational> Sequence(const TransferSystem& sys, int64_t from, int64_t to,
                               int threads) {
  if (from < sys.n0) {
    throw InconsistencyError("transfer sequence starts at n0=" + std::to_string(sys.n0));
  }
  if (to < from) return {};
  const uint64_t m = sys.ordering.block_size();
  const std::size_t steps = static_cast<std::size_t>(to - sys.n0 + 1);

  struct Entry {
    uint32_t row, col;
    Rational value;
  };
  std::vector<Entry> sparse;
  for (uint64_t r = 0; r < m; ++r) {
    for (uint64_t c = 0; c < m; ++c) {
      if (sys.a_bar(r, c) != 0) {
        sparse.push_back({static_cast<uint32_t>(r), static_cast<uint32_t>(c), sys.a_bar(r, c)});
      }
    }
  }

  // A left block only matters when both beta and Tbar(n0) touch it.
  std::vector<uint64_t> live;
  for (uint64_t l = 0; l < m; ++l) {
    bool beta_nz = false, t0_nz = false;
    for (uint64_t r = 0; r < m; ++r) {
      beta_nz = beta_nz || sys.beta[l * m + r] != 0;
      t0_nz = t0_nz || sys.t0[l * m + r] != 0;
    }
    if (beta_nz && t0_nz) live.push_back(l);
  }

  auto run = [&](std::size_t begin, std::size_t end, std::vector<Rational>& out) {
    out.assign(steps, Rational(0));
    std::vector<Rational> v(m), next(m);
    for (std::size_t i = begin; i < end; ++i) {
      const uint64_t l = live[i];
      for (uint64_t r = 0; r < m; ++r) v[r] = sys.t0[l * m + r];
      for (std::size_t k = 0; k < steps; ++k) {
        for (uint64_t r = 0; r < m; ++r) {
          if (sys.beta[l * m + r] != 0 && v[r] != 0) out[k] += sys.beta[l * m + r] * v[r];
        }
        if (k + 1 == steps) break;
        for (auto& x : next) x = 0;
        for (const auto& e : sparse) {
          if (v[e.col] != 0) next[e.row] += e.value * v[e.col];
        }
        std::swap(v, next);
      }
    }
  };

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads, live.size()));
  std::vector<std::vector<Rational>> partial(workers);
  if (workers == 1) {
    run(0, live.size(), partial[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (live.size() + workers - 1) / workers;
    for (std::size_t t = 0; t < workers; ++t) {
      const std::size_t b = std::min(live.size(), t * chunk);
      const std::size_t e = std::min(live.size(), b + chunk);
      pool.emplace_back(run, b, e, std::ref(partial[t]));
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Rational> total(steps, Rational(0));
  for (const auto& part : partial) {
    for (std::size_t k = 0; k < steps; ++k) total[k] += part[k];
  }
  return std::vector<Rational>(total.begin() + (from - sys.n0), total.end());
}

}  // namespace circperm
