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

#include "circperm/extensions.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <thread>

#include "circperm/errors.h"

namespace circperm {
namespace {

struct Geometry {
  int64_t s_plus = 0;
  int64_t s_minus = 0;
  int half = 0;
  int64_t n0 = 1;
};

Geometry GeometryOf(const CirculantSpec& raw) {
  Geometry g;
  for (const auto& j : raw.jumps()) {
    if (j.offset > 0) g.s_plus = std::max(g.s_plus, j.offset);
    if (j.offset < 0) g.s_minus = std::max(g.s_minus, -j.offset);
  }
  g.half = static_cast<int>(std::max(g.s_plus, g.s_minus));
  g.n0 = std::max<int64_t>({1, 2 * g.half, g.s_plus + g.s_minus + 1});
  return g;
}

bool Full(const PairingState& x, int pos) { return x.in[pos] && x.out[pos]; }

bool AllFull(const PairingState& x) {
  for (int i = 0; i < x.size(); ++i) {
    if (!Full(x, i)) return false;
  }
  return true;
}

// Drops position `pos`, which must be full, and renumbers the rest.
PairingState Remove(const PairingState& x, int pos) {
  PairingState y(x.size() - 1);
  y.closed = x.closed;
  for (int i = 0, k = 0; i < x.size(); ++i) {
    if (i == pos) continue;
    y.in[k] = x.in[i];
    y.out[k] = x.out[i];
    const int e = x.end_of[i];
    y.end_of[k] = e < 0 ? -1 : (e > pos ? e - 1 : e);
    ++k;
  }
  return y;
}

// Folds a cover with `cycles` closed cycles into the state it lands in. In
// Hamiltonian mode only cycle-free covers and single cycles through every
// vertex survive. Returns false when the cover is dropped.
bool Admit(TourMode mode, int cycles, PairingState& x, std::size_t* lattice_cycles) {
  if (mode == TourMode::kMoments || cycles == 0) return true;
  if (cycles == 1 && !x.closed && AllFull(x)) {
    x.closed = true;
    ++*lattice_cycles;
    return true;
  }
  return false;
}

struct Builder {
  const CirculantSpec& raw;
  Geometry g;
  TourMode mode;
  int moment;
  std::size_t max_states;

  AugmentedSystem sys;
  std::map<PairingState, std::size_t> index;
  std::deque<std::size_t> queue;

  std::size_t Intern(const PairingState& x) {
    auto [it, inserted] = index.emplace(x, sys.states.size());
    if (inserted) {
      if (sys.states.size() >= max_states) {
        throw StateBudgetError("pairing states exceed the budget of " +
                               std::to_string(max_states));
      }
      sys.states.push_back(x);
      sys.transitions.emplace_back();
      sys.initial.emplace_back(moment + 1, Integer(0));
      sys.completions.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  }

  // Covers of L_{n0} whose deficits all sit where Hook edges or later
  // lattice edges can still repair them.
  void Initial() {
    const int64_t n = g.n0;
    const int a = g.half;
    std::vector<std::pair<int, int>> edges;
    for (int64_t i = 0; i < n; ++i) {
      for (const auto& j : raw.jumps()) {
        const int64_t h = i + j.offset;
        if (h >= 0 && h < n) edges.emplace_back(static_cast<int>(i), static_cast<int>(h));
      }
    }
    PairingState start(static_cast<int>(n));

    std::map<PairingState, std::vector<Integer>> found;
    auto leaf = [&](const PairingState& x, int cycles) {
      for (int64_t v = a; v < n - a; ++v) {
        if (!Full(x, static_cast<int>(v))) return;
      }
      for (int v = 0; v < a; ++v) {
        if (!x.in[v] && v >= g.s_plus) return;
        if (!x.out[v] && v >= g.s_minus) return;
      }
      PairingState y = x;
      for (int64_t v = n - a - 1; v >= a; --v) y = Remove(y, static_cast<int>(v));
      if (!Admit(mode, cycles, y, &sys.lattice_cycles)) return;
      auto& m = found.try_emplace(y, moment + 1, Integer(0)).first->second;
      Integer power = 1;
      for (int t = 0; t <= moment; ++t) {
        m[t] += power;
        power *= cycles;
      }
    };
    auto dfs = [&](auto&& self, std::size_t k, const PairingState& x, int cycles) -> void {
      if (k == edges.size()) {
        leaf(x, cycles);
        return;
      }
      self(self, k + 1, x, cycles);
      PairingState y = x;
      const int r = y.AddEdge(edges[k].first, edges[k].second);
      if (r >= 0) self(self, k + 1, y, cycles + r);
    };
    dfs(dfs, 0, start, 0);

    for (const auto& [x, m] : found) sys.initial[Intern(x)] = m;
  }

  void Expand(std::size_t id) {
    const PairingState x = sys.states[id];
    const int a = g.half;
    const int fresh = 2 * a;
    std::vector<std::pair<int, int>> edges;
    for (const auto& j : raw.jumps()) {
      if (j.offset > 0) edges.emplace_back(fresh - static_cast<int>(j.offset), fresh);
      if (j.offset == 0) edges.emplace_back(fresh, fresh);
      if (j.offset < 0) edges.emplace_back(fresh, fresh + static_cast<int>(j.offset));
    }
    PairingState grown(fresh + 1);
    grown.closed = x.closed;
    for (int i = 0; i < fresh; ++i) {
      grown.in[i] = x.in[i];
      grown.out[i] = x.out[i];
      grown.end_of[i] = x.end_of[i];
    }

    std::vector<AugmentedSystem::Transition> out;
    for (uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      PairingState y = grown;
      int cycles = 0;
      bool ok = true;
      for (std::size_t e = 0; e < edges.size() && ok; ++e) {
        if (!((mask >> e) & 1u)) continue;
        const int r = y.AddEdge(edges[e].first, edges[e].second);
        if (r < 0) ok = false;
        cycles += std::max(r, 0);
      }
      if (!ok || !Full(y, a)) continue;
      if (!Admit(mode, cycles, y, &sys.lattice_cycles)) continue;
      out.push_back({Intern(Remove(y, a)), cycles});
    }
    sys.transitions[id] = std::move(out);
  }

  void Complete(std::size_t id) {
    const int a = g.half;
    std::vector<std::pair<int, int>> hooks;
    for (const auto& j : raw.jumps()) {
      if (j.offset > 0) {
        for (int64_t k = 1; k <= j.offset; ++k) {
          hooks.emplace_back(2 * a - static_cast<int>(k), static_cast<int>(j.offset - k));
        }
      } else if (j.offset < 0) {
        const int t = static_cast<int>(-j.offset);
        for (int i = 0; i < t; ++i) hooks.emplace_back(i, 2 * a - t + i);
      }
    }
    std::vector<int>& out = sys.completions[id];
    auto dfs = [&](auto&& self, std::size_t k, const PairingState& x, int cycles) -> void {
      if (k == hooks.size()) {
        if (!AllFull(x)) return;
        if (mode == TourMode::kHamiltonian && cycles + (x.closed ? 1 : 0) != 1) return;
        out.push_back(cycles);
        return;
      }
      self(self, k + 1, x, cycles);
      PairingState y = x;
      const int r = y.AddEdge(hooks[k].first, hooks[k].second);
      if (r >= 0) self(self, k + 1, y, cycles + r);
    };
    dfs(dfs, 0, sys.states[id], 0);
  }
};

}  // namespace

int PairingState::StartOf(int end) const {
  for (int i = 0; i < size(); ++i) {
    if (end_of[i] == end) return i;
  }
  return -1;
}

int PairingState::AddEdge(int u, int v) {
  if (out[u] || in[v]) return -1;
  const int start = StartOf(u);
  out[u] = 1;
  in[v] = 1;
  if (start == v) {
    end_of[v] = -1;
    return 1;
  }
  end_of[start] = end_of[v];
  end_of[v] = -1;
  return 0;
}

std::string PairingState::ToString() const {
  std::ostringstream os;
  os << "in=";
  for (auto b : in) os << int(b);
  os << " out=";
  for (auto b : out) os << int(b);
  os << " paths={";
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (end_of[i] < 0) continue;
    os << (first ? "" : ",") << i << "->" << end_of[i];
    first = false;
  }
  os << "}";
  if (closed) os << " closed";
  return os.str();
}

std::vector<Integer> ShiftMoments(const std::vector<Integer>& m, int delta) {
  if (delta == 0) return m;
  std::vector<Integer> out(m.size(), Integer(0));
  for (std::size_t t = 0; t < m.size(); ++t) {
    Integer power = 1;  // delta^(t - j), j running down from t
    for (std::size_t j = t + 1; j-- > 0;) {
      out[t] += Binomial(t, j).get_num() * power * m[j];
      power *= delta;
    }
  }
  return out;
}

AugmentedSystem BuildAugmented(const CirculantSpec& raw, TourMode mode, int moment,
                               const OracleBudget& budget) {
  if (!raw.is_constant()) {
    throw InconsistencyError("cycle statistics need constant jumps, got " + raw.Name());
  }
  if (moment < 0) throw InconsistencyError("negative moment order");
  if (moment > budget.max_moment) {
    throw SizeCapError("moment order " + std::to_string(moment) + " exceeds the cap of " +
                       std::to_string(budget.max_moment));
  }
  Builder b{raw, GeometryOf(raw), mode, mode == TourMode::kMoments ? moment : 0,
            budget.max_states, {}, {}, {}};
  b.sys.mode = mode;
  b.sys.moment = b.moment;
  b.sys.half = b.g.half;
  b.sys.n0 = b.g.n0;
  b.sys.s_plus = b.g.s_plus;
  b.sys.s_minus = b.g.s_minus;
  b.Initial();
  while (!b.queue.empty()) {
    const std::size_t id = b.queue.front();
    b.queue.pop_front();
    b.Expand(id);
    b.Complete(id);
  }
  return std::move(b.sys);
}

std::vector<Integer> AugmentedTerms(const AugmentedSystem& sys, int64_t from, int64_t to,
                                    int threads) {
  if (from < sys.n0) {
    throw InconsistencyError("augmented terms start at n0=" + std::to_string(sys.n0));
  }
  if (to < from) return {};
  const std::size_t count = sys.states.size();
  const int k = sys.moment;

  std::vector<std::vector<Integer>> v = sys.initial;
  std::vector<Integer> terms;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::max(threads, 1), count));

  for (int64_t n = sys.n0; n <= to; ++n) {
    if (n >= from) {
      Integer total = 0;
      for (std::size_t s = 0; s < count; ++s) {
        for (int delta : sys.completions[s]) total += ShiftMoments(v[s], delta)[k];
      }
      terms.push_back(total);
    }
    if (n == to) break;

    auto step = [&](std::size_t begin, std::size_t end,
                    std::vector<std::vector<Integer>>& next) {
      next.assign(count, std::vector<Integer>(k + 1, Integer(0)));
      for (std::size_t s = begin; s < end; ++s) {
        if (std::all_of(v[s].begin(), v[s].end(), [](const Integer& x) { return x == 0; })) {
          continue;
        }
        for (const auto& t : sys.transitions[s]) {
          const std::vector<Integer> shifted = ShiftMoments(v[s], t.cycles);
          for (int j = 0; j <= k; ++j) next[t.to][j] += shifted[j];
        }
      }
    };
    std::vector<std::vector<std::vector<Integer>>> partial(workers);
    if (workers == 1) {
      step(0, count, partial[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (count + workers - 1) / workers;
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = std::min(count, w * chunk);
        pool.emplace_back(step, b, std::min(count, b + chunk), std::ref(partial[w]));
      }
      for (auto& th : pool) th.join();
      for (std::size_t w = 1; w < workers; ++w) {
        for (std::size_t s = 0; s < count; ++s) {
          for (int j = 0; j <= k; ++j) partial[0][s][j] += partial[w][s][j];
        }
      }
    }
    v = std::move(partial[0]);
  }
  return terms;
}

namespace {

constexpr int kGuard = 8;
constexpr int kLaterBases = 4;

ExtensionResult Fit(AugmentedSystem sys, int threads) {
  const int cap = static_cast<int>(sys.states.size()) * (sys.moment + 1);
  const int64_t count = 2 * static_cast<int64_t>(cap) + kGuard + kLaterBases;
  const std::vector<Integer> raw_terms =
      AugmentedTerms(sys, sys.n0, sys.n0 + count - 1, threads);
  std::vector<Rational> terms(raw_terms.begin(), raw_terms.end());

  ExtensionResult best;
  bool have = false;
  for (int k = 0; k <= kLaterBases; ++k) {
    std::vector<Rational> tail(terms.begin() + k, terms.end());
    Recurrence rec = MinRecurrence(tail, sys.n0 + k, std::max(cap, 1), kGuard);
    if (!have || rec.order() < best.recurrence.order()) {
      best.recurrence = std::move(rec);
      have = true;
    }
  }
  best.terms_base = sys.n0;
  best.terms = std::move(terms);
  best.system = std::move(sys);
  return best;
}

Rational ValueAt(const ExtensionResult& r, int64_t n) {
  const int64_t k = n - r.terms_base;
  if (k < 0) {
    throw InconsistencyError("n=" + std::to_string(n) + " is below n0=" +
                             std::to_string(r.terms_base));
  }
  if (k < static_cast<int64_t>(r.terms.size())) return r.terms[k];
  return EvalRecurrence(r.recurrence, n);
}

}  // namespace

ExtensionResult MomentsDerive(const CirculantSpec& raw, int moment, const OracleBudget& budget,
                              int threads) {
  return Fit(BuildAugmented(raw, TourMode::kMoments, moment, budget), threads);
}

ExtensionResult HamiltonianDerive(const CirculantSpec& raw, const OracleBudget& budget,
                                  int threads) {
  return Fit(BuildAugmented(raw, TourMode::kHamiltonian, 0, budget), threads);
}

std::vector<Integer> MomentsTerms(const CirculantSpec& raw, int moment, int64_t from,
                                  int64_t to, const OracleBudget& budget) {
  return AugmentedTerms(BuildAugmented(raw, TourMode::kMoments, moment, budget), from, to);
}

Rational MomentsRatio(const CirculantSpec& raw, int64_t n, const OracleBudget& budget) {
  const Rational tc0 = ValueAt(MomentsDerive(raw, 0, budget), n);
  const Rational tc1 = ValueAt(MomentsDerive(raw, 1, budget), n);
  if (tc0 == 0) {
    throw InconsistencyError("no cycle covers at n=" + std::to_string(n));
  }
  return tc1 / tc0;
}

DeriveResult WeightedDerive(const CirculantSpec& spec, const DeriveOptions& options) {
  return Derive(spec, options);
}

}  // namespace circperm
