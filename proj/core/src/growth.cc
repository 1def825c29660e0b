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

#include "circperm/growth.h"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <sstream>

#include "circperm/errors.h"

namespace circperm {
namespace {

const Rational kWidth(Integer(1), Integer(1) << 45);

int SignChanges(const std::vector<Polynomial>& seq, const Rational& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.Evaluate(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

Rational CauchyBound(const Polynomial& p) {
  Rational m = 0;
  const Rational lead = abs(p.Leading());
  for (int i = 0; i < p.Degree(); ++i) {
    const Rational r = abs(p.Coefficient(i)) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

// Bisects towards the largest (or smallest) real root in (lo, hi].
void Isolate(const std::vector<Polynomial>& sturm, Rational& lo, Rational& hi,
             bool largest) {
  while (hi - lo > kWidth) {
    Rational mid = (lo + hi) / 2;
    if (largest) {
      if (CountRootsIn(sturm, mid, hi) >= 1) {
        lo = mid;
      } else {
        hi = mid;
      }
    } else {
      if (CountRootsIn(sturm, lo, mid) >= 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }
}

}  // namespace

std::vector<Polynomial> SturmSequence(const Polynomial& square_free) {
  std::vector<Polynomial> seq{square_free, square_free.Derivative()};
  while (!seq.back().IsZero() && seq.back().Degree() > 0) {
    Polynomial r = Polynomial::DivMod(seq[seq.size() - 2], seq.back()).second;
    seq.push_back(Rational(-1) * r);
  }
  if (seq.back().IsZero()) seq.pop_back();
  return seq;
}

int CountRootsIn(const std::vector<Polynomial>& sturm, const Rational& a,
                 const Rational& b) {
  return SignChanges(sturm, a) - SignChanges(sturm, b);
}

std::string GrowthEstimate::Note() const {
  std::ostringstream os;
  os.precision(12);
  if (!has_real_root) {
    os << "no real root; dominant modulus " << modulus;
    return os.str();
  }
  os << "dominant real root " << dominant_root << " (multiplicity " << multiplicity
     << ")";
  if (non_real_dominant) os << "; non-real dominant pair with modulus " << modulus;
  return os.str();
}

GrowthEstimate GrowthOf(const Polynomial& p_in) {
  if (p_in.Degree() < 1) throw InconsistencyError("growth of a constant polynomial");
  const Polynomial p = p_in.Monic();
  GrowthEstimate g;

  const Polynomial shared = Gcd(p, p.Derivative());
  const Polynomial square_free = Polynomial::DivMod(p, shared).first.Monic();
  const auto sturm = SturmSequence(square_free);
  const Rational bound = CauchyBound(square_free);

  if (CountRootsIn(sturm, -bound, bound) > 0) {
    g.has_real_root = true;
    Rational hi_lo = -bound, hi_hi = bound;
    Isolate(sturm, hi_lo, hi_hi, true);
    Rational lo_lo = -bound, lo_hi = bound;
    Isolate(sturm, lo_lo, lo_hi, false);
    const double top = Rational((hi_lo + hi_hi) / 2).get_d();
    const double bottom = Rational((lo_lo + lo_hi) / 2).get_d();
    if (std::fabs(bottom) > std::fabs(top) + 1e-12) {
      g.dominant_root = bottom;
      g.lower = lo_lo;
      g.upper = lo_hi;
    } else {
      g.dominant_root = top;
      g.lower = hi_lo;
      g.upper = hi_hi;
    }
    // Multiplicity: how deep the root persists through repeated gcds.
    g.multiplicity = 1;
    Polynomial h = shared;
    while (h.Degree() >= 1) {
      const Polynomial hs =
          Polynomial::DivMod(h, Gcd(h, h.Derivative())).first.Monic();
      const auto hs_sturm = SturmSequence(hs);
      if (CountRootsIn(hs_sturm, g.lower, g.upper) == 0) break;
      ++g.multiplicity;
      h = Gcd(h, h.Derivative());
    }
  }

  const int d = p.Degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.Coefficient(i).get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  double best_nonreal = 0;
  for (int i = 0; i < d; ++i) {
    const std::complex<double> z = solver.eigenvalues()[i];
    g.modulus = std::max(g.modulus, std::abs(z));
    if (std::fabs(z.imag()) > 1e-9 * std::max(1.0, std::abs(z))) {
      best_nonreal = std::max(best_nonreal, std::abs(z));
    }
  }
  const double real_mod = std::fabs(g.dominant_root);
  if (!g.has_real_root || best_nonreal > real_mod * (1 + 1e-9) + 1e-12) {
    g.non_real_dominant = best_nonreal > 0;
  }
  return g;
}

GrowthEstimate Growth(const Recurrence& rec) {
  return GrowthOf(rec.CharacteristicPolynomial());
}

}  // namespace circperm
