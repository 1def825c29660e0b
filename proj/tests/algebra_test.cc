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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "circperm/decompose.h"
#include "circperm/errors.h"
#include "circperm/growth.h"
#include "circperm/pipeline.h"
#include "circperm/polynomial.h"
#include "circperm/recurrence.h"
#include "circperm/transfer.h"
#include "test_util.h"

namespace circperm {
namespace {

using testing_util::Spec;

Polynomial P(std::initializer_list<int> ascending) {
  return Polynomial(std::vector<Rational>(ascending.begin(), ascending.end()));
}

std::vector<Rational> Ints(std::initializer_list<long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

// Faddeev-LeVerrier, used only as an independent check.
Polynomial LeVerrier(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    m.AddScaledIdentity(c[n - k + 1]);
    const RationalMatrix am = a * m;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
  }
  return Polynomial(c);
}

RationalMatrix RandomMatrix(std::mt19937& rng, std::size_t n, int lo, int hi, double density) {
  std::uniform_int_distribution<int> value(lo, hi);
  std::bernoulli_distribution keep(density);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (keep(rng)) m(r, c) = value(rng);
    }
  }
  return m;
}

TEST(Polynomial, ArithmeticAndText) {
  const Polynomial p = P({1, 0, -2, 1});
  EXPECT_EQ(p.Degree(), 3);
  EXPECT_EQ(p.ToString(), "x^3 - 2x^2 + 1");
  EXPECT_EQ(P({-1, 1}) * P({-1, -1, 1}), p);
  EXPECT_EQ(p.Evaluate(2), 1);
  EXPECT_EQ(p.Derivative(), P({0, -4, 3}));
  const auto [q, r] = Polynomial::DivMod(p, P({-1, 1}));
  EXPECT_EQ(q, P({-1, -1, 1}));
  EXPECT_TRUE(r.IsZero());
  EXPECT_EQ(Gcd(p, P({-1, 0, 1})), P({-1, 1}));
  EXPECT_EQ((Rational(2) * P({1, 1})).Monic(), P({1, 1}));
  EXPECT_TRUE((p - p).IsZero());
  EXPECT_THROW(Polynomial::DivMod(p, Polynomial()), InconsistencyError);
}

TEST(CharPoly, SmallMatrices) {
  EXPECT_EQ(CharPoly(RationalMatrix{{1, 1}, {1, 0}}), P({-1, -1, 1}));
  EXPECT_EQ(CharPoly(RationalMatrix::Identity(3)), P({-1, 3, -3, 1}));
  EXPECT_EQ(CharPoly(RationalMatrix{{0, 1}, {0, 0}}), P({0, 0, 1}));
  EXPECT_EQ(CharPoly(RationalMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), P({-1, 0, 0, 1}));
}

TEST(CharPoly, MatchesLeVerrierAndCayleyHamilton) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const RationalMatrix m = RandomMatrix(rng, n, -3, 3, trial % 2 ? 0.4 : 0.9);
    const Polynomial p = CharPoly(m);
    EXPECT_EQ(p, LeVerrier(m)) << DebugString(m);
    EXPECT_TRUE(EvaluateAt(p, m).IsZero());
  }
}

TEST(CharPoly, BlockDiagonalMultiplies) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalMatrix> blocks;
    Polynomial product = P({1});
    for (int b = 0; b < 1 + trial % 4; ++b) {
      blocks.push_back(RandomMatrix(rng, 1 + (trial + b) % 4, 0, 2, 0.6));
      product = product * CharPoly(blocks.back());
    }
    EXPECT_EQ(CharPoly(BlockDiagonal(blocks)), product);
  }
}

TEST(Annihilator, WorkedExample012) {
  const RationalMatrix one{{1}};
  const RationalMatrix fib{{1, 1}, {1, 0}};
  std::vector<Polynomial> polys;
  const Polynomial a = Annihilator({one, fib, one}, &polys);
  EXPECT_EQ(a, P({1, 0, -2, 1}));
  EXPECT_EQ(polys, (std::vector<Polynomial>{P({-1, 1}), P({-1, -1, 1}), P({-1, 1})}));
  for (const auto& b : {one, fib}) EXPECT_TRUE(EvaluateAt(a, b).IsZero());
}

TEST(Annihilator, VanishesOnEveryBlockOfDerivedSystems) {
  for (const auto& spec : {Spec("0,1,3"), Spec("0,1,2,3"), Spec("1,n+1,2n", "3n"),
                           Spec("2,n+1,2n+2", "3n+1")}) {
    const TransferSystem sys = BuildTransferSystem(spec, Decompose(spec));
    const Polynomial a = Annihilator(sys.blocks);
    EXPECT_TRUE(EvaluateAt(a, sys.a_bar).IsZero()) << spec.Name();
    EXPECT_LE(a.Degree(), static_cast<int>(sys.a_bar.rows()));
  }
}

TEST(MinRecurrence, Fibonacci) {
  const Recurrence rec = MinRecurrence(Ints({1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144}), 1, 4);
  EXPECT_EQ(rec.coeffs, Ints({1, 1}));
  EXPECT_EQ(rec.base, 1);
  EXPECT_EQ(rec.initials, Ints({1, 1}));
  EXPECT_EQ(rec.ToString(), "T(n) = T(n-1) + T(n-2)");
  EXPECT_EQ(rec.CharacteristicPolynomial(), P({-1, -1, 1}));
}

TEST(MinRecurrence, PolynomialTimesExponential) {
  std::vector<Rational> terms;
  for (int n = 0; n < 20; ++n) terms.push_back(Rational(n * n) + (Integer(1) << n));
  const Recurrence rec = MinRecurrence(terms, 0, 6);
  EXPECT_EQ(rec.order(), 4);
  EXPECT_TRUE(Reproduces(rec, terms, 0));
}

TEST(MinRecurrence, ZeroSequence) {
  const Recurrence rec = MinRecurrence(std::vector<Rational>(10), 5, 3);
  EXPECT_EQ(rec.order(), 1);
  EXPECT_EQ(rec.coeffs, Ints({0}));
}

TEST(MinRecurrence, OrderAboveCapThrows) {
  std::vector<Rational> terms;
  for (int n = 0; n < 20; ++n) terms.push_back(Rational(n * n * n));
  EXPECT_THROW(MinRecurrence(terms, 0, 3), NoRecurrenceError);
  EXPECT_EQ(MinRecurrence(terms, 0, 4).order(), 4);
  EXPECT_THROW(MinRecurrence(Ints({1, 2, 3}), 0, 4), InconsistencyError);
}

TEST(FromAnnihilator, ReplaysWorkedExample) {
  const Recurrence rec = FromAnnihilator(P({1, 0, -2, 1}), Ints({6, 9, 13, 20, 31}), 3);
  EXPECT_EQ(rec.coeffs, Ints({2, 0, -1}));
  EXPECT_TRUE(Reproduces(rec, Ints({6, 9, 13, 20, 31, 49, 78}), 3));
  EXPECT_FALSE(Reproduces(rec, Ints({6, 9, 13, 12}), 3));
}

TEST(EvalRecurrence, FrozenValues) {
  const Recurrence t{Ints({2, 0, -1}), 3, Ints({6, 9, 13})};
  EXPECT_EQ(EvalRecurrence(t, 7), 31);
  EXPECT_EQ(EvalRecurrence(t, 6), 20);
  EXPECT_EQ(ToString(EvalRecurrence(t, 100)), "792070839848372253129");
  EXPECT_THROW(EvalRecurrence(t, 2), InconsistencyError);

  const Recurrence three_n{Ints({5, -5, -5, 6}), 2, Ints({17, 45, 113, 309})};
  EXPECT_EQ(EvalRecurrence(three_n, 6), 857);
}

TEST(EvalRecurrence, LargeNAgreesWithUnrollAndTransfer) {
  const Recurrence t{Ints({2, 0, -1}), 3, Ints({6, 9, 13})};
  const std::vector<Rational> unrolled = Unroll(t, 3, 400);
  for (int64_t n : {3, 4, 5, 50, 199, 400}) EXPECT_EQ(EvalRecurrence(t, n), unrolled[n - 3]);
  const CirculantSpec spec = Spec("0,1,2");
  const TransferSystem sys = BuildTransferSystem(spec, Decompose(spec));
  EXPECT_EQ(Sequence(sys, 100, 100)[0], EvalRecurrence(t, 100));
}

TEST(Growth, Golden) {
  const GrowthEstimate g = GrowthOf(P({1, 0, -2, 1}));
  EXPECT_NEAR(g.dominant_root, (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_LE(g.lower, g.upper);
  EXPECT_LT(g.upper - g.lower, Rational(1, 1000000000000));
  EXPECT_EQ(g.multiplicity, 1);
  EXPECT_TRUE(g.has_real_root);
  EXPECT_FALSE(g.non_real_dominant);
}

TEST(Growth, RepeatedAndComplexRoots) {
  const GrowthEstimate twice = GrowthOf(P({-2, 1}) * P({-2, 1}) * P({1, 1}));
  EXPECT_NEAR(twice.dominant_root, 2.0, 1e-12);
  EXPECT_EQ(twice.multiplicity, 2);

  const GrowthEstimate complex = GrowthOf(P({4, 0, 1}) * P({-1, 1}));
  EXPECT_NEAR(complex.dominant_root, 1.0, 1e-12);
  EXPECT_TRUE(complex.non_real_dominant);
  EXPECT_NEAR(complex.modulus, 2.0, 1e-9);

  EXPECT_NEAR(GrowthOf(P({-3, 1}) * P({3, 1})).dominant_root, 3.0, 1e-12);
  EXPECT_THROW(GrowthOf(P({5})), InconsistencyError);
}

TEST(Growth, SturmCounts) {
  const Polynomial p = P({-1, 1}) * P({-2, 1}) * P({3, 1});
  const auto sturm = SturmSequence(p);
  EXPECT_EQ(CountRootsIn(sturm, 0, 5), 2);
  EXPECT_EQ(CountRootsIn(sturm, -5, 5), 3);
  EXPECT_EQ(CountRootsIn(sturm, 1, 2), 1);
}

TEST(Derive, WorkedExample012) {
  const DeriveResult r = Derive(Spec("0,1,2"));
  EXPECT_EQ(r.recurrence.coeffs, Ints({2, 0, -1}));
  EXPECT_EQ(r.recurrence.base, 3);
  EXPECT_EQ(r.recurrence.initials, Ints({6, 9, 13}));
  EXPECT_EQ(r.annihilator, P({1, 0, -2, 1}));
  EXPECT_EQ(r.n0, 4);
  EXPECT_EQ(r.checked_n0, 4);
  EXPECT_EQ(TermAt(r, 6), 20);
}

TEST(Derive, ReportsInInputIndices) {
  const DeriveResult shifted = Derive(Spec("-1,0,1"));
  EXPECT_EQ(shifted.recurrence, Derive(Spec("0,1,2")).recurrence);

  const DeriveResult a = Derive(Spec("0,n,2n-1", "3n"));
  EXPECT_EQ(a.recurrence.coeffs, Ints({5, -5, -5, 6}));
  EXPECT_EQ(a.recurrence.base, 2);
  EXPECT_EQ(a.recurrence.initials, Ints({17, 45, 113, 309}));

  // C_{3n+4} at n is C_{3(n+1)+1} at n+1.
  const DeriveResult plus = Derive(Spec("2,n+1,2n+2", "3n+1"));
  const DeriveResult moved = Derive(Spec("2,n+2,2n+4", "3n+4"));
  for (int64_t n = 3; n < 10; ++n) EXPECT_EQ(TermAt(moved, n - 1), TermAt(plus, n));
}

TEST(Derive, SingleLoop) {
  const DeriveResult r = Derive(Spec("0"));
  EXPECT_EQ(r.recurrence.order(), 1);
  EXPECT_EQ(TermAt(r, 9), 1);
}

TEST(Derive, KeyBudget) {
  DeriveOptions options;
  options.max_key_bits = 3;
  EXPECT_THROW(Derive(Spec("0,1,2"), options), StateBudgetError);
}

class DegreeBound : public ::testing::TestWithParam<std::pair<const char*, const char*>> {};

// Minimal order is at most 2^s - 1 for constant jumps and 2^(p s) for linear ones.
TEST_P(DegreeBound, Holds) {
  const auto [jumps, size] = GetParam();
  const CirculantSpec spec = Spec(jumps, size);
  const DeriveResult r = Derive(spec);
  const CirculantSpec& n = r.normalized;
  const int64_t bits = n.slope() * n.BarS();
  const int64_t bound = spec.is_constant() ? (int64_t{1} << bits) - 1 : int64_t{1} << bits;
  EXPECT_LE(r.recurrence.order(), std::max<int64_t>(bound, 1)) << spec.Name();
}

INSTANTIATE_TEST_SUITE_P(
    Specs, DegreeBound,
    ::testing::Values(std::make_pair("0,1,2", ""), std::make_pair("-1,0,1", ""),
                      std::make_pair("1,2,3", ""), std::make_pair("0,1,3", ""),
                      std::make_pair("0,2,3", ""), std::make_pair("0,1,2,3", ""),
                      std::make_pair("0,1,4", ""), std::make_pair("0,n,2n-1", "3n"),
                      std::make_pair("1,n+1,2n", "3n"), std::make_pair("2,n+1,2n+2", "3n+1"),
                      std::make_pair("0,n+1", "2n")));

}  // namespace
}  // namespace circperm
