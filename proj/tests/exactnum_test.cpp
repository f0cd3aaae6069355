// Copyright 2026 The focalqi Authors
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

#include "focal/exactnum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"

namespace focal {
namespace {

PrimeFactorization F(std::initializer_list<std::pair<long, long>> entries) {
  PrimeFactorization f;
  for (auto [p, e] : entries) f.emplace(Int(p), e);
  return f;
}

TEST(FactorizeTest, Examples) {
  EXPECT_TRUE(Factorize(std::uint64_t{1}).empty());
  EXPECT_EQ(Factorize(std::uint64_t{64}), F({{2, 6}}));
  EXPECT_EQ(Factorize(std::uint64_t{36}), F({{2, 2}, {3, 2}}));
}

TEST(FactorizeTest, MatchesTrialDivisionOracle) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    const auto expected = oracle::TrialDivision(n);
    const auto got = Factorize(n);
    ASSERT_EQ(got.size(), expected.size()) << n;
    for (const auto& [p, e] : expected) EXPECT_EQ(got.at(Int(p)), e) << n;
    EXPECT_EQ(Reconstruct(got), Rat(Int(std::to_string(n), 10))) << n;
  }
}

TEST(FactorizeTest, LargePrimeCofactor) {
  // 2^5 * 1000000007 * 998244353
  const Int n = Int(32) * Int(1000000007) * Int(998244353);
  EXPECT_EQ(Factorize(n), F({{2, 5}, {998244353, 1}, {1000000007, 1}}));
  EXPECT_THROW(Factorize(Int(0)), DomainError);
  // Square of a large prime and a cube times a prime.
  const long p = 1000000000039;
  const Int big(std::to_string(p));
  EXPECT_EQ(Factorize(Int(big * big)), F({{p, 2}}));
  EXPECT_EQ(Factorize(Int(big * big * big * 1000003)), F({{1000003, 1}, {p, 3}}));
}

TEST(MaxrootTest, Examples) {
  EXPECT_EQ(Maxroot(Int(10)).root, 10);
  EXPECT_EQ(Maxroot(Int(10)).exponent, 1);
  EXPECT_EQ(Maxroot(Int(1)).root, 1);
  EXPECT_EQ(Maxroot(Int(1)).exponent, 1);
  EXPECT_EQ(Maxroot(Int(64)).root, 2);
  EXPECT_EQ(Maxroot(Int(64)).exponent, 6);
}

TEST(MaxrootTest, MatchesBruteForceUpTo1e5) {
  for (long n = 1; n <= 100000; ++n) {
    const MaxRoot r = Maxroot(Int(n));
    const auto [b, e] = oracle::BruteMaxroot(n);
    ASSERT_EQ(r.root, b) << n;
    ASSERT_EQ(r.exponent, e) << n;
    const MaxRoot again = Maxroot(r.root);
    ASSERT_EQ(again.root, r.root);
    ASSERT_EQ(again.exponent, 1);
  }
}

TEST(MaxrootTest, RationalRoots) {
  const RatRoot r = MaxrootRat(Rat(4, 9));
  EXPECT_EQ(r.root, Rat(2, 3));
  EXPECT_EQ(r.exponent, 2);
  EXPECT_THROW(MaxrootRat(Rat(1)), DomainError);
}

TEST(CommonPowerTest, Examples) {
  EXPECT_EQ(CommonPower(Int(4), Int(8)), std::make_pair(3L, 2L));
  EXPECT_EQ(CommonPower(Int(7), Int(7)), std::make_pair(1L, 1L));
  EXPECT_FALSE(CommonPower(Int(2), Int(3)).has_value());
  EXPECT_THROW(CommonPower(Int(1), Int(3)), DomainError);
}

TEST(CommonPowerTest, MatchesExhaustiveSearchUpTo200) {
  for (long k1 = 2; k1 <= 200; ++k1) {
    for (long k2 = 2; k2 <= 200; ++k2) {
      const auto got = CommonPower(Int(k1), Int(k2));
      const auto expected = oracle::BruteCommonPower(k1, k2, 12);
      ASSERT_EQ(got.has_value(), expected.has_value()) << k1 << "," << k2;
      ASSERT_EQ(got.has_value(), Maxroot(Int(k1)).root == Maxroot(Int(k2)).root);
      if (got) ASSERT_EQ(*got, *expected) << k1 << "," << k2;
    }
  }
}

TEST(MultDependentTest, Examples) {
  auto d = MultDependent(Rat(2), Rat(8));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->m, 3);
  EXPECT_EQ(d->n, 1);

  d = MultDependent(Rat(2, 3), Rat(9, 4));
  ASSERT_TRUE(d);
  EXPECT_EQ(d->m, -2);
  EXPECT_EQ(d->n, 1);

  EXPECT_FALSE(MultDependent(Rat(2), Rat(3)));
  EXPECT_THROW(MultDependent(Rat(1), Rat(3)), DomainError);
  EXPECT_THROW(MultDependent(Rat(2), Rat(-3)), DomainError);
}

TEST(MultDependentTest, RandomIdentityHolds) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(1, 12);
  std::uniform_int_distribution<long> exp(-4, 4);
  int dependent = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Rat base(small(rng), small(rng));
    base.canonicalize();
    if (base == 1) continue;
    long e1 = exp(rng), e2 = exp(rng);
    if (e1 == 0 || e2 == 0) continue;
    const Rat a = Pow(base, e1);
    // Half of the cases perturb b to break dependence.
    Rat b = Pow(base, e2);
    if (trial % 2) {
      Rat noise(small(rng), small(rng));
      noise.canonicalize();
      b *= noise;
    }
    if (b == 1) continue;
    const auto d = MultDependent(a, b);
    const bool parallel = oracle::ExponentVectorsParallel(a, b);
    ASSERT_EQ(d.has_value(), parallel) << a << " " << b;
    if (d) {
      ++dependent;
      ASSERT_GT(d->n, 0);
      ASSERT_EQ(std::gcd(std::labs(d->m), d->n), 1);
      ASSERT_EQ(Pow(a, d->m), Pow(b, d->n));
    }
  }
  EXPECT_GT(dependent, 500);
}

TEST(ParseRatTest, CanonicalStrings) {
  EXPECT_EQ(ParseRat("1/2"), Rat(1, 2));
  EXPECT_EQ(ParseRat("-6/4"), Rat(-3, 2));
  EXPECT_EQ(ToString(ParseRat("6/3")), "2");
  EXPECT_EQ(ToString(Rat(-3, 2)), "-3/2");
  EXPECT_THROW(ParseRat("1/0"), DomainError);
  EXPECT_THROW(ParseRat("1.5"), DomainError);
  EXPECT_THROW(ParseRat(""), DomainError);
  EXPECT_THROW(ParseRat("/3"), DomainError);
}

TEST(LogRatioTest, RejectsArgumentsNotAboveOne) {
  EXPECT_THROW(LogRatio(Rat(1), Rat(2)), DomainError);
  EXPECT_THROW(LogRatio(Rat(2), Rat(1, 2)), DomainError);
}

TEST(LogRatioTest, EqualityExamples) {
  EXPECT_EQ(LogRatioEq(LogRatio(8, 2), LogRatio(27, 3)).verdict, Certainty::kEqual);
  EXPECT_EQ(LogRatioEq(LogRatio(2, 2), LogRatio(5, 5)).verdict, Certainty::kEqual);
  const LogCompare c = LogRatioEq(LogRatio(2, 3), LogRatio(3, 2));
  EXPECT_EQ(c.verdict, Certainty::kNotEqual);
  EXPECT_NEAR(c.estimate_x, 0.6309, 1e-4);
  EXPECT_NEAR(c.estimate_y, 1.5850, 1e-4);
}

TEST(LogRatioTest, CrossDependentPairs) {
  // log 9 / log 5 = 2 log 3 / log 5 versus log 3 / log 25 = log 3 / (2 log 5).
  EXPECT_EQ(LogRatioEq(LogRatio(9, 5), LogRatio(3, 25)).verdict, Certainty::kNotEqual);
  EXPECT_EQ(LogRatioEq(LogRatio(9, 25), LogRatio(3, 5)).verdict, Certainty::kEqual);
  // Rational against irrational.
  EXPECT_EQ(LogRatioEq(LogRatio(4, 2), LogRatio(3, 2)).verdict, Certainty::kNotEqual);
}

TEST(LogRatioTest, IndependentBasesUseIntervals) {
  // log 2 / log 3 against log 5 / log 7: no exact relation, intervals split.
  EXPECT_EQ(LogRatioEq(LogRatio(2, 3), LogRatio(5, 7)).verdict, Certainty::kNotEqual);
  EXPECT_EQ(LogRatioEq(LogRatio(4, 9), LogRatio(2, 3)).verdict, Certainty::kEqual);
}

TEST(LogRatioTest, UndecidedWhenValuesAgreeBeyondWorkingPrecision) {
  // p = nextprime(2^300): log(p)/log(3) and log(2^300)/log(3) differ by about
  // 1e-88, far below 256-bit resolution, and no exact relation applies.
  const Int two300 = Pow(Int(2), 300);
  Int p;
  mpz_nextprime(p.get_mpz_t(), two300.get_mpz_t());
  const LogCompare c = LogRatioEq(LogRatio(Rat(p), 3), LogRatio(Rat(two300), 3));
  EXPECT_EQ(c.verdict, Certainty::kUndecided);
  EXPECT_LT(c.width, 1e-12);
  EXPECT_NEAR(c.estimate_x, c.estimate_y, 1e-12);
}

TEST(LogRatioTest, CanonicalFormsOfDependentPairsAgree) {
  EXPECT_EQ(LogRatio(8, 2).Canonicalize(), LogRatio(27, 3).Canonicalize());
  EXPECT_EQ(LogRatio(9, 4).Canonicalize(), LogRatio(3, 2).Canonicalize());
  EXPECT_EQ(LogRatio(8, 2).ToString(), "3");
  EXPECT_EQ(LogRatio(4, 16).ToString(), "1/2");
  EXPECT_EQ(LogRatio(9, 4).ToString(), "log(3)/log(2)");
  EXPECT_EQ(LogRatio(27, 4).ToString(), "log(27)/log(4)");
}

TEST(LogRatioTest, ArithmeticExamples) {
  const LogRatio two = LogRatioAddOne(LogRatio(8, 8));
  EXPECT_EQ(two.a(), 64);
  EXPECT_EQ(two.b(), 8);
  EXPECT_EQ(two.RationalValue(), Rat(2));

  const LogRatio six = LogRatioChainMul(LogRatio(64, 8), LogRatio(8, 2));
  EXPECT_EQ(six.a(), 64);
  EXPECT_EQ(six.b(), 2);
  EXPECT_EQ(six.RationalValue(), Rat(6));

  EXPECT_THROW(LogRatioChainMul(LogRatio(4, 2), LogRatio(3, 5)), DomainError);

  const auto sum = LogRatioAdd(LogRatio(3, 2), LogRatio(5, 4));
  ASSERT_TRUE(sum);
  EXPECT_NEAR(sum->Approx(), std::log(3) / std::log(2) + std::log(5) / std::log(4), 1e-12);
  EXPECT_FALSE(LogRatioAdd(LogRatio(3, 2), LogRatio(5, 3)));

  EXPECT_EQ(LogRatioScale(LogRatio(3, 2), Rat(3, 2)).ToString(), "log(27)/log(4)");
  EXPECT_EQ(LogRatio::FromRational(Rat(3, 2)).RationalValue(), Rat(3, 2));
}

TEST(LogRatioTest, EnclosureContainsValue) {
  const LogRatio x(Rat(10, 3), Rat(7, 2));
  const auto [lo, hi] = Enclose(x, 128);
  // The double estimate may sit one ulp outside the rigorous bound.
  const double slack = 4e-16 * std::abs(x.Approx());
  EXPECT_LE(lo, x.Approx() + slack);
  EXPECT_GE(hi, x.Approx() - slack);
  EXPECT_LE(lo, hi);
  EXPECT_LT(hi - lo, 1e-14);
}

// Symmetry, and transitivity of Equal on certified triples.
TEST(LogRatioTest, PartialEquivalenceProperty) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> pick(0, 7);
  const std::vector<Rat> bases = {Rat(2), Rat(3), Rat(4), Rat(8), Rat(9), Rat(27), Rat(3, 2), Rat(9, 4)};
  std::vector<LogRatio> pool;
  for (const Rat& a : bases) {
    for (const Rat& b : bases) pool.emplace_back(a, b);
  }
  std::uniform_int_distribution<std::size_t> any(0, pool.size() - 1);
  for (int trial = 0; trial < 3000; ++trial) {
    const LogRatio& x = pool[any(rng)];
    const LogRatio& y = pool[any(rng)];
    const LogRatio& z = pool[any(rng)];
    const auto xy = LogRatioEq(x, y).verdict;
    ASSERT_EQ(xy, LogRatioEq(y, x).verdict);
    const auto yz = LogRatioEq(y, z).verdict;
    const auto xz = LogRatioEq(x, z).verdict;
    if (xy == Certainty::kEqual && yz == Certainty::kEqual) {
      ASSERT_EQ(xz, Certainty::kEqual);
    }
    // Certified verdicts agree with floating point.
    if (xy == Certainty::kEqual) ASSERT_NEAR(x.Approx(), y.Approx(), 1e-9);
    if (xy == Certainty::kNotEqual) ASSERT_GT(std::fabs(x.Approx() - y.Approx()), 1e-12);
  }
}

TEST(LogRatioTest, ArithmeticAgreesWithFloatingPoint) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> base(2, 30);
  std::uniform_int_distribution<long> exp(1, 4);
  int checked = 0;
  while (checked < 1000) {
    const Rat a(base(rng), 1), c(base(rng), 1);
    const long root = base(rng);
    const Rat b = Pow(Rat(root), exp(rng));
    const Rat b2 = Pow(Rat(root), exp(rng));
    const LogRatio x(a, b);
    const LogRatio y(b2, c);
    const double fx = std::log(a.get_d()) / std::log(b.get_d());
    const double fy = std::log(b2.get_d()) / std::log(c.get_d());
    const double one_plus = LogRatioAddOne(x).Approx();
    const double prod = LogRatioChainMul(x, y).Approx();
    ASSERT_NEAR(one_plus, 1 + fx, 1e-9 * (1 + fx));
    ASSERT_NEAR(prod, fx * fy, 1e-9 * fx * fy);
    ++checked;
  }
}

// Inputs with large prime factors are handled by exact integer roots.
TEST(MaxrootTest, LargeInputsNeedNoFactorization) {
  const Int n = Pow(Int(2), 600) + 1;
  const MaxRoot m = Maxroot(Pow(n, 6));
  EXPECT_EQ(m.root, n);
  EXPECT_EQ(m.exponent, 6);
  const RatRoot r = MaxrootRat(Rat(Pow(n, 4)) / Pow(Int(3), 6));
  EXPECT_EQ(r.exponent, 2);
  EXPECT_EQ(r.root, Rat(Pow(n, 2)) / 27);
  EXPECT_TRUE(MultDependent(Rat(Pow(n, 6)), Rat(Pow(n, 4))));
  EXPECT_FALSE(MultDependent(Rat(n), Rat(n + 2)));
  EXPECT_EQ(CommonPower(Pow(n, 6), Pow(n, 4)), std::make_pair(2L, 3L));
}

}  // namespace
}  // namespace focal
