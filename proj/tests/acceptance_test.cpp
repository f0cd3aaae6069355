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

// Acceptance run: one PASS/FAIL line per criterion with its wall time and
// limit. Exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "focal/commengine.hpp"
#include "focal/radicalcheck.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace focal {
namespace {

using gen::Q;
using K = Verdict::Kind;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Empty on success, otherwise the first failure.
using Check = std::function<std::string()>;

struct Criterion {
  int number;
  std::string name;
  // Seconds; no limit when absent.
  std::optional<double> limit;
  Check check;
};

#define REQUIRE(cond, msg)                        \
  do {                                            \
    if (!(cond)) {                                \
      std::ostringstream _out;                    \
      _out << msg;                                \
      return _out.str();                          \
    }                                             \
  } while (false)

std::string NonPowerPrefix() {
  std::set<long> got;
  for (long n = 1; n <= 10; ++n) {
    if (Maxroot(Int(n)).exponent == 1) got.insert(n);
  }
  REQUIRE(got == (std::set<long>{1, 2, 3, 5, 6, 7, 10}), "non-power set differs");
  return "";
}

std::string FtInvariants() {
  for (long m = 2; m <= 64; ++m) {
    REQUIRE(InvariantS(FT{m}) == m, "s(FT(" << m << "))");
    REQUIRE(InvariantQ(FT{m}) == oracle::BruteMaxroot(m).first, "q(FT(" << m << "))");
  }
  for (long m = 2; m <= 5; ++m) {
    for (long d = 1; d <= 4; ++d) REQUIRE(FtIndexOracle(m, d) == m, "oracle m=" << m << " depth=" << d);
  }
  return "";
}

std::string TdckfoEquivalence() {
  for (long m = 2; m <= 30; ++m) {
    for (long n = 2; n <= 30; ++n) {
      const Verdict v = CommableWithinFocal(FT{m}, FT{n});
      const bool same_q = oracle::BruteMaxroot(m).first == oracle::BruteMaxroot(n).first;
      REQUIRE((v.kind == K::kYes) == same_q, "FT(" << m << ") vs FT(" << n << ")");
      if (v.kind == K::kYes) {
        const ChainValidation c = ValidateChain(*v.chain);
        REQUIRE(c.valid(), "chain FT(" << m << ") vs FT(" << n << "): " << c.diagnostic);
      } else {
        REQUIRE(v.kind == K::kNo && CheckObstruction(FT{m}, FT{n}, *v.obstruction), "obstruction " << m << " " << n);
      }
    }
  }
  return "";
}

// A1 = B^{n2}, A2 = P B^{n1} P^{-1}, k1 = r^{n2}, k2 = r^{n1}, gcd(n1, n2) = 1,
// so A1^{n1} and A2^{n2} are conjugate with k1^{n1} = k2^{n2}.
std::string FinalCorollary() {
  std::mt19937_64 rng(2026);
  const std::vector<std::pair<long, long>> pairs = {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {1, 3}, {3, 1}};
  int yes = 0, no = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto [n1, n2] = pairs[rng() % pairs.size()];
    const long r = 2 + static_cast<long>(rng() % 5);
    const MatQ b = gen::Triangular(1 + trial % 3, rng, 7);
    const MatQ p = oracle::RandomInvertible(b.dim(), rng);
    MatQ b1 = MatPower(b, n1);
    long k2 = Pow(Int(r), static_cast<unsigned long>(n1)).get_si();
    const bool perturb = trial >= 100;
    if (perturb) {
      if (trial % 2) {
        b1(0, 0) *= Q(1, 2);
      } else {
        k2 += 1;
      }
    }
    const GAk g1{MatPower(b, n2), Pow(Int(r), static_cast<unsigned long>(n2)).get_si(), 1};
    const GAk g2{p * b1 * Inverse(p), k2, 1};
    const Verdict com = Commable(g1, g2);
    const Verdict qi = QuasiIsometric(g1, g2);
    const bool raw = FindPowerConjugacy(g1.a, g2.a, g1.k, g2.k).has_value();
    const bool brute = oracle::BrutePowerConjugacy(g1.a, g2.a, g1.k, g2.k, 6).has_value();
    REQUIRE(com.kind == (perturb ? K::kNo : K::kYes), "trial " << trial << ": " << Describe(g1) << " vs " << Describe(g2));
    REQUIRE(qi.kind == com.kind, "qi disagrees at trial " << trial);
    REQUIRE(raw == (com.kind == K::kYes) && brute == raw, "power conjugacy disagrees at trial " << trial);
    if (com.kind == K::kYes) {
      REQUIRE(ValidateChain(*com.chain).valid(), "chain invalid at trial " << trial);
      ++yes;
    } else {
      REQUIRE(CheckObstruction(g1, g2, *com.obstruction), "obstruction unchecked at trial " << trial);
      ++no;
    }
  }
  REQUIRE(yes == 100 && no == 100, "counts " << yes << "/" << no);
  return "";
}

std::string P0Identity() {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const GAk g{gen::Triangular(1 + trial % 4, rng, 64), 2 + static_cast<long>(rng() % 63),
                1 + static_cast<long>(rng() % 3)};
    const LogRatio lhs = InvariantP0(g).value();
    const LogRatio rhs = LogRatioChainMul(LogRatioAddOne(InvariantVarpi(g).value()), ConnectedP0(g).value());
    REQUIRE(lhs.Canonicalize() == rhs.Canonicalize(), Describe(g));
  }
  return "";
}

std::string WorkedInstance() {
  const MatQ a = MatQ::Diagonal({Q(1, 2), Q(1, 4)});
  const Invariants mixed = ComputeInvariants(GAk{a, 8});
  REQUIRE(mixed.varpi.ToString() == "1", "varpi " << mixed.varpi.ToString());
  REQUIRE(mixed.p0.ToString() == "6", "p0 " << mixed.p0.ToString());
  REQUIRE(mixed.q == 2, "q");
  REQUIRE(mixed.boundary.ToString() == "xi(3)", "boundary " << mixed.boundary.ToString());
  const Invariants conn = ComputeInvariants(GAk{a, 1});
  REQUIRE(conn.p0.ToString() == "3", "connected p0 " << conn.p0.ToString());
  REQUIRE(conn.boundary.ToString() == "sphere(2)", "connected boundary");
  // log(delta) / log(lambda) in floating point: delta = k / det A, lambda = 2.
  const double mixed_float = std::log(8.0 * 8.0) / std::log(2.0);
  const double conn_float = std::log(8.0) / std::log(2.0);
  REQUIRE(std::fabs(mixed.p0.value().Approx() - mixed_float) < 1e-12, "float mixed");
  REQUIRE(std::fabs(conn.p0.value().Approx() - conn_float) < 1e-12, "float connected");
  return "";
}

std::string MillefeuilleQi() {
  const ConnSpec x{MatQ::Diagonal({Q(1, 2), Q(1, 8)})};
  REQUIRE(QuasiIsometric(Millefeuille{x, 1, 2}, Millefeuille{x, 2, 4}).kind == K::kYes, "(1,2) ~ (2,4)");
  REQUIRE(QuasiIsometric(Millefeuille{x, 1, 2}, Millefeuille{x, 1, 3}).kind == K::kNo, "(1,2) !~ (1,3)");
  REQUIRE(QuasiIsometric(Millefeuille{x, 1, 4}, Millefeuille{x, 2, 4}).kind == K::kNo, "(1,4) !~ (2,4)");
  return "";
}

std::string HullExamples() {
  const std::string index4 = FocalUniversalHull(GAk{MatQ::Diagonal({Q(1, 2), Q(1, 4)}), 1}).ToString();
  REQUIRE(index4 == "R^2 ⋊ (R × {±1}^2)", index4);
  const std::string similarity = FocalUniversalHull(GAk{MatQ::Diagonal({Q(1, 3), Q(1, 3)}), 1}).ToString();
  REQUIRE(similarity == "R^2 ⋊ (R × O(2))", similarity);
  return "";
}

std::string RadicalExample() {
  for (std::int64_t p : {2, 3, 5}) {
    REQUIRE(CheckCenterGamma2(p, 20), "center p=" << p);
    for (const auto& [name, u] : DesignatedUnits(p)) REQUIRE(UnitInfiniteOrder(u), name << " p=" << p);
    const Gamma gamma1(1, p);
    for (int factor = 0; factor < 2; ++factor) {
      for (int coord = 0; coord < 3; ++coord) {
        const long size = ConjugacyOrbitSize(1, p, gamma1.Elementary(factor, coord, FpRat::Constant(p, 1)), 100);
        REQUIRE(size >= 100, "orbit " << size << " p=" << p << " generator " << factor << "," << coord);
      }
    }
    REQUIRE(CheckTwistIdentity(p), "twist p=" << p);
  }
  return "";
}

FocalDescriptor Passage(const FocalDescriptor& g, long n) {
  return std::visit(Overloaded{
                        [&](const FT& d) -> FocalDescriptor { return GAk{MatQ(0), d.m, n}; },
                        [&](const GAk& d) -> FocalDescriptor { return GAk{d.a, d.k, d.index * n}; },
                        [&](const Composite& d) -> FocalDescriptor {
                          return Composite{d.spec, d.varpi, d.q, d.index * n};
                        },
                        [&](const Millefeuille& d) -> FocalDescriptor { return d; },
                    },
                    g);
}

std::string PropertySuites() {
  // Equivalence relation on certified triples.
  std::mt19937_64 rng(10);
  std::vector<FocalDescriptor> corpus;
  for (int i = 0; i < 60; ++i) corpus.push_back(gen::CorpusDescriptor(rng));
  const std::size_t n = corpus.size();
  std::vector<std::vector<K>> rel(n, std::vector<K>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = CommableWithinFocal(corpus[i], corpus[j]).kind;
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  int triples = 0;
  while (triples < 500) {
    const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
    if (rel[a][b] == K::kUndecided || rel[b][c] == K::kUndecided || rel[a][c] == K::kUndecided) continue;
    ++triples;
    REQUIRE(rel[a][a] == K::kYes, "reflexivity " << Describe(corpus[a]));
    REQUIRE(rel[a][b] == rel[b][a], "symmetry " << Describe(corpus[a]) << " " << Describe(corpus[b]));
    REQUIRE(!(rel[a][b] == K::kYes && rel[b][c] == K::kYes) || rel[a][c] == K::kYes,
            "transitivity " << Describe(corpus[a]) << " " << Describe(corpus[c]));
  }

  // (q, varpi) survive passage to G^[n].
  for (int trial = 0; trial < 200; ++trial) {
    const FocalDescriptor g = gen::RandomDescriptor(rng);
    for (long k = 1; k <= 5; ++k) {
      const FocalDescriptor h = Passage(g, k);
      REQUIRE(InvariantQ(g) == InvariantQ(h), "q " << Describe(g) << " index " << k);
      REQUIRE(Compare(InvariantVarpi(g), InvariantVarpi(h)) == Certainty::kEqual,
              "varpi " << Describe(g) << " index " << k);
    }
  }

  // Brute-force oracles.
  for (long m = 1; m <= 5000; ++m) {
    const MaxRoot r = Maxroot(Int(m));
    const auto [b, e] = oracle::BruteMaxroot(m);
    REQUIRE(r.root == b && r.exponent == e, "maxroot " << m);
  }
  for (long k1 = 2; k1 <= 130; ++k1) {
    for (long k2 = 2; k2 <= 130; ++k2) {
      REQUIRE(CommonPower(Int(k1), Int(k2)) == oracle::BruteCommonPower(k1, k2, 12), "common_power " << k1 << " " << k2);
    }
  }
  int positives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + trial % 3;
    const long k1 = 2 + static_cast<long>(rng() % 3);
    const long c = 1 + static_cast<long>(rng() % 3);
    const bool planted = trial % 2 == 0;
    const long k2 = planted ? Pow(Int(k1), static_cast<unsigned long>(c)).get_si() : 2 + static_cast<long>(rng() % 8);
    const MatQ a1 = gen::PowerDiagonal(dim, 2, rng);
    const MatQ a2 = planted ? [&] {
      const MatQ p = oracle::RandomInvertible(dim, rng);
      return p * MatPower(a1, c) * Inverse(p);
    }()
                            : gen::PowerDiagonal(dim, 2, rng);
    const auto got = FindPowerConjugacy(a1, a2, k1, k2);
    const auto expected = oracle::BrutePowerConjugacy(a1, a2, k1, k2, 12);
    REQUIRE(got.has_value() == expected.has_value(), "power_conjugacy " << a1.ToString() << " " << a2.ToString());
    if (got) {
      REQUIRE(std::make_pair(got->n1, got->n2) == *expected, "power_conjugacy exponents");
      ++positives;
    }
  }
  REQUIRE(positives >= 75, "too few power-conjugate instances: " << positives);
  return "";
}

}  // namespace
}  // namespace focal

int main() {
  using focal::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "non-power prefix", 1e-3, focal::NonPowerPrefix},
      {2, "FT invariants and tree oracle", 10, focal::FtInvariants},
      {3, "FT commability within focal groups", 5, focal::TdckfoEquivalence},
      {4, "final corollary three-way agreement", 30, focal::FinalCorollary},
      {5, "p0 identity on 1000 mixed descriptors", 10, focal::P0Identity},
      {6, "worked instance", std::nullopt, focal::WorkedInstance},
      {7, "millefeuille quasi-isometry", 1, focal::MillefeuilleQi},
      {8, "hull examples", std::nullopt, focal::HullExamples},
      {9, "radical example", 60, focal::RadicalExample},
      {10, "property suites", std::nullopt, focal::PropertySuites},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = c.check();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && c.limit && seconds > *c.limit) error = "over time limit";
    const bool pass = error.empty();
    if (!pass) ++failures;
    std::printf("criterion %2d %s  %-40s %10.3f ms", c.number, pass ? "PASS" : "FAIL", c.name.c_str(), seconds * 1e3);
    if (c.limit) std::printf("  (limit %g ms)", *c.limit * 1e3);
    if (!pass) std::printf("  %s", error.c_str());
    std::printf("\n");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
