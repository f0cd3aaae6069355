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

// Exact arithmetic in F_p(t), Heisenberg groups H_3(F_p(t)) and the groups
// Gamma_i = H_3^2 x|_{(alpha_i, beta_i)} Z built from
//   s = t^2 + t^{-2}, u_1 = 1 + t, u_2 = 1 + t^{-1},
// with checks for the central family of Gamma_2, conjugacy growth in
// Gamma_1 and the P^4 twist identity relating the two constructions.

#ifndef FOCAL_RADICALCHECK_HPP_
#define FOCAL_RADICALCHECK_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "focal/exactnum.hpp"

namespace focal {

// Polynomial over F_p, coefficients in [0, p) from degree 0 upward, no
// trailing zeros. p < 2^31 so products fit in 64 bits.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

  static FpPoly Constant(std::int64_t p, std::int64_t c);
  // c t^e.
  static FpPoly Monomial(std::int64_t p, std::int64_t c, int e);

  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  // -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t lead() const { return c_.back(); }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly Scale(std::int64_t c) const;
  bool operator==(const FpPoly&) const = default;

  std::string ToString() const;

 private:
  void Trim();

  std::int64_t p_ = 2;
  std::vector<std::int64_t> c_;
};

std::pair<FpPoly, FpPoly> DivMod(const FpPoly& a, const FpPoly& b);
// Monic gcd; zero when both are zero.
FpPoly Gcd(const FpPoly& a, const FpPoly& b);
// Inverse of c modulo p; DomainError when c = 0 mod p.
std::int64_t InverseModP(std::int64_t c, std::int64_t p);
bool IsPrime(std::int64_t p);

// Element of F_p(t): reduced fraction with monic denominator.
class FpRat {
 public:
  FpRat() = default;
  FpRat(FpPoly num, FpPoly den);

  static FpRat Constant(std::int64_t p, std::int64_t c);
  // c t^e for any integer e.
  static FpRat Monomial(std::int64_t p, std::int64_t c, int e);

  std::int64_t p() const { return num_.p(); }
  const FpPoly& num() const { return num_; }
  const FpPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  // Nonzero scalar.
  bool is_constant() const;
  // Denominator is a power of t.
  bool is_laurent() const;

  FpRat operator+(const FpRat& o) const;
  FpRat operator-(const FpRat& o) const;
  FpRat operator-() const;
  FpRat operator*(const FpRat& o) const;
  FpRat operator/(const FpRat& o) const;
  FpRat Inverse() const;
  // Integer powers; negative exponents need a nonzero base.
  FpRat Pow(long e) const;
  bool operator==(const FpRat&) const = default;

  std::string ToString() const;

 private:
  FpPoly num_;
  FpPoly den_;
};

// (x, y, z) <-> [[1, x, z], [0, 1, y], [0, 0, 1]].
struct H3Elem {
  FpRat x, y, z;
  bool operator==(const H3Elem&) const = default;

  static H3Elem Identity(std::int64_t p);
  bool is_laurent() const { return x.is_laurent() && y.is_laurent() && z.is_laurent(); }
  std::string ToString() const;
};

H3Elem H3Mul(const H3Elem& g, const H3Elem& h);
H3Elem H3Inv(const H3Elem& g);
// g h g^{-1} h^{-1}.
H3Elem H3Commutator(const H3Elem& g, const H3Elem& h);

// phi(u, v, uv): (x, y, z) -> (ux, vy, uvz).
struct AutTriple {
  FpRat u, v;
  bool operator==(const AutTriple&) const = default;

  H3Elem Apply(const H3Elem& g) const;
  AutTriple Pow(long n) const;
  std::string ToString() const;
};

// a o b.
AutTriple Compose(const AutTriple& a, const AutTriple& b);
// psi(v) = phi(1, v, v).
AutTriple Psi(const FpRat& v);

struct RadicalUnits {
  FpRat s, u1, u2;
};
RadicalUnits MakeUnits(std::int64_t p);

// (alpha_i, beta_i) for i in {1, 2}.
std::pair<AutTriple, AutTriple> MakeGenerators(int i, std::int64_t p);

// ((a, b), n) in H_3^2 x| Z.
struct GammaElem {
  H3Elem a, b;
  long n = 0;
  bool operator==(const GammaElem&) const = default;

  static GammaElem Identity(std::int64_t p);
  bool is_laurent() const { return a.is_laurent() && b.is_laurent(); }
};

class Gamma {
 public:
  Gamma(int i, std::int64_t p);

  int index() const { return i_; }
  std::int64_t p() const { return p_; }
  const AutTriple& alpha() const { return alpha_; }
  const AutTriple& beta() const { return beta_; }

  GammaElem Mul(const GammaElem& g, const GammaElem& h) const;
  GammaElem Inv(const GammaElem& g) const;
  GammaElem Conjugate(const GammaElem& h, const GammaElem& g) const;
  // ((1, 1), 1).
  GammaElem ZGenerator() const;
  // Coordinate `coord` in {0, 1, 2} of factor `factor` in {0, 1} set to c,
  // all else trivial.
  GammaElem Elementary(int factor, int coord, const FpRat& c) const;

 private:
  int i_;
  std::int64_t p_;
  AutTriple alpha_, beta_;
};

// The five units whose non-torsion drives conjugacy growth in Gamma_1:
// s, s^{-1}u_2, u_2, s^{-1}u_1, u_1.
std::vector<std::pair<std::string, FpRat>> DesignatedUnits(std::int64_t p);

// Whether u has infinite order in F_p(t)^x. DomainError on zero.
bool UnitInfiniteOrder(const FpRat& u);

// Distinct Laurent polynomials with coefficients in F_p and exponents in
// [-degree, degree], drawn deterministically from `seed`.
std::vector<FpRat> SampleLaurent(std::int64_t p, int count, int degree, std::uint64_t seed);

// Every sampled ((1, (0, 0, z)), 0) commutes with the Z-generator, its
// inverse and the elementary generators t^e in each coordinate for
// |e| <= 1, and beta_2 fixes (0, 0, z).
bool CheckCenterGamma2(std::int64_t p, int samples, int degree = 3);

// Number of distinct conjugates of g by the powers -bound..bound of the
// Z-generator, and of the elementary coordinate generators as well when
// `coordinate_conjugators` is set. DomainError on the identity or a bound
// outside [0, 1000].
long ConjugacyOrbitSize(int i, std::int64_t p, const GammaElem& g, long bound,
                        bool coordinate_conjugators = false);

// (alpha_1, beta_1, gamma_1, delta_1) equals (alpha_2, beta_2, delta_2,
// gamma_2) composed with (psi(u_1^{-1}), psi(u_1), psi(u_1), psi(u_1^{-1}))
// componentwise, where gamma_1 = beta_1, delta_1 = alpha_1, gamma_2 =
// alpha_2 and delta_2 = beta_2; and u_1 has t-adic valuation 0.
bool CheckTwistIdentity(std::int64_t p);

}  // namespace focal

#endif  // FOCAL_RADICALCHECK_HPP_
