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

#include "focal/radicalcheck.hpp"

#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

namespace focal {

namespace {

std::int64_t Mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

void RequireSameField(std::int64_t p, std::int64_t q) {
  if (p != q) throw DomainError("field mismatch: F_" + std::to_string(p) + " vs F_" + std::to_string(q));
}

}  // namespace

bool IsPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t InverseModP(std::int64_t c, std::int64_t p) {
  std::int64_t a = Mod(c, p);
  if (a == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return Mod(s0, p);
}

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) throw DomainError("modulus out of range");
  for (auto& c : c_) c = Mod(c, p_);
  Trim();
}

FpPoly FpPoly::Constant(std::int64_t p, std::int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::Monomial(std::int64_t p, std::int64_t c, int e) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(e) + 1, 0);
  v.back() = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::Trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  RequireSameField(p_, o.p_);
  FpPoly r = c_.size() >= o.c_.size() ? *this : o;
  const FpPoly& s = c_.size() >= o.c_.size() ? o : *this;
  for (std::size_t i = 0; i < s.c_.size(); ++i) r.c_[i] = Mod(r.c_[i] + s.c_[i], p_);
  r.Trim();
  return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const { return *this + o.Scale(p_ - 1); }

FpPoly FpPoly::operator*(const FpPoly& o) const {
  RequireSameField(p_, o.p_);
  FpPoly r;
  r.p_ = p_;
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = (r.c_[i + j] + c_[i] * o.c_[j]) % p_;
  }
  r.Trim();
  return r;
}

FpPoly FpPoly::Scale(std::int64_t c) const {
  FpPoly r = *this;
  const std::int64_t m = Mod(c, p_);
  for (auto& x : r.c_) x = x * m % p_;
  r.Trim();
  return r;
}

std::string FpPoly::ToString() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::int64_t c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (c != 1 || i == 0) out << c;
    if (i >= 1) out << "t";
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

std::pair<FpPoly, FpPoly> DivMod(const FpPoly& a, const FpPoly& b) {
  RequireSameField(a.p(), b.p());
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const std::int64_t p = a.p();
  const std::int64_t inv = InverseModP(b.lead(), p);
  std::vector<std::int64_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<std::int64_t> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, 0);
  for (int i = a.degree(); i >= db; --i) {
    const std::int64_t c = r[static_cast<std::size_t>(i)] * inv % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(i - db + j)];
      x = Mod(x - c * bc[static_cast<std::size_t>(j)] % p, p);
    }
  }
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly Gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = DivMod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.Scale(InverseModP(x.lead(), x.p()));
}

FpRat::FpRat(FpPoly num, FpPoly den) {
  RequireSameField(num.p(), den.p());
  if (den.is_zero()) throw DomainError("zero denominator in F_p(t)");
  if (num.is_zero()) {
    num_ = num;
    den_ = FpPoly::Constant(num.p(), 1);
    return;
  }
  const FpPoly g = Gcd(num, den);
  num = DivMod(num, g).first;
  den = DivMod(den, g).first;
  const std::int64_t inv = InverseModP(den.lead(), den.p());
  num_ = num.Scale(inv);
  den_ = den.Scale(inv);
}

FpRat FpRat::Constant(std::int64_t p, std::int64_t c) {
  return FpRat(FpPoly::Constant(p, c), FpPoly::Constant(p, 1));
}

FpRat FpRat::Monomial(std::int64_t p, std::int64_t c, int e) {
  if (e >= 0) return FpRat(FpPoly::Monomial(p, c, e), FpPoly::Constant(p, 1));
  return FpRat(FpPoly::Constant(p, c), FpPoly::Monomial(p, 1, -e));
}

bool FpRat::is_constant() const { return num_.degree() == 0 && den_.degree() == 0; }

bool FpRat::is_laurent() const {
  const auto& d = den_.coeffs();
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    if (d[i] != 0) return false;
  }
  return true;
}

FpRat FpRat::operator+(const FpRat& o) const {
  if (den_ == o.den_) return FpRat(num_ + o.num_, den_);
  return FpRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FpRat FpRat::operator-() const { return FpRat(num_.Scale(p() - 1), den_); }

FpRat FpRat::operator-(const FpRat& o) const { return *this + (-o); }

FpRat FpRat::operator*(const FpRat& o) const {
  if (is_zero() || o.is_zero()) return Constant(p(), 0);
  // Cross-cancel so the final reduction works on small operands.
  const FpPoly g1 = Gcd(num_, o.den_);
  const FpPoly g2 = Gcd(o.num_, den_);
  return FpRat(DivMod(num_, g1).first * DivMod(o.num_, g2).first,
               DivMod(den_, g2).first * DivMod(o.den_, g1).first);
}

FpRat FpRat::Inverse() const {
  if (is_zero()) throw DomainError("division by zero in F_p(t)");
  return FpRat(den_, num_);
}

FpRat FpRat::operator/(const FpRat& o) const { return *this * o.Inverse(); }

FpRat FpRat::Pow(long e) const {
  FpRat base = e < 0 ? Inverse() : *this;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FpRat r = Constant(p(), 1);
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

std::string FpRat::ToString() const {
  if (den_.degree() == 0) return num_.ToString();
  return "(" + num_.ToString() + ")/(" + den_.ToString() + ")";
}

H3Elem H3Elem::Identity(std::int64_t p) {
  const FpRat zero = FpRat::Constant(p, 0);
  return {zero, zero, zero};
}

std::string H3Elem::ToString() const {
  return "(" + x.ToString() + ", " + y.ToString() + ", " + z.ToString() + ")";
}

H3Elem H3Mul(const H3Elem& g, const H3Elem& h) {
  RequireSameField(g.x.p(), h.x.p());
  return {g.x + h.x, g.y + h.y, g.z + h.z + g.x * h.y};
}

H3Elem H3Inv(const H3Elem& g) { return {-g.x, -g.y, g.x * g.y - g.z}; }

H3Elem H3Commutator(const H3Elem& g, const H3Elem& h) {
  return H3Mul(H3Mul(g, h), H3Mul(H3Inv(g), H3Inv(h)));
}

H3Elem AutTriple::Apply(const H3Elem& g) const { return {u * g.x, v * g.y, u * v * g.z}; }

AutTriple AutTriple::Pow(long n) const { return {u.Pow(n), v.Pow(n)}; }

std::string AutTriple::ToString() const {
  return "phi(" + u.ToString() + ", " + v.ToString() + ", " + (u * v).ToString() + ")";
}

AutTriple Compose(const AutTriple& a, const AutTriple& b) { return {a.u * b.u, a.v * b.v}; }

AutTriple Psi(const FpRat& v) { return {FpRat::Constant(v.p(), 1), v}; }

RadicalUnits MakeUnits(std::int64_t p) {
  if (!IsPrime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const FpRat one = FpRat::Constant(p, 1);
  return {FpRat::Monomial(p, 1, 2) + FpRat::Monomial(p, 1, -2), one + FpRat::Monomial(p, 1, 1),
          one + FpRat::Monomial(p, 1, -1)};
}

std::pair<AutTriple, AutTriple> MakeGenerators(int i, std::int64_t p) {
  const RadicalUnits w = MakeUnits(p);
  const FpRat si = w.s.Inverse();
  if (i == 1) return {{w.s, si * w.u2}, {w.s, si * w.u1}};
  if (i == 2) return {{w.s, si * w.u2 * w.u1}, {w.s, si}};
  throw DomainError("generator index must be 1 or 2");
}

GammaElem GammaElem::Identity(std::int64_t p) { return {H3Elem::Identity(p), H3Elem::Identity(p), 0}; }

Gamma::Gamma(int i, std::int64_t p) : i_(i), p_(p) {
  std::tie(alpha_, beta_) = MakeGenerators(i, p);
}

GammaElem Gamma::Mul(const GammaElem& g, const GammaElem& h) const {
  const AutTriple a = alpha_.Pow(g.n);
  const AutTriple b = beta_.Pow(g.n);
  return {H3Mul(g.a, a.Apply(h.a)), H3Mul(g.b, b.Apply(h.b)), g.n + h.n};
}

GammaElem Gamma::Inv(const GammaElem& g) const {
  const AutTriple a = alpha_.Pow(-g.n);
  const AutTriple b = beta_.Pow(-g.n);
  return {a.Apply(H3Inv(g.a)), b.Apply(H3Inv(g.b)), -g.n};
}

GammaElem Gamma::Conjugate(const GammaElem& h, const GammaElem& g) const { return Mul(Mul(h, g), Inv(h)); }

GammaElem Gamma::ZGenerator() const {
  GammaElem z = GammaElem::Identity(p_);
  z.n = 1;
  return z;
}

GammaElem Gamma::Elementary(int factor, int coord, const FpRat& c) const {
  GammaElem g = GammaElem::Identity(p_);
  H3Elem& h = factor == 0 ? g.a : g.b;
  if (coord == 0) {
    h.x = c;
  } else if (coord == 1) {
    h.y = c;
  } else {
    h.z = c;
  }
  return g;
}

std::vector<std::pair<std::string, FpRat>> DesignatedUnits(std::int64_t p) {
  const RadicalUnits w = MakeUnits(p);
  const FpRat si = w.s.Inverse();
  return {{"s", w.s}, {"s^-1 u2", si * w.u2}, {"u2", w.u2}, {"s^-1 u1", si * w.u1}, {"u1", w.u1}};
}

bool UnitInfiniteOrder(const FpRat& u) {
  if (u.is_zero()) throw DomainError("zero is not a unit");
  if (!u.is_constant()) return true;
  // A nonzero constant c satisfies c^k = 1 for some k <= p - 1.
  const std::int64_t p = u.p();
  const std::int64_t c = u.num().lead();
  std::int64_t x = c;
  for (std::int64_t k = 1; k < p; ++k) {
    if (x == 1) return false;
    x = x * c % p;
  }
  throw std::logic_error("nonzero constant without finite order");
}

std::vector<FpRat> SampleLaurent(std::int64_t p, int count, int degree, std::uint64_t seed) {
  // p^(2 degree + 1) Laurent polynomials are available.
  double available = 1;
  for (int i = 0; i < 2 * degree + 1 && available < count; ++i) available *= static_cast<double>(p);
  if (available < count) throw DomainError("not enough Laurent polynomials of that degree");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
  std::vector<FpRat> out;
  std::set<std::string> seen;
  while (static_cast<int>(out.size()) < count) {
    FpRat z = FpRat::Constant(p, 0);
    for (int e = -degree; e <= degree; ++e) z = z + FpRat::Monomial(p, coeff(rng), e);
    if (seen.insert(z.ToString()).second) out.push_back(z);
  }
  return out;
}

bool CheckCenterGamma2(std::int64_t p, int samples, int degree) {
  const Gamma gamma(2, p);
  std::vector<GammaElem> gens = {gamma.ZGenerator(), gamma.Inv(gamma.ZGenerator())};
  for (int factor = 0; factor < 2; ++factor) {
    for (int coord = 0; coord < 3; ++coord) {
      for (int e = -1; e <= 1; ++e) gens.push_back(gamma.Elementary(factor, coord, FpRat::Monomial(p, 1, e)));
    }
  }
  const FpRat zero = FpRat::Constant(p, 0);
  for (const FpRat& z : SampleLaurent(p, samples, degree, 0x5eed + static_cast<std::uint64_t>(p))) {
    const H3Elem center{zero, zero, z};
    if (!(gamma.beta().Apply(center) == center)) return false;
    const GammaElem c = gamma.Elementary(1, 2, z);
    for (const GammaElem& g : gens) {
      if (!(gamma.Mul(c, g) == gamma.Mul(g, c))) return false;
    }
  }
  return true;
}

namespace {

std::string Key(const GammaElem& g) {
  return g.a.ToString() + "|" + g.b.ToString() + "|" + std::to_string(g.n);
}

}  // namespace

long ConjugacyOrbitSize(int i, std::int64_t p, const GammaElem& g, long bound, bool coordinate_conjugators) {
  const Gamma gamma(i, p);
  if (g == GammaElem::Identity(p)) throw DomainError("conjugacy orbit of the identity");
  if (bound < 0 || bound > 1000) throw DomainError("conjugation bound must lie in [0, 1000]");
  std::unordered_set<std::string> seen;
  auto powers = [&](const GammaElem& h) {
    GammaElem up = GammaElem::Identity(p);
    GammaElem down = up;
    const GammaElem inv = gamma.Inv(h);
    seen.insert(Key(g));
    for (long j = 1; j <= bound; ++j) {
      up = gamma.Mul(up, h);
      down = gamma.Mul(down, inv);
      seen.insert(Key(gamma.Conjugate(up, g)));
      seen.insert(Key(gamma.Conjugate(down, g)));
    }
  };
  // z^j ((A, B), n) z^{-j} = ((alpha^j A, beta^j B), n).
  seen.insert(Key(g));
  for (int sign : {1, -1}) {
    const AutTriple a1 = gamma.alpha().Pow(sign), b1 = gamma.beta().Pow(sign);
    AutTriple a = a1, b = b1;
    for (long j = 1; j <= bound; ++j) {
      seen.insert(Key({a.Apply(g.a), b.Apply(g.b), g.n}));
      a = Compose(a, a1);
      b = Compose(b, b1);
    }
  }
  if (coordinate_conjugators) {
    for (int factor = 0; factor < 2; ++factor) {
      for (int coord = 0; coord < 3; ++coord) powers(gamma.Elementary(factor, coord, FpRat::Constant(p, 1)));
    }
  }
  return static_cast<long>(seen.size());
}

namespace {

// t-adic valuation of a nonzero element.
int TAdicValuation(const FpRat& u) {
  auto low = [](const FpPoly& f) {
    int k = 0;
    while (f.coeffs()[static_cast<std::size_t>(k)] == 0) ++k;
    return k;
  };
  return low(u.num()) - low(u.den());
}

}  // namespace

bool CheckTwistIdentity(std::int64_t p) {
  const auto [alpha1, beta1] = MakeGenerators(1, p);
  const auto [alpha2, beta2] = MakeGenerators(2, p);
  const FpRat u1 = MakeUnits(p).u1;
  const AutTriple gamma1 = beta1, delta1 = alpha1;
  const AutTriple gamma2 = alpha2, delta2 = beta2;
  const std::vector<AutTriple> lhs = {alpha1, beta1, gamma1, delta1};
  const std::vector<AutTriple> rhs = {Compose(alpha2, Psi(u1.Inverse())), Compose(beta2, Psi(u1)),
                                      Compose(delta2, Psi(u1)), Compose(gamma2, Psi(u1.Inverse()))};
  return lhs == rhs && TAdicValuation(u1) == 0;
}

}  // namespace focal
