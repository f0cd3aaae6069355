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

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <vector>

namespace focal {

namespace {

// Owning wrapper around an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~BigFloat() { mpfr_clear(value_); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

// Natural log of a positive integer, rounded in direction `rnd`.
void LogInt(BigFloat& out, const Int& n, mpfr_rnd_t rnd) {
  mpfr_set_z(out.get(), n.get_mpz_t(), rnd);
  mpfr_log(out.get(), out.get(), rnd);
}

// Encloses log(r) for r > 0 in [lo, hi].
void LogRatBounds(const Rat& r, BigFloat& lo, BigFloat& hi, mpfr_prec_t bits) {
  BigFloat num_lo(bits), num_hi(bits), den_lo(bits), den_hi(bits);
  LogInt(num_lo, r.get_num(), MPFR_RNDD);
  LogInt(num_hi, r.get_num(), MPFR_RNDU);
  LogInt(den_lo, r.get_den(), MPFR_RNDD);
  LogInt(den_hi, r.get_den(), MPFR_RNDU);
  mpfr_sub(lo.get(), num_lo.get(), den_hi.get(), MPFR_RNDD);
  mpfr_sub(hi.get(), num_hi.get(), den_lo.get(), MPFR_RNDU);
}

// Enclosure of log(a)/log(b); returns false when the denominator enclosure
// touches zero (the caller treats that as "no information").
bool RatioBounds(const LogRatio& x, BigFloat& lo, BigFloat& hi,
                 mpfr_prec_t bits) {
  BigFloat la(bits), ha(bits), lb(bits), hb(bits);
  LogRatBounds(x.a(), la, ha, bits);
  LogRatBounds(x.b(), lb, hb, bits);
  if (mpfr_sgn(lb.get()) <= 0) return false;
  if (mpfr_sgn(la.get()) >= 0) {
    mpfr_div(lo.get(), la.get(), hb.get(), MPFR_RNDD);
  } else {
    mpfr_div(lo.get(), la.get(), lb.get(), MPFR_RNDD);
  }
  mpfr_div(hi.get(), ha.get(), lb.get(), MPFR_RNDU);
  return true;
}

long Gcd(long a, long b) { return std::gcd(a, b); }

Rat MakeRat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

void RequireGreaterThanOne(const Rat& r, const char* what) {
  if (r <= 1) {
    throw DomainError(std::string("LogRatio ") + what + " must exceed 1, got " +
                      ToString(r));
  }
}

}  // namespace

Rat ParseRat(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) {
    throw DomainError("malformed rational: '" + std::string(text) + "'");
  }
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw DomainError("zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string ToString(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string ToString(const Int& n) { return n.get_str(); }

Rat Pow(const Rat& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("zero raised to a negative power");
    return Pow(Rat(1) / base, -exponent);
  }
  Int num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return MakeRat(num, den);
}

Int Pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

PrimeFactorization Factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: zero");
  return Factorize(Int(std::to_string(n), 10));
}

namespace {

// Brent's variant of Pollard rho; n is odd, composite and not a prime power
// of a small prime. Returns a nontrivial divisor.
Int PollardBrent(const Int& n) {
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    auto step = [&](Int& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    for (unsigned long r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          Int d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g == n) {
      do {
        step(ys);
        Int d = x - ys;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void SplitLarge(const Int& n, PrimeFactorization& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out[n] += 1;
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    SplitLarge(r, out);
    SplitLarge(r, out);
    return;
  }
  const Int d = PollardBrent(n);
  SplitLarge(d, out);
  SplitLarge(Int(n / d), out);
}

}  // namespace

PrimeFactorization Factorize(const Int& n) {
  if (n <= 0) throw DomainError("factorize: non-positive input " + n.get_str());
  PrimeFactorization out;
  Int rest = n;
  auto strip = [&](unsigned long p) {
    long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e != 0) out.emplace(Int(p), e);
  };
  strip(2);
  strip(3);
  strip(5);
  // Wheel modulo 30 over the residues coprime to 30, up to a fixed bound.
  static constexpr unsigned long kGaps[] = {4, 2, 4, 2, 4, 6, 2, 6};
  static constexpr unsigned long kTrialBound = 1UL << 16;
  unsigned long p = 7;
  for (int i = 0; rest > 1 && p < kTrialBound; i = (i + 1) % 8) {
    if (Int(p) * p > rest) break;
    strip(p);
    p += kGaps[i];
  }
  // Every prime factor of the cofactor now exceeds the trial bound.
  if (Int(p) * p > rest) {
    if (rest > 1) out[rest] += 1;
  } else {
    SplitLarge(rest, out);
  }
  return out;
}

PrimeFactorization FactorizeRat(const Rat& r) {
  if (r <= 0) throw DomainError("factorize: non-positive rational " + ToString(r));
  Rat c = r;
  c.canonicalize();
  PrimeFactorization out = Factorize(Int(c.get_num()));
  for (const auto& [p, e] : Factorize(Int(c.get_den()))) out[p] -= e;
  return out;
}

Rat Reconstruct(const PrimeFactorization& f) {
  Int num = 1, den = 1;
  for (const auto& [p, e] : f) {
    if (e > 0) num *= Pow(p, static_cast<unsigned long>(e));
    if (e < 0) den *= Pow(p, static_cast<unsigned long>(-e));
  }
  return MakeRat(num, den);
}

namespace {

// n = root^e with e maximal, for n >= 2, by exact integer roots.
MaxRoot PerfectPower(const Int& n) {
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (long e = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)); e >= 2; --e) {
      Int r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(e)) != 0) return {r, e};
    }
  }
  return {n, 1};
}

}  // namespace

MaxRoot Maxroot(const Int& n) {
  if (n < 1) throw DomainError("maxroot: input must be >= 1");
  if (n == 1) return {Int(1), 1};
  return PerfectPower(n);
}

RatRoot MaxrootRat(const Rat& r) {
  if (r <= 0 || r == 1) throw DomainError("maxroot: rational must be positive and != 1");
  const Int num(r.get_num());
  const Int den(r.get_den());
  if (den == 1) {
    const MaxRoot m = PerfectPower(num);
    return {Rat(m.root), m.exponent};
  }
  if (num == 1) {
    const MaxRoot m = PerfectPower(den);
    return {MakeRat(Int(1), m.root), m.exponent};
  }
  // num^(1/e) and den^(1/e) are both integral iff e divides both exponents.
  const MaxRoot a = PerfectPower(num);
  const MaxRoot b = PerfectPower(den);
  const long e = Gcd(a.exponent, b.exponent);
  return {MakeRat(Pow(a.root, static_cast<unsigned long>(a.exponent / e)),
                  Pow(b.root, static_cast<unsigned long>(b.exponent / e))),
          e};
}

std::optional<std::pair<long, long>> CommonPower(const Int& k1, const Int& k2) {
  if (k1 < 2 || k2 < 2) throw DomainError("common_power: arguments must be >= 2");
  const MaxRoot r1 = Maxroot(k1);
  const MaxRoot r2 = Maxroot(k2);
  if (r1.root != r2.root) return std::nullopt;
  // k1 = q^e1, k2 = q^e2: the minimal solution of e1*n1 = e2*n2.
  const long g = Gcd(r1.exponent, r2.exponent);
  return std::make_pair(r2.exponent / g, r1.exponent / g);
}

std::optional<Dependence> MultDependent(const Rat& a, const Rat& b) {
  if (a <= 0 || b <= 0) throw DomainError("mult_dependent: arguments must be positive");
  if (a == 1 || b == 1) throw DomainError("mult_dependent: degenerate argument 1");
  // Non-power roots have primitive exponent vectors, so a and b are
  // dependent iff their roots agree up to inversion.
  const RatRoot ra = MaxrootRat(a);
  const RatRoot rb = MaxrootRat(b);
  int sign = 0;
  if (ra.root == rb.root) {
    sign = 1;
  } else if (ra.root * rb.root == 1) {
    sign = -1;
  } else {
    return std::nullopt;
  }
  const long g = Gcd(ra.exponent, rb.exponent);
  return Dependence{sign * rb.exponent / g, ra.exponent / g};
}

LogRatio::LogRatio(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  RequireGreaterThanOne(a_, "numerator argument");
  RequireGreaterThanOne(b_, "denominator argument");
}

LogRatio LogRatio::FromRational(const Rat& c) {
  if (c <= 0) throw DomainError("LogRatio value must be positive, got " + focal::ToString(c));
  const Rat two(2);
  return LogRatio(Pow(two, c.get_num().get_si()), Pow(two, c.get_den().get_si()));
}

std::optional<Rat> LogRatio::RationalValue() const {
  const auto dep = MultDependent(a_, b_);
  if (!dep) return std::nullopt;
  // a^m = b^n  =>  log a / log b = n / m.
  return MakeRat(Int(dep->n), Int(dep->m));
}

double LogRatio::Approx() const {
  return std::log(a_.get_d()) / std::log(b_.get_d());
}

LogRatio::Canonical LogRatio::Canonicalize() const {
  if (auto v = RationalValue()) return {*v, Rat(1), Rat(1)};
  const RatRoot ra = MaxrootRat(a_);
  const RatRoot rb = MaxrootRat(b_);
  return {MakeRat(Int(ra.exponent), Int(rb.exponent)), ra.root, rb.root};
}

std::string LogRatio::ToString() const {
  const Canonical c = Canonicalize();
  if (c.root_a == 1) return focal::ToString(c.coefficient);
  const Rat a = Pow(c.root_a, c.coefficient.get_num().get_si());
  const Rat b = Pow(c.root_b, c.coefficient.get_den().get_si());
  return "log(" + focal::ToString(a) + ")/log(" + focal::ToString(b) + ")";
}

std::pair<double, double> Enclose(const LogRatio& x, long bits) {
  BigFloat lo(bits), hi(bits);
  if (!RatioBounds(x, lo, hi, bits)) {
    return {-std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

LogCompare LogRatioEq(const LogRatio& x, const LogRatio& y) {
  LogCompare out;
  out.estimate_x = x.Approx();
  out.estimate_y = y.Approx();

  const auto rx = x.RationalValue();
  const auto ry = y.RationalValue();
  if (rx && ry) {
    out.verdict = *rx == *ry ? Certainty::kEqual : Certainty::kNotEqual;
    return out;
  }
  // A rational value never equals an irrational one, and log a / log b is
  // irrational exactly when a and b are multiplicatively independent.
  if (rx.has_value() != ry.has_value()) {
    out.verdict = Certainty::kNotEqual;
    return out;
  }
  // Cross dependence: x = c * y with c rational, so x = y iff c = 1.
  const auto da = MultDependent(x.a(), y.a());
  const auto db = MultDependent(x.b(), y.b());
  if (da && db) {
    // log xa = (na/ma) log ya, log xb = (nb/mb) log yb.
    const Rat c = MakeRat(Int(da->n) * db->m, Int(da->m) * db->n);
    out.verdict = c == 1 ? Certainty::kEqual : Certainty::kNotEqual;
    return out;
  }

  for (long bits : {64L, 128L, 256L}) {
    BigFloat xl(bits), xh(bits), yl(bits), yh(bits);
    const bool okx = RatioBounds(x, xl, xh, bits);
    const bool oky = RatioBounds(y, yl, yh, bits);
    if (okx && oky) {
      if (mpfr_less_p(xh.get(), yl.get()) || mpfr_less_p(yh.get(), xl.get())) {
        out.verdict = Certainty::kNotEqual;
        return out;
      }
      if (bits == 256) {
        BigFloat wx(bits), wy(bits);
        mpfr_sub(wx.get(), xh.get(), xl.get(), MPFR_RNDU);
        mpfr_sub(wy.get(), yh.get(), yl.get(), MPFR_RNDU);
        out.width = std::max(mpfr_get_d(wx.get(), MPFR_RNDU),
                             mpfr_get_d(wy.get(), MPFR_RNDU));
      }
    } else if (bits == 256) {
      out.width = std::numeric_limits<double>::infinity();
    }
  }
  out.verdict = Certainty::kUndecided;
  return out;
}

LogRatio LogRatioAddOne(const LogRatio& x) {
  return LogRatio(x.a() * x.b(), x.b());
}

LogRatio LogRatioChainMul(const LogRatio& x, const LogRatio& y) {
  const auto dep = MultDependent(y.a(), x.b());
  if (!dep) {
    throw DomainError("chain_mul: inner bases " + ToString(x.b()) + " and " +
                      ToString(y.a()) + " are multiplicatively independent");
  }
  // y.a^m = x.b^n, so log y.a / log x.b = n / m.
  return LogRatio(Pow(x.a(), dep->n), Pow(y.b(), dep->m));
}

std::optional<LogRatio> LogRatioAdd(const LogRatio& x, const LogRatio& y) {
  const auto dep = MultDependent(y.b(), x.b());
  if (!dep) return std::nullopt;
  // y.b^m = x.b^n: rewrite both terms over log(x.b^n).
  return LogRatio(Pow(x.a(), dep->n) * Pow(y.a(), dep->m), Pow(x.b(), dep->n));
}

LogRatio LogRatioScale(const LogRatio& x, const Rat& c) {
  if (c <= 0) throw DomainError("LogRatio scale must be positive");
  return LogRatio(Pow(x.a(), c.get_num().get_si()),
                  Pow(x.b(), c.get_den().get_si()));
}

}  // namespace focal
