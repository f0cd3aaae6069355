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

// Exact integer and rational kernels: factorization, maximal roots, common
// powers, multiplicative dependence of rationals, and exact arithmetic on
// ratios of logarithms log(a)/log(b).

#ifndef FOCAL_EXACTNUM_HPP_
#define FOCAL_EXACTNUM_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace focal {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an argument is outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exact decision cannot be certified (log-ratio comparisons
// whose interval enclosures still overlap at full precision).
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "-?[0-9]+(/[0-9]+)?" into a canonical rational. Throws DomainError on
// malformed text or a zero denominator.
Rat ParseRat(std::string_view text);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string ToString(const Rat& r);
std::string ToString(const Int& n);

Rat Pow(const Rat& base, long exponent);
Int Pow(const Int& base, unsigned long exponent);

// prime -> nonzero exponent, keys increasing.
using PrimeFactorization = std::map<Int, long>;

PrimeFactorization Factorize(std::uint64_t n);
PrimeFactorization Factorize(const Int& n);
// Signed exponents; r must be positive.
PrimeFactorization FactorizeRat(const Rat& r);
Rat Reconstruct(const PrimeFactorization& f);

struct MaxRoot {
  Int root;
  long exponent = 1;
};

// n = root^exponent with root a non-power; maxroot(1) = (1, 1).
MaxRoot Maxroot(const Int& n);
// Same for a positive rational r != 1: r = root^exponent, root > 0 not a
// proper power of a rational, exponent > 0.
struct RatRoot {
  Rat root;
  long exponent = 1;
};
RatRoot MaxrootRat(const Rat& r);

// Componentwise-minimal (n1, n2) with k1^n1 = k2^n2, if any.
std::optional<std::pair<long, long>> CommonPower(const Int& k1, const Int& k2);

// a^m = b^n with gcd(m, n) = 1 and n > 0.
struct Dependence {
  long m = 0;
  long n = 0;
};
std::optional<Dependence> MultDependent(const Rat& a, const Rat& b);

// The positive real number log(a) / log(b) with rationals a, b > 1.
class LogRatio {
 public:
  LogRatio(Rat a, Rat b);

  // A positive rational c as log(2^num) / log(2^den).
  static LogRatio FromRational(const Rat& c);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }

  // The exact value when a and b are multiplicatively dependent.
  std::optional<Rat> RationalValue() const;
  double Approx() const;

  // Canonical form: coefficient * log(root_a) / log(root_b) with the roots
  // non-powers. A rational value is stored with root_a = root_b = 1.
  struct Canonical {
    Rat coefficient;
    Rat root_a;
    Rat root_b;
    bool operator==(const Canonical&) const = default;
  };
  Canonical Canonicalize() const;

  // "3", "1/2" or "log(8)/log(3)" (rational value wins when certified).
  std::string ToString() const;

 private:
  Rat a_;
  Rat b_;
};

enum class Certainty { kEqual, kNotEqual, kUndecided };

struct LogCompare {
  Certainty verdict = Certainty::kUndecided;
  // Interval midpoints and the larger of the two widths; filled for every
  // verdict reached through interval arithmetic.
  double estimate_x = 0.0;
  double estimate_y = 0.0;
  double width = 0.0;
};

LogCompare LogRatioEq(const LogRatio& x, const LogRatio& y);

// Rigorous enclosure [lo, hi] of log(a)/log(b) with `bits` of working
// precision, rounded outward to doubles.
std::pair<double, double> Enclose(const LogRatio& x, long bits);

// 1 + x.
LogRatio LogRatioAddOne(const LogRatio& x);
// x * y; requires x.b and y.a multiplicatively dependent, DomainError otherwise.
LogRatio LogRatioChainMul(const LogRatio& x, const LogRatio& y);
// x + y when x.b and y.b are multiplicatively dependent.
std::optional<LogRatio> LogRatioAdd(const LogRatio& x, const LogRatio& y);
// c * x for a positive rational c.
LogRatio LogRatioScale(const LogRatio& x, const Rat& c);

}  // namespace focal

#endif  // FOCAL_EXACTNUM_HPP_
