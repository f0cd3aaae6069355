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

// Exact linear algebra over Q: characteristic polynomials, rational spectra
// with Jordan structure, rational canonical forms, similarity witnesses and
// the power-conjugacy searches used by the classification of the groups
// (R^{d-1} x U_k) x| Z.

#ifndef FOCAL_MATEXACT_HPP_
#define FOCAL_MATEXACT_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "focal/exactnum.hpp"

namespace focal {

// The characteristic polynomial has an irreducible factor of degree >= 2 or a
// non-positive rational root.
class NonRationalSpectrum : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Polynomial with rational coefficients, coefficients[i] multiplies x^i.
// The zero polynomial has no coefficients.
struct PolyQ {
  std::vector<Rat> coefficients;

  PolyQ() = default;
  explicit PolyQ(std::vector<Rat> c);

  static PolyQ Monomial(const Rat& c, std::size_t degree);

  bool IsZero() const { return coefficients.empty(); }
  // -1 for the zero polynomial.
  long Degree() const { return static_cast<long>(coefficients.size()) - 1; }
  const Rat& Leading() const { return coefficients.back(); }
  Rat Evaluate(const Rat& x) const;
  PolyQ Derivative() const;
  PolyQ Monic() const;

  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  bool operator==(const PolyQ& other) const = default;

  // "x^2 + 1", "x - 1/2", "0".
  std::string ToString() const;

 private:
  void Trim();
};

struct PolyDivision {
  PolyQ quotient;
  PolyQ remainder;
};
PolyDivision DivMod(const PolyQ& a, const PolyQ& b);
// Monic gcd; gcd(0, 0) = 0.
PolyQ Gcd(const PolyQ& a, const PolyQ& b);

// Square matrix over Q, row-major. Dimension 0 is allowed.
class MatQ {
 public:
  MatQ() = default;
  explicit MatQ(std::size_t dim);
  static MatQ Identity(std::size_t dim);
  static MatQ Diagonal(const std::vector<Rat>& diagonal);
  // Throws DomainError unless rows form a square array.
  static MatQ FromRows(const std::vector<std::vector<Rat>>& rows);

  std::size_t dim() const { return dim_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  friend MatQ operator*(const MatQ& a, const MatQ& b);
  friend MatQ operator+(const MatQ& a, const MatQ& b);
  friend MatQ operator-(const MatQ& a, const MatQ& b);
  friend MatQ operator*(const Rat& c, const MatQ& a);
  bool operator==(const MatQ& other) const = default;

  bool IsDiagonal() const;
  std::vector<std::vector<Rat>> Rows() const;
  std::string ToString() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Rat> data_;
};

Rat Det(const MatQ& a);
std::size_t Rank(const MatQ& a);
// DomainError on a singular matrix.
MatQ Inverse(const MatQ& a);
// det(x I - A); the empty matrix gives 1.
PolyQ CharPoly(const MatQ& a);
// Negative exponents require an invertible matrix.
MatQ MatPower(const MatQ& a, long n);

struct Eigenvalue {
  Rat value;
  // Jordan block sizes, decreasing.
  std::vector<int> jordan_blocks;

  int Multiplicity() const;
  bool operator==(const Eigenvalue&) const = default;
};

struct SpectralData {
  // Sorted by increasing eigenvalue.
  std::vector<Eigenvalue> eigenvalues;

  bool IsDiagonalizable() const;
  bool operator==(const SpectralData&) const = default;
};

// Throws NonRationalSpectrum outside the family of matrices whose
// characteristic polynomial splits over Q with positive roots.
SpectralData Spectrum(const MatQ& a);
bool IsContracting(const MatQ& a);

// Monic invariant factors of x I - A of positive degree, each dividing the
// next.
std::vector<PolyQ> InvariantFactors(const MatQ& a);
// Block diagonal of companion matrices of the invariant factors.
MatQ FrobeniusForm(const MatQ& a);

// P with P * A * P^{-1} = B when A and B are similar over Q. Throws
// DomainError on a dimension mismatch.
std::optional<MatQ> Conjugate(const MatQ& a, const MatQ& b);

struct PowerConjugacy {
  long n1 = 0;
  long n2 = 0;
  // P * A1^n1 * P^{-1} = A2^n2.
  MatQ witness;
};

// Integers n1, n2 >= 1 with k1^n1 = k2^n2 and A1^n1 similar to A2^n2.
// Both matrices must be contracting with rational positive spectrum.
std::optional<PowerConjugacy> FindPowerConjugacy(const MatQ& a1, const MatQ& a2,
                                                 const Int& k1, const Int& k2);

struct OneParamScale {
  // log(lambda2_i) = t * log(lambda1_i) for every paired eigenvalue.
  LogRatio t;
  std::optional<Rat> rational;
};

// The unique t > 0 with A2 similar to A1^t, if it exists. Throws
// UndecidedError when a log-ratio comparison cannot be certified.
std::optional<OneParamScale> OneParamPower(const MatQ& a1, const MatQ& a2);

}  // namespace focal

#endif  // FOCAL_MATEXACT_HPP_
