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

// Symbolic descriptors of focal locally compact groups and their
// classification invariants: type, s, q, varpi, p0, boundary, canonical form,
// focal-universal hull and the special-focal predicate.

#ifndef FOCAL_FOCALMODEL_HPP_
#define FOCAL_FOCALMODEL_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "focal/exactnum.hpp"
#include "focal/matexact.hpp"

namespace focal {

class NotImplementedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Connected-type datum R^{d-1} x|_A Z with A contracting.
struct ConnSpec {
  MatQ a;
  bool operator==(const ConnSpec&) const = default;
};

// Stabilizer of a boundary point in Aut(T_{m+1}).
struct FT {
  long m = 2;
  bool operator==(const FT&) const = default;
};

// (R^{d-1} x U_k) x| Z, or its subgroup N x| (index Z).
struct GAk {
  MatQ a;
  long k = 1;
  long index = 1;
  bool operator==(const GAk&) const = default;
};

// H[varpi, q]^{[index]}.
struct Composite {
  ConnSpec spec;
  Rat varpi;
  long q = 2;
  long index = 1;
  bool operator==(const Composite&) const = default;
};

// Focal group acting on the millefeuille space X_{t}[k].
struct Millefeuille {
  ConnSpec spec;
  Rat t;
  long k = 2;
  bool operator==(const Millefeuille&) const = default;
};

using FocalDescriptor = std::variant<FT, GAk, Composite, Millefeuille>;

// Throws DomainError on out-of-range parameters or a non-contracting matrix,
// NonRationalSpectrum outside the rational positive family.
void Validate(const FocalDescriptor& g);

// "FT(8)", "GAk([[1/2,0],[0,1/4]],k=8)", ...
std::string Describe(const FocalDescriptor& g);

enum class GroupType { kConnected, kTotallyDisconnected, kMixed };
// "connected", "td", "mixed".
std::string ToString(GroupType t);

// A value in {0} u (0, inf) u {inf}; finite values are log-ratios.
class ExtendedValue {
 public:
  enum class Kind { kZero, kFinite, kInfinite };

  static ExtendedValue Zero() { return ExtendedValue(Kind::kZero, std::nullopt); }
  static ExtendedValue Infinite() { return ExtendedValue(Kind::kInfinite, std::nullopt); }
  static ExtendedValue Finite(const LogRatio& x) { return ExtendedValue(Kind::kFinite, x); }

  Kind kind() const { return kind_; }
  // Requires kind() == kFinite.
  const LogRatio& value() const;
  // "0", "inf", "3/2" or "log(3)/log(2)".
  std::string ToString() const;

 private:
  ExtendedValue(Kind kind, std::optional<LogRatio> value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_;
  std::optional<LogRatio> value_;
};

Certainty Compare(const ExtendedValue& x, const ExtendedValue& y);

struct BoundaryKind {
  enum class Kind { kSphere, kCantor, kXi };
  Kind kind = Kind::kCantor;
  // Sphere dimension or the d of Xi_d; 0 for Cantor.
  long parameter = 0;

  bool operator==(const BoundaryKind&) const = default;
  // "sphere(2)", "cantor", "xi(3)".
  std::string ToString() const;
};

struct Invariants {
  GroupType type;
  Int s;
  Int q;
  ExtendedValue varpi;
  ExtendedValue p0;
  BoundaryKind boundary;
};

GroupType ClassifyType(const FocalDescriptor& g);
Int InvariantS(const FocalDescriptor& g);
Int InvariantQ(const FocalDescriptor& g);
ExtendedValue InvariantVarpi(const FocalDescriptor& g);
ExtendedValue InvariantP0(const FocalDescriptor& g);
BoundaryKind Boundary(const FocalDescriptor& g);
Invariants ComputeInvariants(const FocalDescriptor& g);

// The matrix of the connected part, if any.
std::optional<MatQ> ConnectedDatum(const FocalDescriptor& g);
// p0 of the connected quotient G/G^#; Infinite for totally disconnected type.
ExtendedValue ConnectedP0(const FocalDescriptor& g);

struct ConnKeyEntry {
  // log(lambda_i) / log(rho) for the spectral radius rho.
  LogRatio weight;
  std::vector<int> jordan_blocks;
};

// Eigenvalues in decreasing order; empty for totally disconnected type.
struct ConnKey {
  std::vector<ConnKeyEntry> entries;
  // "[1,3]" or "[1,log(3)/log(2)]"; block data is appended only when some
  // block exceeds size 1.
  std::string ToString() const;
};

Certainty KeysEqual(const ConnKey& x, const ConnKey& y);
ConnKey KeyOfMatrix(const MatQ& a);

struct CanonicalForm {
  ConnKey key;
  ExtendedValue varpi;
  Int q;
};
CanonicalForm ComputeCanonicalForm(const FocalDescriptor& g);

struct HullSpec {
  long dim = 0;
  // Eigenvalue multiplicities, increasing.
  std::vector<int> multiplicities;
  // "R^2 ⋊ (R × {±1}^2)", "R^2 ⋊ (R × O(2))".
  std::string ToString() const;
  bool operator==(const HullSpec&) const = default;
};

// Connected type with diagonalizable datum only. DomainError for other
// types, NotImplementedError for Jordan blocks of size > 1.
HullSpec FocalUniversalHull(const FocalDescriptor& g);

struct SpecialVerdict {
  bool special = false;
  std::string reason;
};
SpecialVerdict IsSpecial(const FocalDescriptor& g);

}  // namespace focal

#endif  // FOCAL_FOCALMODEL_HPP_
