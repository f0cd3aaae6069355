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

// Decision procedures for commability, commability within focal groups and
// quasi-isometry of focal descriptors, with symbolic witness chains of copci
// homomorphisms and a validator for them.

#ifndef FOCAL_COMMENGINE_HPP_
#define FOCAL_COMMENGINE_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "focal/exactnum.hpp"
#include "focal/focalmodel.hpp"

namespace focal {

namespace sym {

struct Desc {
  FocalDescriptor g;
  bool operator==(const Desc&) const = default;
};
// Free group of the given rank.
struct FreeGroup {
  Int rank;
  bool operator==(const FreeGroup&) const = default;
};
// Aut(T_{m+1}).
struct AutTree {
  long m = 2;
  bool operator==(const AutTree&) const = default;
};
// FT_q^{[n]}.
struct FTpow {
  long q = 2;
  long n = 1;
  bool operator==(const FTpow&) const = default;
};
// Q_l x|_{l^e} Z.
struct QpLattice {
  long l = 2;
  long e = 1;
  bool operator==(const QpLattice&) const = default;
};
// H[varpi, m]^{[n]} with H = R^{d-1} x|_A Z.
struct CompositeProduct {
  ConnSpec spec;
  LogRatio varpi;
  long m = 2;
  long n = 1;
  bool operator==(const CompositeProduct& o) const {
    return spec == o.spec && varpi.a() == o.varpi.a() && varpi.b() == o.varpi.b() && m == o.m &&
           n == o.n;
  }
};
// Focal-universal hull of the connected class of R^{d-1} x|_A Z; contains
// the Heintze group R^{d-1} x| R as a closed cocompact subgroup.
struct UniversalHull {
  ConnSpec spec;
  bool operator==(const UniversalHull&) const = default;
};

}  // namespace sym

using SymbolicGroup = std::variant<sym::Desc, sym::FreeGroup, sym::AutTree, sym::FTpow,
                                   sym::QpLattice, sym::CompositeProduct, sym::UniversalHull>;

std::string Describe(const SymbolicGroup& g);

enum class ArrowDirection {
  // copci homomorphism from nodes[i] to nodes[i + 1]: "↗".
  kIntoNext,
  // copci homomorphism from nodes[i + 1] to nodes[i]: "↖".
  kFromNext,
};

struct Arrow {
  ArrowDirection direction;
  std::string citation;
};

struct WitnessChain {
  std::vector<SymbolicGroup> nodes;
  std::vector<Arrow> arrows;

  // Arrow glyphs in order, "" for a single node.
  std::string Pattern() const;
};

struct Obstruction {
  // "type", "q", "varpi", "connected_key" or "conjugacy".
  std::string invariant;
  std::string left;
  std::string right;
};

struct Verdict {
  enum class Kind { kYes, kNo, kUndecided };
  Kind kind = Kind::kUndecided;
  std::optional<WitnessChain> chain;
  std::optional<Obstruction> obstruction;
  std::string detail;
};

// "yes", "no", "undecided".
std::string ToString(Verdict::Kind k);

Verdict CommableWithinFocal(const FocalDescriptor& g1, const FocalDescriptor& g2);
Verdict Commable(const FocalDescriptor& g1, const FocalDescriptor& g2);
Verdict QuasiIsometric(const FocalDescriptor& g1, const FocalDescriptor& g2);

// Re-evaluates the named invariant on both descriptors and confirms a
// certified mismatch.
bool CheckObstruction(const FocalDescriptor& g1, const FocalDescriptor& g2, const Obstruction& o);

struct ChainValidation {
  enum class Status { kValid, kInvalid, kUndecided };
  Status status = Status::kInvalid;
  std::string diagnostic;

  bool valid() const { return status == Status::kValid; }
};

ChainValidation ValidateChain(const WitnessChain& chain);

struct PatternEntry {
  enum class Status { kExists, kImpossible, kUnknown };
  std::string pattern;
  Status status;
  std::string citation;
  bool operator==(const PatternEntry&) const = default;
};

// "exists", "impossible", "unknown".
std::string ToString(PatternEntry::Status s);

std::vector<PatternEntry> PatternCatalog(const FocalDescriptor& g1, const FocalDescriptor& g2);

// Size of the orbit of a child of x0 under the automorphisms of the radius
// `depth` ball around x0 in the (m+1)-regular tree that fix the ray from x0
// to the marked end. DomainError unless 2 <= m <= 6 and 1 <= depth <= 5.
long FtIndexOracle(long m, long depth);

}  // namespace focal

#endif  // FOCAL_COMMENGINE_HPP_
