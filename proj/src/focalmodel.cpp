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

#include "focal/focalmodel.hpp"

#include <algorithm>
#include <sstream>

namespace focal {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string CompactMatrix(const MatQ& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < a.dim(); ++j) out += (j ? "," : "") + ToString(a(i, j));
    out += "]";
  }
  return out + "]";
}

void RequireContractingDatum(const MatQ& a, bool allow_empty, const char* what) {
  if (a.dim() == 0 && !allow_empty) throw DomainError(std::string(what) + ": empty connected datum");
  if (!IsContracting(a)) throw DomainError(std::string(what) + ": matrix is not contracting");
}

Rat SpectralRadius(const MatQ& a) { return Spectrum(a).eigenvalues.back().value; }

// p0 of R^{d-1} x|_A Z: log(1/det A) / log(1/rho(A)).
LogRatio ConnectedP0OfMatrix(const MatQ& a) { return LogRatio(1 / Det(a), 1 / SpectralRadius(a)); }

}  // namespace

void Validate(const FocalDescriptor& g) {
  std::visit(Overloaded{
                 [](const FT& d) {
                   if (d.m < 2) throw DomainError("FT: m must be >= 2");
                 },
                 [](const GAk& d) {
                   if (d.k < 1) throw DomainError("GAk: k must be >= 1");
                   if (d.index < 1) throw DomainError("GAk: index must be >= 1");
                   if (d.a.dim() == 0 && d.k == 1) {
                     throw DomainError("GAk: dimension 0 with k = 1 is not focal");
                   }
                   RequireContractingDatum(d.a, true, "GAk");
                 },
                 [](const Composite& d) {
                   if (d.varpi <= 0) throw DomainError("Composite: varpi must be positive");
                   if (d.q < 2) throw DomainError("Composite: q must be >= 2");
                   if (d.index < 1) throw DomainError("Composite: index must be >= 1");
                   RequireContractingDatum(d.spec.a, false, "Composite");
                 },
                 [](const Millefeuille& d) {
                   if (d.t <= 0) throw DomainError("Millefeuille: t must be positive");
                   if (d.k < 2) throw DomainError("Millefeuille: k must be >= 2");
                   RequireContractingDatum(d.spec.a, false, "Millefeuille");
                 },
             },
             g);
}

std::string Describe(const FocalDescriptor& g) {
  auto suffix = [](long index) { return index == 1 ? std::string() : ",index=" + std::to_string(index); };
  return std::visit(
      Overloaded{
          [](const FT& d) { return "FT(" + std::to_string(d.m) + ")"; },
          [&](const GAk& d) {
            return "GAk(" + CompactMatrix(d.a) + ",k=" + std::to_string(d.k) + suffix(d.index) + ")";
          },
          [&](const Composite& d) {
            return "Composite(" + CompactMatrix(d.spec.a) + ",varpi=" + ToString(d.varpi) +
                   ",q=" + std::to_string(d.q) + suffix(d.index) + ")";
          },
          [](const Millefeuille& d) {
            return "Millefeuille(" + CompactMatrix(d.spec.a) + ",t=" + ToString(d.t) +
                   ",k=" + std::to_string(d.k) + ")";
          },
      },
      g);
}

std::string ToString(GroupType t) {
  switch (t) {
    case GroupType::kConnected:
      return "connected";
    case GroupType::kTotallyDisconnected:
      return "td";
    case GroupType::kMixed:
      return "mixed";
  }
  return "";
}

const LogRatio& ExtendedValue::value() const {
  if (!value_) throw std::logic_error("ExtendedValue: no finite value");
  return *value_;
}

std::string ExtendedValue::ToString() const {
  switch (kind_) {
    case Kind::kZero:
      return "0";
    case Kind::kInfinite:
      return "inf";
    case Kind::kFinite:
      return value_->ToString();
  }
  return "";
}

Certainty Compare(const ExtendedValue& x, const ExtendedValue& y) {
  if (x.kind() != y.kind()) return Certainty::kNotEqual;
  if (x.kind() != ExtendedValue::Kind::kFinite) return Certainty::kEqual;
  return LogRatioEq(x.value(), y.value()).verdict;
}

std::string BoundaryKind::ToString() const {
  switch (kind) {
    case Kind::kSphere:
      return "sphere(" + std::to_string(parameter) + ")";
    case Kind::kCantor:
      return "cantor";
    case Kind::kXi:
      return "xi(" + std::to_string(parameter) + ")";
  }
  return "";
}

GroupType ClassifyType(const FocalDescriptor& g) {
  return std::visit(Overloaded{
                        [](const FT&) { return GroupType::kTotallyDisconnected; },
                        [](const GAk& d) {
                          if (d.k == 1) return GroupType::kConnected;
                          if (d.a.dim() == 0) return GroupType::kTotallyDisconnected;
                          return GroupType::kMixed;
                        },
                        [](const Composite&) { return GroupType::kMixed; },
                        [](const Millefeuille&) { return GroupType::kMixed; },
                    },
                    g);
}

Int InvariantS(const FocalDescriptor& g) {
  return std::visit(Overloaded{
                        [](const FT& d) { return Int(d.m); },
                        [](const GAk& d) {
                          return Pow(Int(d.k), static_cast<unsigned long>(d.index));
                        },
                        [](const Composite& d) {
                          return Pow(Int(d.q), static_cast<unsigned long>(d.index));
                        },
                        [](const Millefeuille& d) { return Int(d.k); },
                    },
                    g);
}

Int InvariantQ(const FocalDescriptor& g) { return Maxroot(InvariantS(g)).root; }

ExtendedValue InvariantVarpi(const FocalDescriptor& g) {
  switch (ClassifyType(g)) {
    case GroupType::kConnected:
      return ExtendedValue::Zero();
    case GroupType::kTotallyDisconnected:
      return ExtendedValue::Infinite();
    case GroupType::kMixed:
      break;
  }
  return std::visit(
      Overloaded{
          [](const FT&) -> ExtendedValue { throw std::logic_error("FT is not mixed"); },
          [](const GAk& d) {
            // The expanding generator multiplies totally disconnected volume
            // by k^n and connected volume by det(A)^{-n}.
            const long n = d.index;
            return ExtendedValue::Finite(LogRatio(Pow(Rat(d.k), n), Pow(1 / Det(d.a), n)));
          },
          [](const Composite& d) { return ExtendedValue::Finite(LogRatio::FromRational(d.varpi)); },
          [](const Millefeuille& d) {
            // log k / (t log(1/det A)) with t = a/b.
            const long a = d.t.get_num().get_si();
            const long b = d.t.get_den().get_si();
            return ExtendedValue::Finite(LogRatio(Pow(Rat(d.k), b), Pow(1 / Det(d.spec.a), a)));
          },
      },
      g);
}

std::optional<MatQ> ConnectedDatum(const FocalDescriptor& g) {
  return std::visit(Overloaded{
                        [](const FT&) -> std::optional<MatQ> { return std::nullopt; },
                        [](const GAk& d) -> std::optional<MatQ> {
                          if (d.a.dim() == 0) return std::nullopt;
                          return d.a;
                        },
                        [](const Composite& d) -> std::optional<MatQ> { return d.spec.a; },
                        [](const Millefeuille& d) -> std::optional<MatQ> { return d.spec.a; },
                    },
                    g);
}

ExtendedValue ConnectedP0(const FocalDescriptor& g) {
  const auto a = ConnectedDatum(g);
  if (!a) return ExtendedValue::Infinite();
  return ExtendedValue::Finite(ConnectedP0OfMatrix(*a));
}

ExtendedValue InvariantP0(const FocalDescriptor& g) {
  if (ClassifyType(g) == GroupType::kTotallyDisconnected) return ExtendedValue::Infinite();
  return std::visit(
      Overloaded{
          [](const FT&) -> ExtendedValue { throw std::logic_error("FT has no finite p0"); },
          [](const GAk& d) {
            // delta = k^n / det(A)^n, lambda = rho(A)^{-n}.
            const long n = d.index;
            const Rat delta = Pow(Rat(d.k) / Det(d.a), n);
            return ExtendedValue::Finite(LogRatio(delta, Pow(1 / SpectralRadius(d.a), n)));
          },
          [](const Composite& d) {
            // (1 + p/q) log delta' / log lambda.
            const Rat delta = 1 / Det(d.spec.a);
            const Rat lambda = 1 / SpectralRadius(d.spec.a);
            const long p = d.varpi.get_num().get_si();
            const long q = d.varpi.get_den().get_si();
            return ExtendedValue::Finite(LogRatio(Pow(delta, p + q), Pow(lambda, q)));
          },
          [](const Millefeuille& d) {
            // p0(X) + log k / (t log lambda) over the common base lambda^a.
            const Rat delta = 1 / Det(d.spec.a);
            const Rat lambda = 1 / SpectralRadius(d.spec.a);
            const long a = d.t.get_num().get_si();
            const long b = d.t.get_den().get_si();
            return ExtendedValue::Finite(
                LogRatio(Pow(delta, a) * Pow(Rat(d.k), b), Pow(lambda, a)));
          },
      },
      g);
}

BoundaryKind Boundary(const FocalDescriptor& g) {
  const auto a = ConnectedDatum(g);
  const long dim = a ? static_cast<long>(a->dim()) : 0;
  switch (ClassifyType(g)) {
    case GroupType::kConnected:
      return {BoundaryKind::Kind::kSphere, dim};
    case GroupType::kTotallyDisconnected:
      return {BoundaryKind::Kind::kCantor, 0};
    case GroupType::kMixed:
      return {BoundaryKind::Kind::kXi, dim + 1};
  }
  return {};
}

Invariants ComputeInvariants(const FocalDescriptor& g) {
  return Invariants{ClassifyType(g), InvariantS(g),   InvariantQ(g),
                    InvariantVarpi(g), InvariantP0(g), Boundary(g)};
}

std::string ConnKey::ToString() const {
  const bool blocks = std::any_of(entries.begin(), entries.end(), [](const ConnKeyEntry& e) {
    return std::any_of(e.jordan_blocks.begin(), e.jordan_blocks.end(), [](int b) { return b > 1; });
  });
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += entries[i].weight.ToString();
    if (blocks) {
      out += ":{";
      for (std::size_t j = 0; j < entries[i].jordan_blocks.size(); ++j) {
        out += (j ? "," : "") + std::to_string(entries[i].jordan_blocks[j]);
      }
      out += "}";
    }
  }
  return out + "]";
}

Certainty KeysEqual(const ConnKey& x, const ConnKey& y) {
  if (x.entries.size() != y.entries.size()) return Certainty::kNotEqual;
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    if (x.entries[i].jordan_blocks != y.entries[i].jordan_blocks) return Certainty::kNotEqual;
  }
  Certainty out = Certainty::kEqual;
  for (std::size_t i = 0; i < x.entries.size(); ++i) {
    const Certainty c = LogRatioEq(x.entries[i].weight, y.entries[i].weight).verdict;
    if (c == Certainty::kNotEqual) return c;
    if (c == Certainty::kUndecided) out = c;
  }
  return out;
}

ConnKey KeyOfMatrix(const MatQ& a) {
  ConnKey key;
  if (a.dim() == 0) return key;
  const SpectralData spectrum = Spectrum(a);
  const Rat rho = spectrum.eigenvalues.back().value;
  for (auto it = spectrum.eigenvalues.rbegin(); it != spectrum.eigenvalues.rend(); ++it) {
    key.entries.push_back({LogRatio(1 / it->value, 1 / rho), it->jordan_blocks});
  }
  return key;
}

CanonicalForm ComputeCanonicalForm(const FocalDescriptor& g) {
  const auto a = ConnectedDatum(g);
  return CanonicalForm{a ? KeyOfMatrix(*a) : ConnKey{}, InvariantVarpi(g), InvariantQ(g)};
}

std::string HullSpec::ToString() const {
  std::ostringstream out;
  out << "R";
  if (dim != 1) out << "^" << dim;
  out << " ⋊ (R";
  const long signs = std::count(multiplicities.begin(), multiplicities.end(), 1);
  if (signs == 1) out << " × {±1}";
  if (signs > 1) out << " × {±1}^" << signs;
  for (int m : multiplicities) {
    if (m > 1) out << " × O(" << m << ")";
  }
  out << ")";
  return out.str();
}

HullSpec FocalUniversalHull(const FocalDescriptor& g) {
  if (ClassifyType(g) != GroupType::kConnected) {
    throw DomainError("hull: only connected type has a focal-universal hull here");
  }
  const MatQ a = *ConnectedDatum(g);
  const SpectralData spectrum = Spectrum(a);
  if (!spectrum.IsDiagonalizable()) {
    throw NotImplementedError("hull: non-diagonalizable connected datum");
  }
  HullSpec hull;
  hull.dim = static_cast<long>(a.dim());
  for (const Eigenvalue& e : spectrum.eigenvalues) hull.multiplicities.push_back(e.Multiplicity());
  std::sort(hull.multiplicities.begin(), hull.multiplicities.end());
  return hull;
}

SpecialVerdict IsSpecial(const FocalDescriptor& g) {
  switch (ClassifyType(g)) {
    case GroupType::kTotallyDisconnected:
      return {true, "totally disconnected type: commable to a non-focal tree automorphism group"};
    case GroupType::kMixed:
      return {false, "mixed type is never special"};
    case GroupType::kConnected:
      break;
  }
  const SpectralData spectrum = Spectrum(*ConnectedDatum(g));
  const bool scalar = spectrum.eigenvalues.size() == 1 && spectrum.IsDiagonalizable();
  if (scalar) return {true, "scalar datum: real hyperbolic space, similarity hull"};
  return {false, "abelian non-scalar datum: not a rank one symmetric space"};
}

}  // namespace focal
