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

#include "focal/commengine.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace focal {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

namespace cite {
constexpr const char* kReflexivity = "reflexivity";
constexpr const char* kSubgroup = "subgroup G^[n]";
constexpr const char* kCopfo = "Prop. copfo";
constexpr const char* kTdckfo2 = "Cor. tdckfo2";
constexpr const char* kRsous = "Remark rsous";
constexpr const char* kTdck = "Prop. tdck";
constexpr const char* kMicom = "Thm. micom";
constexpr const char* kClasscomcon = "Thm. classcomcon";
constexpr const char* kCkco = "Cor. ckco";
constexpr const char* kGimp = "Prop. gimp";
constexpr const char* kGimp2 = "Prop. gimp2";
constexpr const char* kQtre = "Question qtre";
constexpr const char* kInqtd = "Prop. inqtd";
constexpr const char* kFocoty = "Lemma focoty";
constexpr const char* kVqi = "Cor. vqi";
constexpr const char* kCorvv = "Cor. corvv";
constexpr const char* kFinal = "final corollary";
}  // namespace cite

// Commability-within-focal invariants of a focal node.
struct FocalView {
  GroupType type;
  Int s;
  Int q;
  ExtendedValue varpi;
  ConnKey key;
};

FocalView ViewOfDescriptor(const FocalDescriptor& g) {
  const auto a = ConnectedDatum(g);
  return FocalView{ClassifyType(g), InvariantS(g), InvariantQ(g), InvariantVarpi(g),
                   a ? KeyOfMatrix(*a) : ConnKey{}};
}

FocalView TdView(const Int& s) {
  return FocalView{GroupType::kTotallyDisconnected, s, Maxroot(s).root, ExtendedValue::Infinite(), {}};
}

std::optional<FocalView> ViewOf(const SymbolicGroup& node) {
  return std::visit(
      Overloaded{
          [](const sym::Desc& d) -> std::optional<FocalView> { return ViewOfDescriptor(d.g); },
          [](const sym::FreeGroup&) -> std::optional<FocalView> { return std::nullopt; },
          [](const sym::AutTree&) -> std::optional<FocalView> { return std::nullopt; },
          [](const sym::FTpow& d) -> std::optional<FocalView> {
            return TdView(Pow(Int(d.q), static_cast<unsigned long>(d.n)));
          },
          [](const sym::QpLattice& d) -> std::optional<FocalView> {
            return TdView(Pow(Int(d.l), static_cast<unsigned long>(d.e)));
          },
          [](const sym::CompositeProduct& d) -> std::optional<FocalView> {
            const Int s = Pow(Int(d.m), static_cast<unsigned long>(d.n));
            return FocalView{GroupType::kMixed, s, Maxroot(s).root, ExtendedValue::Finite(d.varpi),
                             KeyOfMatrix(d.spec.a)};
          },
          [](const sym::UniversalHull& d) -> std::optional<FocalView> {
            return FocalView{GroupType::kConnected, Int(1), Int(1), ExtendedValue::Zero(),
                             KeyOfMatrix(d.spec.a)};
          },
      },
      node);
}

// e with base^e = s, if any.
std::optional<long> ExactLog(const Int& s, const Int& base) {
  if (base < 2) return std::nullopt;
  Int x = 1;
  for (long e = 0; x <= s; ++e, x *= base) {
    if (x == s) return e;
  }
  return std::nullopt;
}

bool Divides(long a, long b) { return a != 0 && b % a == 0; }

// A free group of the given rank is a uniform lattice in Aut(T_{m+1}):
// a finite (m+1)-regular quotient graph with V vertices has rank
// 1 + V (m - 1) / 2.
bool FreeLatticeIn(const Int& rank, long m) {
  const Int twice = 2 * (rank - 1);
  if (twice <= 0 || twice % (m - 1) != 0) return false;
  const Int vertices = twice / (m - 1);
  return (vertices * (m + 1)) % 2 == 0;
}

const FT* AsFT(const SymbolicGroup& node) {
  const auto* d = std::get_if<sym::Desc>(&node);
  return d ? std::get_if<FT>(&d->g) : nullptr;
}

// Same descriptor up to a larger index.
bool IsIndexSubgroup(const FocalDescriptor& sub, const FocalDescriptor& super) {
  if (const auto* a = std::get_if<GAk>(&sub)) {
    const auto* b = std::get_if<GAk>(&super);
    return b && a->a == b->a && a->k == b->k && Divides(b->index, a->index);
  }
  if (const auto* a = std::get_if<Composite>(&sub)) {
    const auto* b = std::get_if<Composite>(&super);
    return b && a->spec == b->spec && a->varpi == b->varpi && a->q == b->q &&
           Divides(b->index, a->index);
  }
  return false;
}

// Citation of the cataloged copci homomorphism from -> to, if any.
std::optional<std::string> CatalogedCopci(const SymbolicGroup& from, const SymbolicGroup& to) {
  const auto* dfrom = std::get_if<sym::Desc>(&from);
  const auto* dto = std::get_if<sym::Desc>(&to);
  if (dfrom && dto && IsIndexSubgroup(dfrom->g, dto->g)) return cite::kSubgroup;
  if (const FT* ft = AsFT(to)) {
    if (dfrom && ClassifyType(dfrom->g) == GroupType::kTotallyDisconnected &&
        InvariantS(dfrom->g) == ft->m) {
      return cite::kCopfo;
    }
    if (const auto* p = std::get_if<sym::FTpow>(&from)) {
      const auto j = ExactLog(Int(ft->m), Int(p->q));
      if (j && *j >= 1 && Divides(*j, p->n)) return cite::kTdckfo2;
    }
    if (const auto* l = std::get_if<sym::QpLattice>(&from)) {
      const auto j = ExactLog(Int(ft->m), Int(l->l));
      if (j && *j >= 1 && Divides(*j, l->e)) return cite::kRsous;
    }
  }
  if (const auto* p = std::get_if<sym::FTpow>(&from)) {
    if (const auto* r = std::get_if<sym::FTpow>(&to)) {
      if (p->q == r->q && Divides(r->n, p->n)) return cite::kSubgroup;
    }
  }
  if (const auto* tree = std::get_if<sym::AutTree>(&to)) {
    if (const FT* ft = AsFT(from); ft && ft->m == tree->m) return cite::kTdck;
    if (const auto* f = std::get_if<sym::FreeGroup>(&from); f && FreeLatticeIn(f->rank, tree->m)) {
      return cite::kTdck;
    }
  }
  if (const auto* cp = std::get_if<sym::CompositeProduct>(&to)) {
    if (dfrom && ClassifyType(dfrom->g) == GroupType::kMixed && cp->n == 1 &&
        InvariantS(dfrom->g) == cp->m) {
      return cite::kMicom;
    }
    if (const auto* src = std::get_if<sym::CompositeProduct>(&from); src && cp->n == 1) {
      const auto j = ExactLog(Int(cp->m), Int(src->m));
      if (j && *j >= 1 && Divides(*j, src->n)) return cite::kMicom;
    }
  }
  if (std::holds_alternative<sym::UniversalHull>(to) && dfrom &&
      ClassifyType(dfrom->g) == GroupType::kConnected) {
    return cite::kClasscomcon;
  }
  return std::nullopt;
}

Verdict No(std::string invariant, std::string left, std::string right, std::string detail) {
  Verdict v;
  v.kind = Verdict::Kind::kNo;
  v.obstruction = Obstruction{std::move(invariant), std::move(left), std::move(right)};
  v.detail = std::move(detail);
  return v;
}

Verdict Undecided(std::string detail) {
  Verdict v;
  v.kind = Verdict::Kind::kUndecided;
  v.detail = std::move(detail);
  return v;
}

Verdict Yes(WitnessChain chain, std::string detail) {
  Verdict v;
  v.kind = Verdict::Kind::kYes;
  v.chain = std::move(chain);
  v.detail = std::move(detail);
  return v;
}

// Appends `node` joined to the current tail by an arrow.
void Extend(WitnessChain& chain, ArrowDirection dir, SymbolicGroup node, std::string citation) {
  chain.arrows.push_back({dir, std::move(citation)});
  chain.nodes.push_back(std::move(node));
}

constexpr ArrowDirection kInto = ArrowDirection::kIntoNext;
constexpr ArrowDirection kFrom = ArrowDirection::kFromNext;

SymbolicGroup FtNode(long m) { return sym::Desc{FT{m}}; }

long AsLong(const Int& n) {
  if (!n.fits_slong_p()) throw DomainError("parameter " + n.get_str() + " exceeds the supported range");
  return n.get_si();
}

WitnessChain TdWithinFocalChain(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  const Int s1 = InvariantS(g1);
  const Int s2 = InvariantS(g2);
  const Int q = InvariantQ(g1);
  WitnessChain chain{{sym::Desc{g1}}, {}};
  const bool ft1 = std::holds_alternative<FT>(g1);
  const bool ft2 = std::holds_alternative<FT>(g2);
  if (s1 == s2) {
    // G1 -> FT_s <- G2.
    if (!ft1) Extend(chain, kInto, FtNode(AsLong(s1)), cite::kCopfo);
    if (!ft2) Extend(chain, kFrom, sym::Desc{g2}, cite::kCopfo);
    return chain;
  }
  // G_i -> FT_{q^{n_i}} <- FT_q^{[n]} with n_i | n.
  const long n1 = *ExactLog(s1, q);
  const long n2 = *ExactLog(s2, q);
  const long n = std::lcm(n1, n2);
  if (!ft1) Extend(chain, kInto, FtNode(AsLong(s1)), cite::kCopfo);
  Extend(chain, kFrom, sym::FTpow{AsLong(q), n}, cite::kTdckfo2);
  Extend(chain, kInto, FtNode(AsLong(s2)), cite::kTdckfo2);
  if (!ft2) Extend(chain, kFrom, sym::Desc{g2}, cite::kCopfo);
  return chain;
}

WitnessChain MixedWithinFocalChain(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  const ConnSpec h{*ConnectedDatum(g1)};
  const LogRatio varpi = InvariantVarpi(g1).value();
  const Int s1 = InvariantS(g1);
  const Int s2 = InvariantS(g2);
  const Int q = InvariantQ(g1);
  WitnessChain chain{{sym::Desc{g1}}, {}};
  if (s1 == s2) {
    Extend(chain, kInto, sym::CompositeProduct{h, varpi, AsLong(s1), 1}, cite::kMicom);
    Extend(chain, kFrom, sym::Desc{g2}, cite::kMicom);
    return chain;
  }
  const long n = std::lcm(*ExactLog(s1, q), *ExactLog(s2, q));
  Extend(chain, kInto, sym::CompositeProduct{h, varpi, AsLong(s1), 1}, cite::kMicom);
  Extend(chain, kFrom, sym::CompositeProduct{h, varpi, AsLong(q), n}, cite::kMicom);
  Extend(chain, kInto, sym::CompositeProduct{h, varpi, AsLong(s2), 1}, cite::kMicom);
  Extend(chain, kFrom, sym::Desc{g2}, cite::kMicom);
  return chain;
}

WitnessChain FreeGroupChain(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  const long s1 = AsLong(InvariantS(g1));
  const long s2 = AsLong(InvariantS(g2));
  // r - 1 = lcm(s1 - 1, s2 - 1) makes F_r a uniform lattice in both trees.
  const Int rank = 1 + Int(std::lcm(s1 - 1, s2 - 1));
  WitnessChain chain{{sym::Desc{g1}}, {}};
  if (!std::holds_alternative<FT>(g1)) Extend(chain, kInto, FtNode(s1), cite::kCopfo);
  Extend(chain, kInto, sym::AutTree{s1}, cite::kTdck);
  Extend(chain, kFrom, sym::FreeGroup{rank}, cite::kTdck);
  Extend(chain, kInto, sym::AutTree{s2}, cite::kTdck);
  if (!std::holds_alternative<FT>(g2)) Extend(chain, kFrom, FtNode(s2), cite::kTdck);
  Extend(chain, kFrom, sym::Desc{g2}, std::holds_alternative<FT>(g2) ? cite::kTdck : cite::kCopfo);
  return chain;
}

std::string MatrixKey(const std::optional<MatQ>& a) { return a ? KeyOfMatrix(*a).ToString() : "[]"; }

}  // namespace

std::string Describe(const SymbolicGroup& g) {
  return std::visit(
      Overloaded{
          [](const sym::Desc& d) { return Describe(d.g); },
          [](const sym::FreeGroup& d) { return "F_" + d.rank.get_str(); },
          [](const sym::AutTree& d) { return "Aut(T_" + std::to_string(d.m + 1) + ")"; },
          [](const sym::FTpow& d) {
            return "FT(" + std::to_string(d.q) + ")^[" + std::to_string(d.n) + "]";
          },
          [](const sym::QpLattice& d) {
            return "Q_" + std::to_string(d.l) + " x| " + std::to_string(d.l) + "^" +
                   std::to_string(d.e) + " Z";
          },
          [](const sym::CompositeProduct& d) {
            std::string out = "H" + KeyOfMatrix(d.spec.a).ToString() + "[" + d.varpi.ToString() +
                              "," + std::to_string(d.m) + "]";
            if (d.n != 1) out += "^[" + std::to_string(d.n) + "]";
            return out;
          },
          [](const sym::UniversalHull& d) {
            const SpectralData spectrum = Spectrum(d.spec.a);
            if (!spectrum.IsDiagonalizable()) {
              return "Hull(R^" + std::to_string(d.spec.a.dim()) + " x| R)";
            }
            return "Hull(" + FocalUniversalHull(GAk{d.spec.a, 1, 1}).ToString() + ")";
          },
      },
      g);
}

std::string WitnessChain::Pattern() const {
  std::string out;
  for (const Arrow& a : arrows) out += a.direction == ArrowDirection::kIntoNext ? "↗" : "↖";
  return out;
}

std::string ToString(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::kYes:
      return "yes";
    case Verdict::Kind::kNo:
      return "no";
    case Verdict::Kind::kUndecided:
      return "undecided";
  }
  return "";
}

Verdict CommableWithinFocal(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  Validate(g1);
  Validate(g2);
  if (g1 == g2) return Yes(WitnessChain{{sym::Desc{g1}}, {}}, cite::kReflexivity);
  const GroupType t1 = ClassifyType(g1);
  const GroupType t2 = ClassifyType(g2);
  if (t1 != t2) return No("type", ToString(t1), ToString(t2), cite::kFocoty);
  const Int q1 = InvariantQ(g1);
  const Int q2 = InvariantQ(g2);
  if (q1 != q2) return No("q", q1.get_str(), q2.get_str(), cite::kInqtd);
  if (t1 == GroupType::kTotallyDisconnected) {
    return Yes(TdWithinFocalChain(g1, g2), cite::kTdckfo2);
  }
  const MatQ a1 = *ConnectedDatum(g1);
  const MatQ a2 = *ConnectedDatum(g2);
  const ConnKey k1 = KeyOfMatrix(a1);
  const ConnKey k2 = KeyOfMatrix(a2);
  const Certainty keys = KeysEqual(k1, k2);
  if (keys == Certainty::kNotEqual) {
    return No("connected_key", k1.ToString(), k2.ToString(), cite::kClasscomcon);
  }
  if (t1 == GroupType::kConnected) {
    if (keys == Certainty::kUndecided) {
      return Undecided("connected keys " + k1.ToString() + " and " + k2.ToString() +
                       " cannot be certified equal");
    }
    WitnessChain chain{{sym::Desc{g1}}, {}};
    Extend(chain, kInto, sym::UniversalHull{{a1}}, cite::kClasscomcon);
    Extend(chain, kFrom, sym::Desc{g2}, cite::kClasscomcon);
    return Yes(std::move(chain), cite::kCkco);
  }
  const ExtendedValue v1 = InvariantVarpi(g1);
  const ExtendedValue v2 = InvariantVarpi(g2);
  const Certainty varpi = Compare(v1, v2);
  if (varpi == Certainty::kNotEqual) return No("varpi", v1.ToString(), v2.ToString(), cite::kMicom);
  if (keys == Certainty::kUndecided || varpi == Certainty::kUndecided) {
    return Undecided("varpi " + v1.ToString() + " vs " + v2.ToString() + ", keys " + k1.ToString() +
                     " vs " + k2.ToString() + ": comparison not certified");
  }
  return Yes(MixedWithinFocalChain(g1, g2), cite::kMicom);
}

Verdict Commable(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  Verdict v = CommableWithinFocal(g1, g2);
  if (v.kind != Verdict::Kind::kNo) return v;
  if (ClassifyType(g1) == GroupType::kTotallyDisconnected &&
      ClassifyType(g2) == GroupType::kTotallyDisconnected) {
    return Yes(FreeGroupChain(g1, g2), cite::kTdck);
  }
  return v;
}

Verdict QuasiIsometric(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  Verdict commable = Commable(g1, g2);
  const auto* m1 = std::get_if<Millefeuille>(&g1);
  const auto* m2 = std::get_if<Millefeuille>(&g2);
  if (m1 && m2 && m1->spec == m2->spec) {
    // Same X: maxroot(k1) = maxroot(k2) and k1^{t2} = k2^{t1}.
    const Int r1 = Maxroot(Int(m1->k)).root;
    const Int r2 = Maxroot(Int(m2->k)).root;
    if (r1 != r2) return No("q", r1.get_str(), r2.get_str(), cite::kCorvv);
    const Int lhs = Pow(Int(m1->k), Int(m2->t.get_num() * m1->t.get_den()).get_ui());
    const Int rhs = Pow(Int(m2->k), Int(m1->t.get_num() * m2->t.get_den()).get_ui());
    if (lhs != rhs) {
      return No("varpi", InvariantVarpi(g1).ToString(), InvariantVarpi(g2).ToString(), cite::kCorvv);
    }
    if (commable.kind != Verdict::Kind::kYes) {
      throw std::logic_error("millefeuille rule and commability disagree");
    }
    commable.detail = cite::kCorvv;
    return commable;
  }
  if (commable.kind == Verdict::Kind::kNo && ClassifyType(g1) == GroupType::kMixed &&
      ClassifyType(g2) == GroupType::kMixed) {
    commable.detail = commable.obstruction->invariant == "q" ? "Remark dyq" : cite::kVqi;
  } else if (ClassifyType(g1) == GroupType::kMixed && std::holds_alternative<GAk>(g1) &&
             std::holds_alternative<GAk>(g2)) {
    commable.detail = cite::kFinal;
  }
  return commable;
}

bool CheckObstruction(const FocalDescriptor& g1, const FocalDescriptor& g2, const Obstruction& o) {
  if (o.invariant == "type") {
    return ClassifyType(g1) != ClassifyType(g2) && ToString(ClassifyType(g1)) == o.left &&
           ToString(ClassifyType(g2)) == o.right;
  }
  if (o.invariant == "q") {
    // Millefeuille obstructions name maxroot(k), which is q for that family.
    return InvariantQ(g1) != InvariantQ(g2) && InvariantQ(g1).get_str() == o.left &&
           InvariantQ(g2).get_str() == o.right;
  }
  if (o.invariant == "varpi") {
    return Compare(InvariantVarpi(g1), InvariantVarpi(g2)) == Certainty::kNotEqual &&
           InvariantVarpi(g1).ToString() == o.left && InvariantVarpi(g2).ToString() == o.right;
  }
  if (o.invariant == "connected_key") {
    const auto a1 = ConnectedDatum(g1);
    const auto a2 = ConnectedDatum(g2);
    if (!a1 || !a2) return false;
    return KeysEqual(KeyOfMatrix(*a1), KeyOfMatrix(*a2)) == Certainty::kNotEqual &&
           MatrixKey(a1) == o.left && MatrixKey(a2) == o.right;
  }
  return false;
}

ChainValidation ValidateChain(const WitnessChain& chain) {
  auto fail = [](ChainValidation::Status status, std::string why) {
    return ChainValidation{status, std::move(why)};
  };
  if (chain.nodes.empty() || chain.arrows.size() + 1 != chain.nodes.size()) {
    return fail(ChainValidation::Status::kInvalid, "malformed chain: arrow count mismatch");
  }
  bool undecided = false;
  std::string undecided_reason;
  for (std::size_t i = 0; i < chain.arrows.size(); ++i) {
    const bool into = chain.arrows[i].direction == ArrowDirection::kIntoNext;
    const SymbolicGroup& from = into ? chain.nodes[i] : chain.nodes[i + 1];
    const SymbolicGroup& to = into ? chain.nodes[i + 1] : chain.nodes[i];
    const std::string where = "edge " + std::to_string(i) + " (" + Describe(from) + " -> " +
                              Describe(to) + "): ";
    const auto vf = ViewOf(from);
    const auto vt = ViewOf(to);
    if (vf && vt) {
      if (vf->type != vt->type) {
        return fail(ChainValidation::Status::kInvalid,
                    where + "type violated: " + ToString(vf->type) + " vs " + ToString(vt->type));
      }
      if (vf->q != vt->q) {
        return fail(ChainValidation::Status::kInvalid,
                    where + "q violated: " + vf->q.get_str() + " vs " + vt->q.get_str());
      }
      const Certainty varpi = Compare(vf->varpi, vt->varpi);
      if (varpi == Certainty::kNotEqual) {
        return fail(ChainValidation::Status::kInvalid, where + "varpi violated: " +
                                                            vf->varpi.ToString() + " vs " +
                                                            vt->varpi.ToString());
      }
      const Certainty keys = KeysEqual(vf->key, vt->key);
      if (keys == Certainty::kNotEqual) {
        return fail(ChainValidation::Status::kInvalid, where + "connected key violated: " +
                                                            vf->key.ToString() + " vs " +
                                                            vt->key.ToString());
      }
      if ((varpi == Certainty::kUndecided || keys == Certainty::kUndecided) && !undecided) {
        undecided = true;
        undecided_reason = where + "conservation not certified";
      }
    }
    const auto citation = CatalogedCopci(from, to);
    if (!citation) return fail(ChainValidation::Status::kInvalid, where + "no cataloged copci");
    if (*citation != chain.arrows[i].citation) {
      return fail(ChainValidation::Status::kInvalid,
                  where + "citation '" + chain.arrows[i].citation + "' should be '" + *citation + "'");
    }
  }
  if (undecided) return fail(ChainValidation::Status::kUndecided, undecided_reason);
  return {ChainValidation::Status::kValid, "ok"};
}

std::string ToString(PatternEntry::Status s) {
  switch (s) {
    case PatternEntry::Status::kExists:
      return "exists";
    case PatternEntry::Status::kImpossible:
      return "impossible";
    case PatternEntry::Status::kUnknown:
      return "unknown";
  }
  return "";
}

std::vector<PatternEntry> PatternCatalog(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  using S = PatternEntry::Status;
  Validate(g1);
  Validate(g2);
  if (g1 == g2) return {{"", S::kExists, cite::kReflexivity}};
  const GroupType t1 = ClassifyType(g1);
  const GroupType t2 = ClassifyType(g2);
  if (t1 != t2) return {};
  const bool same_q = InvariantQ(g1) == InvariantQ(g2);
  if (t1 == GroupType::kTotallyDisconnected) {
    const bool ft_pair = std::holds_alternative<FT>(g1) && std::holds_alternative<FT>(g2);
    if (ft_pair && same_q) {
      return {{"↗↖", S::kImpossible, cite::kGimp},
              {"↖↗", S::kExists, cite::kRsous},
              {"↗↖↗↖", S::kExists, cite::kTdckfo2}};
    }
    if (ft_pair) return {{"↖↗↖", S::kImpossible, cite::kGimp2}};
    if (same_q) {
      std::vector<PatternEntry> out;
      if (InvariantS(g1) == InvariantS(g2)) out.push_back({"↗↖", S::kExists, cite::kCopfo});
      out.push_back({"↗↖↗↖", S::kExists, cite::kTdckfo2});
      out.push_back({"↖↗↖↗", S::kExists, cite::kTdckfo2});
      return out;
    }
    return {{"↗↖↗↖", S::kExists, cite::kTdck}, {"↖↗↖", S::kUnknown, cite::kQtre}};
  }
  const Verdict v = CommableWithinFocal(g1, g2);
  if (v.kind == Verdict::Kind::kNo) return {};
  const S status = v.kind == Verdict::Kind::kYes ? S::kExists : S::kUnknown;
  if (t1 == GroupType::kConnected) return {{"↗↖", status, cite::kCkco}};
  std::vector<PatternEntry> out;
  if (InvariantS(g1) == InvariantS(g2)) out.push_back({"↗↖", status, cite::kMicom});
  out.push_back({"↗↖↗↖", status, cite::kMicom});
  out.push_back({"↖↗↖↗", status, cite::kMicom});
  return out;
}

long FtIndexOracle(long m, long depth) {
  if (m < 2 || m > 6) throw DomainError("ft-oracle: m must lie in [2, 6]");
  if (depth < 1 || depth > 5) throw DomainError("ft-oracle: depth must lie in [1, 5]");
  // Vertex (i, path): start at the ray vertex x_i and descend along child
  // indices. For i >= 1, child 0 of x_i is x_{i-1}, so paths from x_i start
  // with an index >= 1.
  using Vertex = std::pair<long, std::vector<long>>;
  std::vector<Vertex> vertices;
  std::map<Vertex, std::size_t> index_of;
  std::function<void(long, std::vector<long>&)> grow = [&](long i, std::vector<long>& path) {
    index_of[{i, path}] = vertices.size();
    vertices.push_back({i, path});
    if (i + static_cast<long>(path.size()) == depth) return;
    const long first = (i >= 1 && path.empty()) ? 1 : 0;
    for (long c = first; c < m; ++c) {
      path.push_back(c);
      grow(i, path);
      path.pop_back();
    }
  };
  for (long i = 0; i <= depth; ++i) {
    std::vector<long> path;
    grow(i, path);
  }
  // Parent of a vertex, or none for x_depth.
  auto parent = [&](const Vertex& v) -> std::optional<Vertex> {
    if (!v.second.empty()) {
      std::vector<long> p(v.second.begin(), v.second.end() - 1);
      return Vertex{v.first, p};
    }
    if (v.first == depth) return std::nullopt;
    return Vertex{v.first + 1, {}};
  };
  // Swap the subtrees below children j and j+1 of a vertex.
  struct Swap {
    Vertex at;
    long j;
  };
  std::vector<Swap> generators;
  for (const Vertex& v : vertices) {
    if (v.first + static_cast<long>(v.second.size()) == depth) continue;
    const long first = (v.first >= 1 && v.second.empty()) ? 1 : 0;
    for (long j = first; j + 1 < m; ++j) generators.push_back({v, j});
  }
  auto apply = [](const Swap& s, const Vertex& w) {
    if (w.first != s.at.first || w.second.size() <= s.at.second.size()) return w;
    if (!std::equal(s.at.second.begin(), s.at.second.end(), w.second.begin())) return w;
    Vertex out = w;
    long& c = out.second[s.at.second.size()];
    if (c == s.j) {
      c = s.j + 1;
    } else if (c == s.j + 1) {
      c = s.j;
    }
    return out;
  };
  // Every generator is a bijection preserving the parent relation and fixing
  // the ray.
  for (const Swap& s : generators) {
    std::set<Vertex> image;
    for (const Vertex& v : vertices) {
      const Vertex w = apply(s, v);
      if (!index_of.count(w)) throw std::logic_error("ft-oracle: generator leaves the ball");
      image.insert(w);
      const auto p = parent(v);
      const auto pw = parent(w);
      if (p.has_value() != pw.has_value() || (p && apply(s, *p) != *pw)) {
        throw std::logic_error("ft-oracle: generator is not a tree automorphism");
      }
      if (v.second.empty() && w != v) throw std::logic_error("ft-oracle: generator moves the ray");
    }
    if (image.size() != vertices.size()) throw std::logic_error("ft-oracle: generator not bijective");
  }
  // Orbit of x_{-1}, the child 0 of x0.
  const Vertex start{0, {0}};
  std::set<Vertex> orbit{start};
  std::deque<Vertex> queue{start};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (const Swap& s : generators) {
      const Vertex w = apply(s, v);
      if (orbit.insert(w).second) queue.push_back(w);
    }
  }
  return static_cast<long>(orbit.size());
}

}  // namespace focal
