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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "focal/commengine.hpp"
#include "focal/radicalcheck.hpp"

namespace focal::cli {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireKeys(const Json& j, const std::set<std::string>& required, const std::set<std::string>& optional) {
  for (const auto& [key, value] : j.items()) {
    if (!required.count(key) && !optional.count(key)) throw ParseError("unknown key \"" + key + "\"");
  }
  for (const std::string& key : required) {
    if (!j.contains(key)) throw ParseError("missing key \"" + key + "\"");
  }
}

long IntField(const Json& j, const std::string& key) {
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError("\"" + key + "\" must be an integer");
  return v.get<long>();
}

Rat RatString(const Json& v, const std::string& what) {
  static const std::regex kRat("-?[0-9]+(/[0-9]+)?");
  if (!v.is_string()) throw ParseError(what + " must be a rational string");
  const std::string text = v.get<std::string>();
  if (!std::regex_match(text, kRat)) throw ParseError(what + ": malformed rational \"" + text + "\"");
  try {
    return ParseRat(text);
  } catch (const DomainError& e) {
    throw ParseError(what + ": " + e.what());
  }
}

MatQ MatrixField(const Json& j) {
  const Json& rows = j.at("A");
  if (!rows.is_array()) throw ParseError("\"A\" must be an array of rows");
  const std::size_t n = rows.size();
  MatQ a(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw ParseError("\"A\" must be square");
    for (std::size_t k = 0; k < n; ++k) a(i, k) = RatString(rows[i][k], "A entry");
  }
  return a;
}

Json MatrixJson(const MatQ& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(ToString(a(i, k)));
    rows.push_back(row);
  }
  return rows;
}

Json IntJson(const Int& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json ObstructionValue(const std::string& invariant, const std::string& value) {
  static const std::regex kInt("-?[0-9]+");
  if ((invariant == "q" || invariant == "s") && std::regex_match(value, kInt)) return IntJson(Int(value));
  return value;
}

Json ChainJson(const WitnessChain& chain) {
  Json nodes = Json::array();
  for (const SymbolicGroup& node : chain.nodes) {
    Json entry;
    entry["name"] = Describe(node);
    if (const auto* d = std::get_if<sym::Desc>(&node)) entry["descriptor"] = DescriptorToJson(d->g);
    nodes.push_back(entry);
  }
  Json arrows = Json::array();
  for (const Arrow& a : chain.arrows) {
    arrows.push_back({{"direction", a.direction == ArrowDirection::kIntoNext ? "↗" : "↖"},
                      {"citation", a.citation}});
  }
  return {{"pattern", chain.Pattern()}, {"nodes", nodes}, {"arrows", arrows}};
}

bool LogEnabled() {
  const char* v = std::getenv("FOCAL_LOG");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

}  // namespace

FocalDescriptor DescriptorFromJson(const Json& j) {
  if (!j.is_object()) throw ParseError("descriptor must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw ParseError("missing string \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  FocalDescriptor g;
  if (kind == "FT") {
    RequireKeys(j, {"kind", "m"}, {});
    g = FT{IntField(j, "m")};
  } else if (kind == "GAk") {
    RequireKeys(j, {"kind", "A", "k"}, {"index"});
    g = GAk{MatrixField(j), IntField(j, "k"), j.contains("index") ? IntField(j, "index") : 1};
  } else if (kind == "Composite") {
    RequireKeys(j, {"kind", "A", "varpi", "q"}, {"index"});
    g = Composite{{MatrixField(j)}, RatString(j.at("varpi"), "varpi"), IntField(j, "q"),
                  j.contains("index") ? IntField(j, "index") : 1};
  } else if (kind == "Millefeuille") {
    RequireKeys(j, {"kind", "A", "t", "k"}, {});
    g = Millefeuille{{MatrixField(j)}, RatString(j.at("t"), "t"), IntField(j, "k")};
  } else {
    throw ParseError("unknown kind \"" + kind + "\"");
  }
  try {
    Validate(g);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return g;
}

FocalDescriptor ParseDescriptor(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    return DescriptorFromJson(j);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

FocalDescriptor ReadDescriptorFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseDescriptor(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json DescriptorToJson(const FocalDescriptor& g) {
  return std::visit(Overloaded{
                        [](const FT& d) { return Json{{"kind", "FT"}, {"m", d.m}}; },
                        [](const GAk& d) {
                          Json j{{"kind", "GAk"}, {"A", MatrixJson(d.a)}, {"k", d.k}};
                          if (d.index != 1) j["index"] = d.index;
                          return j;
                        },
                        [](const Composite& d) {
                          Json j{{"kind", "Composite"},
                                 {"A", MatrixJson(d.spec.a)},
                                 {"varpi", ToString(d.varpi)},
                                 {"q", d.q}};
                          if (d.index != 1) j["index"] = d.index;
                          return j;
                        },
                        [](const Millefeuille& d) {
                          return Json{{"kind", "Millefeuille"},
                                      {"A", MatrixJson(d.spec.a)},
                                      {"t", ToString(d.t)},
                                      {"k", d.k}};
                        },
                    },
                    g);
}

std::string CanonicalText(const FocalDescriptor& g) { return DescriptorToJson(g).dump(2) + "\n"; }

CommandResult CmdInvariants(const FocalDescriptor& g) {
  const Invariants inv = ComputeInvariants(g);
  Json out;
  out["type"] = ToString(inv.type);
  out["s"] = IntJson(inv.s);
  out["q"] = IntJson(inv.q);
  out["varpi"] = inv.varpi.ToString();
  out["p0"] = inv.p0.ToString();
  out["boundary"] = inv.boundary.ToString();
  const SpecialVerdict special = IsSpecial(g);
  out["special"] = special.special;
  if (inv.type == GroupType::kConnected) {
    try {
      out["hull"] = FocalUniversalHull(g).ToString();
    } catch (const NotImplementedError&) {
      // Non-diagonalizable datum: no hull field.
    }
  }
  return {out, kExitYes};
}

CommandResult CmdCommable(const FocalDescriptor& g1, const FocalDescriptor& g2, const CommableOptions& options) {
  Verdict v;
  std::string relation;
  if (options.qi) {
    v = QuasiIsometric(g1, g2);
    relation = "quasi_isometric";
  } else if (options.within_focal) {
    v = CommableWithinFocal(g1, g2);
    relation = "commable_within_focal";
  } else {
    v = Commable(g1, g2);
    relation = "commable";
  }
  Json out;
  out["relation"] = relation;
  out["verdict"] = ToString(v.kind);
  if (!v.detail.empty()) out["detail"] = v.detail;
  if (v.obstruction) {
    const Obstruction& o = *v.obstruction;
    out["obstruction"] = {{"invariant", o.invariant},
                          {"values", {ObstructionValue(o.invariant, o.left), ObstructionValue(o.invariant, o.right)}}};
  }
  if (v.chain && options.witness) out["chain"] = ChainJson(*v.chain);
  if (v.kind == Verdict::Kind::kUndecided && options.tolerance) {
    const ExtendedValue w1 = InvariantVarpi(g1), w2 = InvariantVarpi(g2);
    if (w1.kind() == ExtendedValue::Kind::kFinite && w2.kind() == ExtendedValue::Kind::kFinite) {
      const double x = w1.value().Approx(), y = w2.value().Approx();
      out["estimates"] = {{"varpi", {x, y}},
                          {"tolerance", *options.tolerance},
                          {"within_tolerance", std::fabs(x - y) <= *options.tolerance}};
    }
  }
  switch (v.kind) {
    case Verdict::Kind::kYes:
      return {out, kExitYes};
    case Verdict::Kind::kNo:
      return {out, kExitNo};
    case Verdict::Kind::kUndecided:
      break;
  }
  return {out, kExitUndecided};
}

CommandResult CmdBoundary(const FocalDescriptor& g) {
  return {Json{{"boundary", Boundary(g).ToString()}}, kExitYes};
}

CommandResult CmdHull(const FocalDescriptor& g) {
  const HullSpec hull = FocalUniversalHull(g);
  return {Json{{"hull", hull.ToString()}, {"dim", hull.dim}, {"multiplicities", hull.multiplicities}}, kExitYes};
}

CommandResult CmdPattern(const FocalDescriptor& g1, const FocalDescriptor& g2) {
  Json patterns = Json::array();
  for (const PatternEntry& e : PatternCatalog(g1, g2)) {
    patterns.push_back({{"pattern", e.pattern}, {"status", ToString(e.status)}, {"citation", e.citation}});
  }
  return {Json{{"patterns", patterns}}, kExitYes};
}

CommandResult CmdRadicalCheck(long p, int samples, long conj_bound) {
  if (!IsPrime(p) || p >= (1L << 31)) throw ParseError("--p must be a prime below 2^31");
  if (samples < 1 || samples > 1000) throw ParseError("--samples must lie in [1, 1000]");
  if (conj_bound < 1 || conj_bound > 1000) throw ParseError("--conj-bound must lie in [1, 1000]");
  // Smallest degree bound >= 3 with at least `samples` Laurent polynomials.
  int degree = 3;
  for (double available = std::pow(static_cast<double>(p), 2 * degree + 1); available < samples;
       available *= static_cast<double>(p) * static_cast<double>(p)) {
    ++degree;
  }
  const bool center = CheckCenterGamma2(p, samples, degree);
  bool units = true;
  for (const auto& [name, u] : DesignatedUnits(p)) units = units && UnitInfiniteOrder(u);
  const Gamma gamma1(1, p);
  long min_orbit = -1;
  for (int factor = 0; factor < 2; ++factor) {
    for (int coord = 0; coord < 3; ++coord) {
      const long size =
          ConjugacyOrbitSize(1, p, gamma1.Elementary(factor, coord, FpRat::Constant(p, 1)), conj_bound);
      min_orbit = min_orbit < 0 ? size : std::min(min_orbit, size);
    }
  }
  const bool twist = CheckTwistIdentity(p);
  auto pass = [](bool b) { return b ? "pass" : "fail"; };
  Json out{{"p", p},
           {"samples", samples},
           {"conj_bound", conj_bound},
           {"center_gamma2", pass(center)},
           {"icc_gamma1_min_orbit", min_orbit},
           {"twist_identity", pass(twist)},
           {"non_torsion_units", pass(units)}};
  const bool ok = center && units && twist && min_orbit >= conj_bound;
  return {out, ok ? kExitYes : kExitNo};
}

CommandResult CmdFtOracle(long m, long depth) {
  long index = 0;
  try {
    index = FtIndexOracle(m, depth);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return {Json{{"m", m}, {"depth", depth}, {"index", index}, {"expected", m}, {"match", index == m}},
          index == m ? kExitYes : kExitNo};
}

namespace {

std::string HumanKey(const std::string& key) {
  if (key == "varpi") return "ϖ";
  if (key == "p0") return "p₀";
  if (key == "boundary") return "∂G";
  return key;
}

std::string HumanValue(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string RenderHuman(const Json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    if (key == "chain") {
      out << "chain: ";
      const Json& nodes = value.at("nodes");
      const Json& arrows = value.at("arrows");
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        out << nodes[i].at("name").get<std::string>();
        if (i < arrows.size()) out << " " << arrows[i].at("direction").get<std::string>() << " ";
      }
      out << "\n";
      for (std::size_t i = 0; i < arrows.size(); ++i) {
        out << "  step " << i + 1 << ": " << arrows[i].at("citation").get<std::string>() << "\n";
      }
    } else if (key == "patterns") {
      for (const Json& e : value) {
        out << e.at("pattern").get<std::string>() << "  " << e.at("status").get<std::string>() << "  ("
            << e.at("citation").get<std::string>() << ")\n";
      }
    } else if (key == "obstruction") {
      out << "obstruction: " << value.at("invariant").get<std::string>() << " "
          << HumanValue(value.at("values")[0]) << " ≠ " << HumanValue(value.at("values")[1]) << "\n";
    } else {
      out << HumanKey(key) << ": " << HumanValue(value) << "\n";
    }
  }
  return out.str();
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, commability and quasi-isometry decisions for focal groups", "focal"};
  app.require_subcommand(1);
  app.fallthrough();
  bool human = false;
  std::optional<double> tolerance;
  app.add_flag("--human", human, "Plain-text output instead of JSON");
  app.add_option("--tolerance", tolerance, "Attach numeric estimates to undecided verdicts");

  std::string file_a, file_b;
  CommableOptions options;
  long p = 3, conj_bound = 100, m = 2, depth = 1;
  int samples = 20;

  auto* invariants = app.add_subcommand("invariants", "Type, s, q, varpi, p0, boundary and hull");
  invariants->add_option("file", file_a, "Descriptor JSON")->required();
  auto* commable = app.add_subcommand("commable", "Decide commability of two descriptors");
  commable->add_option("file_a", file_a, "Descriptor JSON")->required();
  commable->add_option("file_b", file_b, "Descriptor JSON")->required();
  commable->add_flag("--within-focal", options.within_focal, "Restrict chains to focal groups");
  commable->add_flag("--witness", options.witness, "Emit the witness chain");
  commable->add_flag("--qi", options.qi, "Decide quasi-isometry instead");
  auto* qi = app.add_subcommand("qi", "Decide quasi-isometry of two descriptors");
  qi->add_option("file_a", file_a, "Descriptor JSON")->required();
  qi->add_option("file_b", file_b, "Descriptor JSON")->required();
  qi->add_flag("--witness", options.witness, "Emit the witness chain");
  auto* boundary = app.add_subcommand("boundary", "Topological type of the boundary");
  boundary->add_option("file", file_a, "Descriptor JSON")->required();
  auto* hull = app.add_subcommand("hull", "Focal-universal hull of a connected descriptor");
  hull->add_option("file", file_a, "Descriptor JSON")->required();
  auto* pattern = app.add_subcommand("pattern", "Catalog of chain patterns between two descriptors");
  pattern->add_option("file_a", file_a, "Descriptor JSON")->required();
  pattern->add_option("file_b", file_b, "Descriptor JSON")->required();
  auto* radical = app.add_subcommand("radical-check", "Exact checks on the Gamma_1, Gamma_2 construction");
  radical->add_option("--p", p, "Prime characteristic");
  radical->add_option("--samples", samples, "Central elements to test");
  radical->add_option("--conj-bound", conj_bound, "Conjugator power bound");
  auto* ft = app.add_subcommand("ft-oracle", "Orbit of a child under the ray stabilizer in a tree ball");
  ft->add_option("--m", m, "Branching number")->required();
  ft->add_option("--depth", depth, "Ball radius")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "focal: " << e.what() << "\n";
    return kExitUsage;
  }
  options.tolerance = tolerance;

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    if (*invariants) {
      result = CmdInvariants(ReadDescriptorFile(file_a));
    } else if (*commable) {
      result = CmdCommable(ReadDescriptorFile(file_a), ReadDescriptorFile(file_b), options);
    } else if (*qi) {
      options.qi = true;
      result = CmdCommable(ReadDescriptorFile(file_a), ReadDescriptorFile(file_b), options);
    } else if (*boundary) {
      result = CmdBoundary(ReadDescriptorFile(file_a));
    } else if (*hull) {
      result = CmdHull(ReadDescriptorFile(file_a));
    } else if (*pattern) {
      result = CmdPattern(ReadDescriptorFile(file_a), ReadDescriptorFile(file_b));
    } else if (*radical) {
      result = CmdRadicalCheck(p, samples, conj_bound);
    } else {
      result = CmdFtOracle(m, depth);
    }
  } catch (const ParseError& e) {
    err << "focal: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "focal: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotImplementedError& e) {
    err << "focal: not implemented: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndecidedError& e) {
    out << Json{{"verdict", "undecided"}, {"detail", e.what()}}.dump(2) << "\n";
    return kExitUndecided;
  }
  if (LogEnabled()) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    err << "focal: " << app.get_subcommands().front()->get_name() << " finished in " << ms << " ms, exit "
        << result.exit_code << "\n";
  }
  out << (human ? RenderHuman(result.output) : result.output.dump(2) + "\n");
  return result.exit_code;
}

}  // namespace focal::cli
