#include "qconic/report.hpp"

#include <cstdio>
#include <sstream>

#include "qconic/literal.hpp"

namespace qconic {
namespace {

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

Json optional_json(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }
Json optional_json(const std::optional<Rational>& q) { return q ? to_json(*q) : Json(nullptr); }

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; }

std::string pattern_text(const TangentPattern& p) {
  std::string s = "{";
  for (std::size_t g = 0; g < p.size(); ++g) {
    s += g ? " | " : "";
    for (std::size_t i = 0; i < p[g].size(); ++i) s += (i ? "," : "") + std::to_string(p[g][i]);
  }
  return s + "}";
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const FieldPtr& field) {
  if (!field) return nullptr;
  Json coeffs = Json::array();
  for (const Rational& c : field->minimal_polynomial().coeffs()) coeffs.push_back(to_json(c));
  const ComplexBox& b = field->box();
  auto g = field->approx_generator();
  return Json{{"minimal_polynomial", coeffs},
              {"box", {to_json(b.re_lo), to_json(b.re_hi), to_json(b.im_lo), to_json(b.im_hi)}},
              {"approx", {decimal(g.real()), decimal(g.imag())}}};
}

std::string point_text(const Point3& p) {
  return "(" + p[0].to_string() + " : " + p[1].to_string() + " : " + p[2].to_string() + ")";
}

Json to_json(const Point3& p) {
  Json coords = Json::array(), approx = Json::array();
  for (const FieldElement& x : p) {
    coords.push_back(x.to_string());
    auto v = x.approx();
    approx.push_back({decimal(v.real()), decimal(v.imag())});
  }
  return Json{{"coordinates", coords}, {"approx", approx}};
}

Json to_json(const WeakCombinatorics& wc) {
  return Json{{"k", wc.k}, {"n2", wc.n2}, {"t2", wc.t2}, {"n3", wc.n3}, {"n4", wc.n4}, {"other", wc.other}};
}

Json to_json(const SingularPointRecord& r) {
  Json pairs = Json::array();
  for (const auto& [ij, m] : r.pairwise) pairs.push_back({{"pair", {ij.first, ij.second}}, {"multiplicity", m}});
  Json j;
  j["point"] = to_json(r.point);
  j["field"] = to_json(r.field);
  j["orbit_size"] = r.orbit_size;
  j["incident_conics"] = r.incident;
  j["pairwise_multiplicities"] = pairs;
  j["tangent_pattern"] = r.tangents;
  j["type"] = r.type.name();
  j["multiplicity"] = r.type.multiplicity;
  j["milnor"] = r.milnor;
  j["tjurina"] = r.tjurina;
  j["quasi_homogeneous"] = r.quasi_homogeneous;
  return j;
}

Json to_json(const SyzygyWitness& w) {
  auto form = [](const HomogeneousForm& f) {
    Json terms = Json::array();
    for (const auto& [m, c] : f.poly().terms()) terms.push_back({{"exponent", m}, {"coeff", to_json(c)}});
    return terms;
  };
  return Json{{"degree", w.degree},
              {"a", to_string(w.a.poly())},
              {"b", to_string(w.b.poly())},
              {"c", to_string(w.c.poly())},
              {"coefficients", {{"a", form(w.a)}, {"b", form(w.b)}, {"c", form(w.c)}}}};
}

Json to_json(const FreenessReport& r) {
  Json window = Json::array();
  for (const auto& [t, v] : r.tau_window) window.push_back({{"t", t}, {"value", v}});
  Json j;
  j["degree"] = r.degree;
  j["tau"] = r.tau;
  j["tau_window"] = window;
  j["mdr"] = r.witness.degree;
  j["witness"] = to_json(r.witness);
  j["dpw_threshold"] = to_json(r.verdict.threshold);
  j["dpw_value"] = r.verdict.value;
  j["verdict"] = to_string(r.verdict.verdict);
  j["reason"] = to_string(r.verdict.reason);
  if (r.combinatorics) j["weak_combinatorics"] = to_json(*r.combinatorics);
  return j;
}

Json to_json(const AnalysisReport& r) {
  Json conics = Json::array();
  for (const Conic& c : r.arrangement.conics()) {
    Json coeffs = Json::array();
    for (const Rational& q : c.coefficients()) coeffs.push_back(to_json(q));
    conics.push_back({{"coeffs", coeffs}});
  }
  Json records = Json::array();
  for (const auto& rec : r.locus.records) records.push_back(to_json(rec));
  const InequalityChecks& c = r.checks;
  Json j;
  j["arrangement"] = {{"conics", conics}};
  j["weak_combinatorics"] = to_json(r.locus.combinatorics);
  j["q_flag"] = r.locus.q_flag;
  j["singular_points"] = records;
  j["tau"] = {{"hilbert", r.freeness.tau},
              {"local_sum", r.local_tau_sum},
              {"combinatorial", r.tau_from_combinatorics ? Json(*r.tau_from_combinatorics) : Json(nullptr)}};
  j["freeness"] = to_json(r.freeness);
  j["checks"] = {{"count", optional_json(c.count)},
                 {"theorem_b", optional_json(c.theorem_b)},
                 {"langer_lhs_bound", optional_json(c.langer_lhs)},
                 {"orbifold_rhs", optional_json(c.orbifold_rhs)},
                 {"orbifold_inequality", optional_json(c.orbifold_inequality)},
                 {"tacnode_bound", optional_json(c.tacnode_bound)},
                 {"within_tacnode_bound", optional_json(c.within_tacnode_bound)}};
  j["consistent"] = r.consistent;
  return j;
}

Json to_json(const TheoremAReport& r) {
  Json per_k = Json::array();
  for (std::size_t i = 0; i < r.vectors_per_k.size(); ++i)
    per_k.push_back({{"k", r.k_min + static_cast<long>(i)}, {"vectors", r.vectors_per_k[i]}});
  Json bad = Json::array();
  for (const auto& wc : r.counterexamples) bad.push_back(to_json(wc));
  return Json{{"theorem", "a"},           {"k_min", r.k_min},
              {"k_max", r.k_max},         {"vectors_checked", r.vectors_checked},
              {"per_k", per_k},           {"counterexamples", bad}};
}

Json to_json(const DerivationCheck& c) {
  Json summands = Json::array(), residual = Json::array();
  for (const Rational& s : c.summands) summands.push_back(to_json(s));
  for (const Rational& s : c.residual) residual.push_back(to_json(s));
  return Json{{"theorem", "b"},
              {"k", c.k},
              {"summands", summands},
              {"summands_match", c.summands_match},
              {"residual", residual},
              {"residual_matches", c.residual_matches},
              {"vectors_checked", c.vectors_checked},
              {"disagreements", c.disagreements},
              {"ok", c.ok()}};
}

std::string render_text(const FreenessReport& r) {
  std::ostringstream os;
  os << "degree d = " << r.degree << "\n";
  os << "tau(C) = " << r.tau << "  (Hilbert function:";
  for (const auto& [t, v] : r.tau_window) os << " t=" << t << ":" << v;
  os << ")\n";
  os << "mdr r = " << r.witness.degree << "\n";
  os << "witness (a, b, c) = (" << to_string(r.witness.a.poly()) << ", " << to_string(r.witness.b.poly()) << ", "
     << to_string(r.witness.c.poly()) << ")\n";
  os << "r^2 - r(d-1) + (d-1)^2 = " << r.verdict.value << ", threshold (d-1)/2 = " << to_string(r.verdict.threshold)
     << "\n";
  os << "verdict: " << to_string(r.verdict.verdict) << " (" << to_string(r.verdict.reason) << ")\n";
  return os.str();
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "arrangement of " << r.arrangement.size() << " conics\n";
  for (std::size_t i = 0; i < r.arrangement.size(); ++i)
    os << "  C" << i << ": " << to_string(r.arrangement[i].form().poly()) << "\n";
  os << "\nsingular points (" << r.locus.records.size() << " orbits)\n";
  for (const auto& rec : r.locus.records) {
    os << "  " << point_text(rec.point);
    if (rec.field) os << "  t root of " << to_string(rec.field->minimal_polynomial(), "t");
    os << "\n    orbit " << rec.orbit_size << ", conics";
    for (std::size_t i : rec.incident) os << " " << i;
    os << ", tangents " << pattern_text(rec.tangents) << "\n    " << rec.type.name() << ", mu = " << rec.milnor
       << ", tau = " << rec.tjurina << (rec.quasi_homogeneous ? ", quasi-homogeneous" : ", not quasi-homogeneous")
       << "\n";
  }
  os << "\nweak combinatorics " << to_string(r.locus.combinatorics) << (r.locus.q_flag ? "  (Q-arrangement)" : "")
     << "\n";
  os << "tau(C): Hilbert " << r.freeness.tau << ", sum of local " << r.local_tau_sum;
  if (r.tau_from_combinatorics) os << ", combinatorial " << *r.tau_from_combinatorics;
  os << (r.consistent ? "  [consistent]" : "  [INCONSISTENT]") << "\n\n";
  os << render_text(r.freeness);
  const InequalityChecks& c = r.checks;
  os << "\nchecks\n";
  os << "  pair count          " << yes_no(c.count) << "\n";
  os << "  theorem B           " << yes_no(c.theorem_b) << "\n";
  os << "  orbifold inequality " << yes_no(c.orbifold_inequality);
  if (c.langer_lhs) os << "  (" << to_string(*c.langer_lhs) << " <= " << to_string(*c.orbifold_rhs) << ")";
  os << "\n  tacnode bound       " << yes_no(c.within_tacnode_bound);
  if (c.tacnode_bound) os << "  (t2 <= " << to_string(*c.tacnode_bound) << ")";
  os << "\n";
  return os.str();
}

std::string render_text(const TheoremAReport& r) {
  std::ostringstream os;
  os << "k      vectors\n";
  for (std::size_t i = 0; i < r.vectors_per_k.size(); ++i)
    os << r.k_min + static_cast<long>(i) << (r.k_min + static_cast<long>(i) < 10 ? "      " : "     ")
       << r.vectors_per_k[i] << "\n";
  os << "total " << r.vectors_checked << " admissible vectors, " << r.counterexamples.size() << " counterexamples\n";
  for (const auto& wc : r.counterexamples) os << "  " << to_string(wc) << "\n";
  return os.str();
}

std::string render_text(const DerivationCheck& c) {
  static const char* names[4] = {"node", "tacnode", "triple", "quadruple"};
  std::ostringstream os;
  os << "k = " << c.k << "\n";
  for (int i = 0; i < 4; ++i) os << "  summand " << names[i] << " = " << to_string(c.summands[i]) << "\n";
  os << "  summands match: " << (c.summands_match ? "yes" : "no") << "\n";
  os << "  RHS - LHS = " << to_string(c.residual[0]) << " + (" << to_string(c.residual[1]) << ") n2 + ("
     << to_string(c.residual[2]) << ") t2 + (" << to_string(c.residual[3]) << ") n3 + (" << to_string(c.residual[4])
     << ") n4\n";
  os << "  equals (8k + n2 - 5/2 t2 + 3/4 n3)/4: " << (c.residual_matches ? "yes" : "no") << "\n";
  os << "  admissible vectors " << c.vectors_checked << ", disagreements " << c.disagreements << "\n";
  return os.str();
}

std::vector<Conic> parse_arrangement_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    auto [line, col] = line_column(text, offset);
    std::string what = e.what();
    // Drop the library's own position prefix; line and column replace it.
    auto colon = what.rfind(": ");
    throw ParseError("malformed JSON (" + (colon == std::string::npos ? what : what.substr(colon + 2)) + ")", line,
                     col);
  }
  auto structural = [&](const std::string& what) { return ParseError(what, 1, 1); };
  if (!doc.is_object() || !doc.contains("conics") || !doc["conics"].is_array())
    throw structural("document must be an object with a \"conics\" array");
  std::vector<Conic> out;
  std::size_t idx = 0;
  for (const Json& entry : doc["conics"]) {
    const std::string where = "conic " + std::to_string(idx);
    if (!entry.is_object() || !entry.contains("coeffs") || !entry["coeffs"].is_array() || entry["coeffs"].size() != 6)
      throw structural(where + ": expected {\"coeffs\": [six rationals]}");
    Conic::Coefficients c;
    for (std::size_t i = 0; i < 6; ++i) {
      const Json& v = entry["coeffs"][i];
      try {
        if (v.is_string()) c[i] = parse_rational(v.get<std::string>());
        else if (v.is_number_integer()) c[i] = Rational(Integer(v.dump()));
        else throw InputError("not a rational");
      } catch (const InputError&) {
        throw structural(where + ", coefficient " + std::to_string(i) + ": expected a rational string such as \"3/4\"");
      }
    }
    out.emplace_back(c);
    ++idx;
  }
  return out;
}

std::string arrangement_document(const ConicArrangement& arr) {
  Json conics = Json::array();
  for (const Conic& c : arr.conics()) {
    Json coeffs = Json::array();
    for (const Rational& q : c.coefficients()) coeffs.push_back(to_json(q));
    conics.push_back({{"coeffs", coeffs}});
  }
  return Json{{"conics", conics}}.dump(2) + "\n";
}

EnumFilter parse_filter(std::string_view name) {
  if (name == "theorem-b") return EnumFilter::TheoremB;
  if (name == "discriminant") return EnumFilter::Discriminant;
  if (name == "tacnode-bound") return EnumFilter::TacnodeBound;
  throw InputError("unknown filter '" + std::string(name) + "' (expected theorem-b, discriminant or tacnode-bound)");
}

std::string to_string(EnumFilter f) {
  switch (f) {
    case EnumFilter::TheoremB:
      return "theorem-b";
    case EnumFilter::Discriminant:
      return "discriminant";
    case EnumFilter::TacnodeBound:
      return "tacnode-bound";
  }
  return "?";
}

std::optional<bool> filter_outcome(EnumFilter f, const WeakCombinatorics& wc) {
  switch (f) {
    case EnumFilter::TheoremB:
      if (wc.k < 3) return std::nullopt;
      return check_theorem_b(wc);
    case EnumFilter::Discriminant:
      return discriminant_condition(wc);
    case EnumFilter::TacnodeBound:
      if (wc.k < 3 || wc.n3 != 0 || wc.n4 != 0) return std::nullopt;
      return within_tacnode_bound(wc);
  }
  return std::nullopt;
}

}  // namespace qconic
