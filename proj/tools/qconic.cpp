// Command-line front end. Exit codes: 0 success, 2 bad input (parse or
// validation), 3 computation failure.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qconic/analysis.hpp"
#include "qconic/literal.hpp"
#include "qconic/report.hpp"

namespace {

using namespace qconic;

constexpr int kExitInput = 2;
constexpr int kExitComputation = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<Rational> parse_params(const std::string& list) {
  std::vector<Rational> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_rational(item));
  if (out.empty()) throw InputError("empty parameter list");
  return out;
}

struct Common {
  bool json = false;
  int jobs = 1;
  std::string backend = "auto";
};

int run_analyze(const std::string& path, const Common& c) {
  const std::string text = read_file(path);
  ConicArrangement arr = validate_arrangement(parse_arrangement_document(text));
  AnalysisReport rep = analyze(arr, {c.jobs, kernels::parse_backend(c.backend)});
  if (c.json) emit(to_json(rep));
  else std::cout << render_text(rep);
  return rep.consistent ? 0 : kExitComputation;
}

int run_freeness(const std::string& literal, const std::string& file, const Common& c) {
  std::string text = file.empty() ? literal : read_file(file);
  if (text.empty()) throw InputError("give a polynomial or --file");
  HomogeneousForm f = parse_form(text);
  FreenessOptions opts;
  opts.modular.jobs = c.jobs;
  opts.modular.backend = kernels::parse_backend(c.backend);
  FreenessReport rep = freeness_report(f, opts);
  if (c.json) emit(to_json(rep));
  else std::cout << "f = " << to_string(f.poly()) << "\n" << render_text(rep);
  return 0;
}

int run_enumerate(long k, const std::vector<std::string>& filter_names, bool failing_only, const Common& c) {
  if (k < 2) throw InputError("k must be at least 2");
  std::vector<EnumFilter> filters;
  for (const auto& n : filter_names) filters.push_back(parse_filter(n));
  if (filters.empty()) filters = {EnumFilter::TheoremB, EnumFilter::Discriminant, EnumFilter::TacnodeBound};

  Json rows = Json::array();
  std::ostringstream table;
  table << "n2\tt2\tn3\tn4";
  for (EnumFilter f : filters) table << "\t" << to_string(f);
  table << "\n";
  std::uint64_t count = 0, shown = 0;
  for_each_admissible(k, [&](const WeakCombinatorics& wc) {
    ++count;
    Json row{{"n2", wc.n2}, {"t2", wc.t2}, {"n3", wc.n3}, {"n4", wc.n4}};
    bool any_fail = false;
    std::string cells;
    for (EnumFilter f : filters) {
      auto o = filter_outcome(f, wc);
      row[to_string(f)] = o ? Json(*o) : Json(nullptr);
      any_fail = any_fail || (o && !*o);
      cells += std::string("\t") + (o ? (*o ? "pass" : "FAIL") : "n/a");
    }
    if (failing_only && !any_fail) return true;
    ++shown;
    rows.push_back(row);
    table << wc.n2 << "\t" << wc.t2 << "\t" << wc.n3 << "\t" << wc.n4 << cells << "\n";
    return true;
  });
  if (c.json) {
    Json names = Json::array();
    for (EnumFilter f : filters) names.push_back(to_string(f));
    emit({{"k", k}, {"filters", names}, {"admissible", count}, {"rows", rows}});
  } else {
    std::cout << "k = " << k << ", " << count << " admissible vectors" << (failing_only ? ", failing rows only" : "")
              << "\n"
              << table.str();
    if (failing_only) std::cout << shown << " rows shown\n";
  }
  return 0;
}

int run_verify(const std::string& which, long k, long kmin, long kmax, const Common& c) {
  if (which == "a") {
    if (k > 0) kmin = kmax = k;
    TheoremAReport rep = verify_theorem_a(kmin, kmax, c.jobs);
    if (c.json) emit(to_json(rep));
    else std::cout << render_text(rep);
    return rep.counterexamples.empty() ? 0 : kExitComputation;
  }
  if (which == "b") {
    if (k > 0) kmin = kmax = k;
    if (kmin < 3) kmin = 3;
    if (kmax < kmin) throw InputError("need k_max >= 3");
    Json all = Json::array();
    bool ok = true;
    for (long kk = kmin; kk <= kmax; ++kk) {
      DerivationCheck d = verify_theorem_b_derivation(kk);
      ok = ok && d.ok();
      if (c.json) all.push_back(to_json(d));
      else std::cout << render_text(d);
    }
    if (c.json) emit({{"theorem", "b"}, {"checks", all}, {"ok", ok}});
    else std::cout << (ok ? "derivation verified\n" : "derivation FAILED\n");
    return ok ? 0 : kExitComputation;
  }
  throw InputError("verify expects 'a' or 'b'");
}

int run_generate(const std::string& g1, const std::string& g2, const std::string& params, const std::string& out) {
  ConicArrangement arr =
      pencil_members(Conic::from_form(parse_form(g1)), Conic::from_form(parse_form(g2)), parse_params(params));
  std::string doc = arrangement_document(arr);
  if (out.empty() || out == "-") {
    std::cout << doc;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InputError("cannot write '" + out + "'");
    f << doc;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of conic arrangements: singularities, Milnor/Tjurina numbers, freeness"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "structured output");
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--backend", common.backend, "modular kernels: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "analyze an arrangement file");
  analyze->add_option("file", path, "arrangement document")->required();

  std::string literal, poly_file;
  auto* freeness = app.add_subcommand("freeness", "freeness report for a reduced curve");
  freeness->add_option("polynomial", literal, "homogeneous polynomial, e.g. \"x*y*z\"");
  freeness->add_option("--file", poly_file, "read the polynomial from a file");

  long k = 0;
  std::vector<std::string> filters;
  bool failing = false;
  auto* enumerate = app.add_subcommand("enumerate", "admissible weak combinatorics for k conics");
  enumerate->add_option("k,--k", k, "number of conics")->required();
  enumerate->add_option("--filter", filters, "theorem-b, discriminant, tacnode-bound (repeatable)");
  enumerate->add_flag("--failing", failing, "only rows failing a selected filter");

  std::string which;
  long vk = 0, kmin = 2, kmax = 12;
  auto* verify = app.add_subcommand("verify", "verify theorem a (non-freeness) or b (inequality derivation)");
  verify->add_option("theorem", which, "a or b")->required();
  verify->add_option("--k", vk, "single k");
  verify->add_option("--kmin", kmin, "smallest k");
  verify->add_option("--kmax", kmax, "largest k");

  std::string g1, g2, params, out;
  auto* generate = app.add_subcommand("generate", "write the pencil arrangement g1 + t g2");
  generate->add_option("--g1", g1, "quadratic form")->required();
  generate->add_option("--g2", g2, "quadratic form")->required();
  generate->add_option("--params", params, "comma-separated parameters t")->required();
  generate->add_option("-o,--output", out, "output file (default stdout)");

  for (auto* sub : {analyze, freeness, enumerate, verify, generate}) {
    sub->add_flag("--json", common.json, "structured output");
    sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--backend", common.backend, "modular kernels: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) return run_analyze(path, common);
    if (*freeness) return run_freeness(literal, poly_file, common);
    if (*enumerate) return run_enumerate(k, filters, failing, common);
    if (*verify) return run_verify(which, vk, kmin, kmax, common);
    if (*generate) return run_generate(g1, g2, params, out);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ComputationError& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return kExitComputation;
  }
  return 0;
}
