#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "hyperfield/axioms.hpp"
#include "hyperfield/constructions.hpp"
#include "hyperfield/dyadic.hpp"
#include "hyperfield/iso.hpp"
#include "hyperfield/linsolve/solve.hpp"
#include "hyperfield/ordered.hpp"
#include "hyperfield/table_io.hpp"

namespace hf = hyperfield;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;

struct LoadedField {
  hf::FiniteHyperfield field;
  std::optional<hf::PhiMap> phi;
};

LoadedField resolve_field(const std::string& ref) {
  if (ref == "krasner") return {hf::build_krasner(), std::nullopt};
  if (ref == "sign") return {hf::build_sign(), std::nullopt};
  if (ref == "m7") {
    auto m = hf::build_massouros_original(hf::AbelianGroup({3}));
    return {std::move(m.field), std::move(m.phi)};
  }
  return {hf::load_hf_file(ref), std::nullopt};
}

// Paths inside a .sys header resolve against the .sys file's directory first.
std::string resolve_side_path(const std::string& ref, const std::string& sys_path) {
  namespace fs = std::filesystem;
  if (fs::exists(ref)) return ref;
  const fs::path sibling = fs::path(sys_path).parent_path() / ref;
  if (fs::exists(sibling)) return sibling.string();
  return ref;
}

void write_report(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write report '" + path + "'");
  out << j.dump(2) << '\n';
}

json check_report_json(const hf::CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) items.push_back({{"name", i.name}, {"passed", i.passed}, {"witness", i.witness}});
  return {{"items", items}, {"notes", r.notes}, {"all_passed", r.all_passed()}};
}

hf::AbelianGroup parse_group(const std::string& desc) {
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos < desc.size()) {
    std::size_t comma = desc.find(',', pos);
    if (comma == std::string::npos) comma = desc.size();
    factors.push_back(std::stoi(desc.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return hf::AbelianGroup(factors);
}

int cmd_build(const std::string& family, const std::string& group_desc, int q, int d,
              const std::string& out_path, const std::string& phi_path) {
  std::optional<hf::FiniteHyperfield> field;
  std::optional<hf::PhiMap> phi;
  if (family == "krasner") {
    field = hf::build_krasner();
  } else if (family == "sign") {
    field = hf::build_sign();
  } else if (family == "fg") {
    auto m = hf::build_FG(parse_group(group_desc));
    field = std::move(m.field);
    phi = std::move(m.phi);
  } else if (family == "massouros") {
    auto m = hf::build_massouros_original(parse_group(group_desc));
    field = std::move(m.field);
    phi = std::move(m.phi);
  } else if (family == "nakassis") {
    field = hf::build_nakassis(parse_group(group_desc));
  } else if (family == "quotient") {
    field = hf::build_quotient(q, d);
  } else {
    std::cerr << "unknown family '" << family << "'\n";
    return kUsage;
  }
  hf::save_hf_file(*field, out_path);
  std::cout << "wrote " << out_path << '\n';
  if (!phi_path.empty()) {
    if (!phi) {
      std::cerr << "family '" << family << "' carries no canonical phi map\n";
      return kUsage;
    }
    hf::save_phi_file(*field, *phi, phi_path);
    std::cout << "wrote " << phi_path << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& ref, const std::string& report_path) {
  const LoadedField lf = resolve_field(ref);
  const hf::AxiomReport report = hf::verify_axioms(lf.field);
  std::cout << "hyperfield " << lf.field.name() << " (" << lf.field.size() << " elements)\n"
            << report.to_string();
  std::cout << (report.all_passed() ? "all axioms hold\n" : "axiom failures found\n");
  if (!report_path.empty()) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back(
          {{"axiom", c.axiom}, {"passed", c.passed}, {"witness", c.witness}, {"violations", c.violations}});
    write_report(report_path,
                 {{"field", lf.field.name()}, {"checks", checks}, {"all_passed", report.all_passed()}});
  }
  return report.all_passed() ? kOk : kPropertyFailure;
}

int cmd_massouros_check(const std::string& ref, const std::string& phi_path, const std::string& report_path) {
  LoadedField lf = resolve_field(ref);
  if (!phi_path.empty()) lf.phi = hf::load_phi_file(phi_path, lf.field);
  if (!lf.phi) {
    std::cerr << "a phi map is required (--phi) for fields without a builtin one\n";
    return kUsage;
  }
  const hf::CheckReport conditions = hf::verify_massouros(lf.field, *lf.phi);
  std::cout << conditions.to_string();
  json j = {{"field", lf.field.name()}, {"conditions", check_report_json(conditions)}};
  bool ok = conditions.all_passed();
  if (ok) {
    const hf::CheckReport sums = hf::verify_large_sums({lf.field, *lf.phi});
    std::cout << sums.to_string();
    j["large_sums"] = check_report_json(sums);
    ok = sums.all_passed();
  }
  write_report(report_path, j);
  return ok ? kOk : kPropertyFailure;
}

int cmd_solve(const std::string& sys_path, bool force_brute, bool show_trace, const std::string& report_path) {
  const hf::SystemFile sf = hf::read_system_file(sys_path);
  LoadedField lf = resolve_field(resolve_side_path(sf.field_ref, sys_path));
  if (!sf.phi_ref.empty()) lf.phi = hf::load_phi_file(resolve_side_path(sf.phi_ref, sys_path), lf.field);
  const hf::LinearSystem sys = hf::parse_equations(sf.equations_text, lf.field);

  bool structured = !force_brute && lf.phi.has_value();
  std::string gate_note;
  if (structured) {
    const hf::MassourosField m{lf.field, *lf.phi};
    if (!hf::verify_massouros(lf.field, *lf.phi).all_passed() || !hf::verify_large_sums(m).all_passed()) {
      structured = false;
      gate_note = "field is not a verified Massouros hyperfield; falling back to brute force";
    }
  } else if (!force_brute) {
    gate_note = "no phi map available; falling back to brute force";
  }
  if (!gate_note.empty()) std::cout << gate_note << '\n';

  std::optional<hf::Assignment> assignment;
  hf::ReductionTrace trace;
  if (structured) {
    hf::SolveResult res = hf::solve_prechecked({lf.field, *lf.phi}, sys);
    assignment = std::move(res.assignment);
    trace = std::move(res.trace);
  } else {
    assignment = hf::brute_solve(sys);
  }

  json j = {{"system", sys_path}, {"field", lf.field.name()}, {"structured", structured}};
  if (!assignment) {
    std::cout << "no nontrivial solution exists\n";
    j["solved"] = false;
    write_report(report_path, j);
    return kPropertyFailure;
  }

  if (show_trace && structured) {
    std::cout << "trace:\n";
    const std::string rendered = trace.to_string(lf.field, sys.variables);
    std::istringstream lines(rendered);
    std::string line;
    while (std::getline(lines, line)) std::cout << "  " << line << '\n';
  }

  std::vector<int> order(sys.variables.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sys.variables[a] < sys.variables[b]; });
  json jvars = json::object();
  for (int v : order) {
    std::cout << sys.variables[v] << " = " << lf.field.elem_name((*assignment)[v]) << '\n';
    jvars[sys.variables[v]] = lf.field.elem_name((*assignment)[v]);
  }

  const hf::SolutionCheck chk = hf::check_solution(lf.field, sys, *assignment);
  j["solved"] = chk.solves;
  j["nontrivial"] = chk.nontrivial;
  j["assignment"] = jvars;
  write_report(report_path, j);
  if (chk.solves && chk.nontrivial) {
    std::cout << "VERIFIED nontrivial\n";
    return kOk;
  }
  std::cout << "FAILED verification: solver output does not solve the system\n";
  return kPropertyFailure;
}

int cmd_sweep(const std::string& field_ref, const std::string& phi_path, int k, int n, int max_terms,
              const std::string& report_path) {
  LoadedField lf = resolve_field(field_ref);
  if (!phi_path.empty()) lf.phi = hf::load_phi_file(phi_path, lf.field);
  const hf::SweepReport report =
      hf::fetvins_sweep(lf.field, lf.phi ? &*lf.phi : nullptr, k, n, max_terms);
  std::cout << report.to_string();
  write_report(report_path, {{"field", report.field},
                             {"eqs", report.eqs},
                             {"vars", report.vars},
                             {"max_terms", report.max_terms},
                             {"equations_enumerated", report.equations_enumerated},
                             {"systems", report.systems},
                             {"structured", report.structured_solver_used},
                             {"counterexamples", report.counterexamples},
                             {"disagreements", report.disagreements},
                             {"truncated", report.truncated}});
  return report.clean() ? kOk : kPropertyFailure;
}

int cmd_quotient_scan(const std::string& ref, int qmax, const std::string& report_path) {
  const LoadedField lf = resolve_field(ref);
  const hf::QuotientScanReport report = hf::quotient_scan(lf.field, qmax);
  std::cout << report.to_string();
  json cands = json::array();
  for (const auto& c : report.candidates) cands.push_back({{"q", c.q}, {"d", c.d}, {"hit", c.hit}});
  write_report(report_path,
               {{"field", lf.field.name()}, {"qmax", qmax}, {"candidates", cands}, {"any_hit", report.any_hit()}});
  return kOk;
}

int cmd_iso(const std::string& ref_a, const std::string& ref_b, const std::string& report_path) {
  const LoadedField a = resolve_field(ref_a);
  const LoadedField b = resolve_field(ref_b);
  const auto witness = hf::iso_search(a.field, b.field);
  json j = {{"a", a.field.name()}, {"b", b.field.name()}, {"isomorphic", witness.has_value()}};
  if (witness) {
    std::cout << "isomorphic; witness:\n" << witness->to_string(a.field, b.field);
    json map = json::object();
    for (std::size_t i = 0; i < witness->map.size(); ++i)
      map[a.field.elem_name(static_cast<int>(i))] = b.field.elem_name(witness->map[i]);
    j["witness"] = map;
  } else {
    std::cout << "no isomorphism found\n";
  }
  write_report(report_path, j);
  return kOk;
}

int cmd_ordered(const std::string& mode_name, const std::string& window, bool dyadic, int samples,
                const std::string& report_path) {
  const auto dots = window.find("..");
  if (dots == std::string::npos) {
    std::cerr << "--window expects LO..HI\n";
    return kUsage;
  }
  const long long lo = std::stoll(window.substr(0, dots));
  const long long hi = std::stoll(window.substr(dots + 2));
  const hf::OrderedMode mode = mode_name == "open" ? hf::OrderedMode::open : hf::OrderedMode::closed;

  const hf::CheckReport axioms = hf::overify_window(mode, lo, hi);
  std::cout << "ordered mode " << mode_name << ", window [" << lo << ", " << hi << "]\n"
            << axioms.to_string();
  bool ok = axioms.all_passed();

  json j = {{"mode", mode_name}, {"window", {lo, hi}}, {"axioms", check_report_json(axioms)}};
  if (dyadic) {
    long long sound_failures = 0, complete_failures = 0, pairs = 0;
    bool zero_note = false;
    json failures = json::array();
    for (long long m = lo; m <= hi; ++m)
      for (long long n = lo; n <= hi; ++n) {
        const hf::DyadicSumReport r =
            hf::dyadic_sum_check(static_cast<int>(m), static_cast<int>(n), lo, hi, samples);
        ++pairs;
        zero_note = zero_note || r.zero_class_included;
        if (!r.sound) ++sound_failures;
        if (!r.complete) ++complete_failures;
        if (!r.sound || !r.complete) failures.push_back(r.to_string());
      }
    std::cout << "dyadic pairs checked: " << pairs << ", soundness failures: " << sound_failures
              << ", completeness failures: " << complete_failures << '\n';
    if (zero_note)
      std::cout << "note: equal-class sums include the zero class ([0] = x + (-x)) alongside the "
                   "higher dyadic classes\n";
    ok = ok && sound_failures == 0 && complete_failures == 0;
    j["dyadic"] = {{"pairs", pairs},
                   {"sound_failures", sound_failures},
                   {"complete_failures", complete_failures},
                   {"zero_class_note", zero_note},
                   {"failures", failures}};
  }
  write_report(report_path, j);
  return ok ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computational algebra over finite hyperfields"};
  app.require_subcommand(1);

  std::string report_path;

  auto* build = app.add_subcommand("build", "construct a hyperfield family and write .hf/.phi files");
  std::string family, group_desc = "3", out_path, phi_out;
  int q = 0, d = 1;
  build->add_option("family", family, "krasner|sign|fg|massouros|nakassis|quotient")->required();
  build->add_option("--group", group_desc, "cyclic factor orders, comma separated");
  build->add_option("--q", q, "field size for quotient");
  build->add_option("--subgroup-order", d, "multiplicative subgroup order for quotient");
  build->add_option("-o,--out", out_path, "output .hf path")->required();
  build->add_option("--phi", phi_out, "output .phi path (fg and massouros families)");

  auto* verify = app.add_subcommand("verify", "check the hyperfield axioms of a table");
  std::string verify_ref;
  verify->add_option("table", verify_ref, "builtin id or .hf path")->required();
  verify->add_option("--report", report_path, "write a JSON report");

  auto* mcheck = app.add_subcommand("massouros-check", "check the Massouros conditions and large sums");
  std::string mcheck_ref, mcheck_phi;
  mcheck->add_option("table", mcheck_ref, "builtin id or .hf path")->required();
  mcheck->add_option("--phi", mcheck_phi, ".phi map path");
  mcheck->add_option("--report", report_path, "write a JSON report");

  auto* solve = app.add_subcommand("solve", "solve a homogeneous .sys system");
  std::string sys_path;
  bool force_brute = false, show_trace = false;
  solve->add_option("system", sys_path, ".sys path")->required();
  solve->add_flag("--brute", force_brute, "use the brute-force oracle");
  solve->add_flag("--trace", show_trace, "print the reduction trace");
  solve->add_option("--report", report_path, "write a JSON report");

  auto* sweep = app.add_subcommand("sweep", "exhaustive FETVINS sweep over small systems");
  std::string sweep_field, sweep_phi;
  int sweep_k = 1, sweep_n = 2, sweep_terms = 3;
  sweep->add_option("--field", sweep_field, "builtin id or .hf path")->required();
  sweep->add_option("--phi", sweep_phi, ".phi map path");
  sweep->add_option("--eqs", sweep_k, "equation count")->required();
  sweep->add_option("--vars", sweep_n, "variable count")->required();
  sweep->add_option("--max-terms", sweep_terms, "largest equation support");
  sweep->add_option("--report", report_path, "write a JSON report");

  auto* qscan = app.add_subcommand("quotient-scan", "scan finite-field quotients for an isomorphic table");
  std::string qscan_ref;
  int qmax = 16;
  qscan->add_option("table", qscan_ref, "builtin id or .hf path")->required();
  qscan->add_option("--qmax", qmax, "largest prime power to try")->required();
  qscan->add_option("--report", report_path, "write a JSON report");

  auto* iso = app.add_subcommand("iso", "search for a hyperfield isomorphism");
  std::string iso_a, iso_b;
  iso->add_option("a", iso_a, "builtin id or .hf path")->required();
  iso->add_option("b", iso_b, "builtin id or .hf path")->required();
  iso->add_option("--report", report_path, "write a JSON report");

  auto* ordered = app.add_subcommand("ordered", "check the value-group-Z ordered hyperfields");
  std::string mode_name = "open", window = "-4..4";
  bool dyadic = false;
  int samples = 9;
  ordered->add_option("--mode", mode_name, "open|closed")->required()->check(CLI::IsMember({"open", "closed"}));
  ordered->add_option("--window", window, "LO..HI level window")->required();
  ordered->add_flag("--dyadic", dyadic, "also check the dyadic quotient classes");
  ordered->add_option("--samples", samples, "odd numerator/denominator bound for sampling");
  ordered->add_option("--report", report_path, "write a JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return cmd_build(family, group_desc, q, d, out_path, phi_out);
    if (verify->parsed()) return cmd_verify(verify_ref, report_path);
    if (mcheck->parsed()) return cmd_massouros_check(mcheck_ref, mcheck_phi, report_path);
    if (solve->parsed()) return cmd_solve(sys_path, force_brute, show_trace, report_path);
    if (sweep->parsed()) return cmd_sweep(sweep_field, sweep_phi, sweep_k, sweep_n, sweep_terms, report_path);
    if (qscan->parsed()) return cmd_quotient_scan(qscan_ref, qmax, report_path);
    if (iso->parsed()) return cmd_iso(iso_a, iso_b, report_path);
    if (ordered->parsed()) return cmd_ordered(mode_name, window, dyadic, samples, report_path);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::length_error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kPropertyFailure;
  }
  return kUsage;
}
