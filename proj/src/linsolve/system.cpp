#include "hyperfield/linsolve/system.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hyperfield {

bool Equation::has_var(int var) const { return find_var(var) != nullptr; }

const Term* Equation::find_var(int var) const {
  for (const Term& t : terms)
    if (t.var == var) return &t;
  return nullptr;
}

std::vector<int> LinearSystem::occurring_variables() const {
  std::vector<bool> seen(variables.size(), false);
  for (const Equation& eq : equations)
    for (const Term& t : eq.terms) seen[t.var] = true;
  std::vector<int> out;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(static_cast<int>(v));
  return out;
}

std::string LinearSystem::to_string() const {
  std::ostringstream os;
  for (const Equation& eq : equations) {
    bool first = true;
    for (const Term& t : eq.terms) {
      if (!first) os << " + ";
      first = false;
      os << field->elem_name(t.coeff) << '*' << variables[t.var];
    }
    if (eq.terms.empty()) os << "(empty)";
    os << (semantics == EqSemantics::contains_zero ? "  contains 0" : "  covers F") << '\n';
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const std::size_t start = s.find_first_not_of(" \t\r");
  if (start == std::string::npos) return "";
  const std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(start, end - start + 1);
}

}  // namespace

LinearSystem parse_equations(const std::string& text, const FiniteHyperfield& F) {
  LinearSystem sys;
  sys.field = &F;
  std::unordered_map<std::string, int> var_ids;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;

    Equation eq;
    eq.id = static_cast<int>(sys.equations.size()) + 1;
    std::size_t pos = 0;
    while (pos < line.size()) {
      std::size_t plus = line.find('+', pos);
      if (plus == std::string::npos) plus = line.size();
      const std::string token = trim(line.substr(pos, plus - pos));
      pos = plus + 1;
      if (token.empty())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": empty term");
      const std::size_t star = token.find('*');
      if (star == std::string::npos || star == 0 || star + 1 >= token.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": term '" + token +
                                    "' is not of the form coeff*var");
      const std::string coeff_name = trim(token.substr(0, star));
      const std::string var_name = trim(token.substr(star + 1));
      const elem_t coeff = F.elem_by_name(coeff_name);
      if (coeff == 0)
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": zero coefficients are not allowed");
      auto [it, fresh] = var_ids.emplace(var_name, static_cast<int>(sys.variables.size()));
      if (fresh) sys.variables.push_back(var_name);
      const int var = it->second;
      for (const Term& t : eq.terms)
        if (t.var == var)
          throw std::invalid_argument("line " + std::to_string(line_no) + ": variable '" + var_name +
                                      "' appears twice in one equation");
      eq.terms.push_back({coeff, var});
    }
    if (eq.terms.empty())
      throw std::invalid_argument("line " + std::to_string(line_no) + ": equation without terms");
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

SystemFile read_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  SystemFile out;
  std::string line;
  bool header_done = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (!header_done) {
      if (t.empty() || t[0] == '#') continue;
      if (t.rfind("field:", 0) == 0) {
        out.field_ref = trim(t.substr(6));
        continue;
      }
      if (t.rfind("phi:", 0) == 0) {
        out.phi_ref = trim(t.substr(4));
        continue;
      }
      header_done = true;
    }
    out.equations_text += line;
    out.equations_text += '\n';
  }
  if (out.field_ref.empty()) throw std::invalid_argument(path + ": missing 'field:' header");
  return out;
}

ESet eval_equation(const FiniteHyperfield& F, const Equation& eq, const Assignment& a) {
  ESet acc = ESet::single(0);
  bool first = true;
  for (const Term& t : eq.terms) {
    const ESet term = ESet::single(F.mul(t.coeff, a.at(t.var)));
    if (first) {
      acc = term;
      first = false;
    } else {
      acc = F.set_add(acc, term);
    }
  }
  return acc;
}

SolutionCheck check_solution(const FiniteHyperfield& F, const LinearSystem& s, const Assignment& a) {
  if (a.size() != s.variables.size())
    throw std::invalid_argument("assignment does not cover all variables");
  SolutionCheck out;
  out.solves = true;
  for (const Equation& eq : s.equations) {
    const ESet val = eval_equation(F, eq, a);
    const bool ok = s.semantics == EqSemantics::contains_zero ? val.contains(0)
                                                              : val.contains_all(F.carrier());
    if (!ok) {
      out.solves = false;
      break;
    }
  }
  for (elem_t v : a)
    if (v != 0) out.nontrivial = true;
  return out;
}

std::optional<Assignment> brute_solve(const LinearSystem& s, long long candidate_cap) {
  const FiniteHyperfield& F = *s.field;
  const int nvars = static_cast<int>(s.variables.size());
  const int base = F.size();

  double space = 1;
  for (int i = 0; i < nvars; ++i) space *= base;
  if (space > static_cast<double>(candidate_cap))
    throw std::length_error("brute force space of " + std::to_string(space) +
                            " assignments exceeds the cap");

  Assignment a(nvars, 0);
  while (true) {
    // advance to the next assignment in lexicographic order
    int i = nvars - 1;
    for (; i >= 0; --i) {
      if (a[i] + 1 < base) {
        ++a[i];
        for (int j = i + 1; j < nvars; ++j) a[j] = 0;
        break;
      }
    }
    if (i < 0) return std::nullopt;  // wrapped: all-zero again
    const SolutionCheck c = check_solution(F, s, a);
    if (c.solves && c.nontrivial) return a;
  }
}

}  // namespace hyperfield
