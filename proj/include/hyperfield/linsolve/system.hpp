#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperfield/table.hpp"

namespace hyperfield {

/// Equation semantics: the sum must contain 0, or must cover the whole
/// carrier (the strengthened form).
enum class EqSemantics { contains_zero, covers_carrier };

struct Term {
  elem_t coeff;  // always nonzero
  int var;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Equation {
  int id = -1;  // stable original equation number, for traces
  std::vector<Term> terms;

  bool has_var(int var) const;
  const Term* find_var(int var) const;
};

/// A sparse homogeneous system over one hyperfield. Variable ids index into
/// `variables` and stay stable across reductions; the field is non-owning and
/// must outlive the system.
struct LinearSystem {
  const FiniteHyperfield* field = nullptr;
  std::vector<std::string> variables;
  std::vector<Equation> equations;
  EqSemantics semantics = EqSemantics::contains_zero;

  /// Distinct variables occurring in at least one equation.
  std::vector<int> occurring_variables() const;
  std::string to_string() const;
};

/// A total valuation of the system's variables, indexed by variable id.
using Assignment = std::vector<elem_t>;

/// Parses equations given as `+`-separated `coeff*var` tokens, one equation
/// per line (element names may begin with '-'). Variables are numbered by
/// first occurrence. Rejects zero coefficients, unknown element names and
/// duplicate variables within an equation.
LinearSystem parse_equations(const std::string& text, const FiniteHyperfield& F);

/// Contents of a ".sys" file: field reference, optional phi reference, and
/// the equation block.
struct SystemFile {
  std::string field_ref;
  std::string phi_ref;  // empty when absent
  std::string equations_text;
};

SystemFile read_system_file(const std::string& path);

/// Sum of the singleton sets {coeff * value} over the equation's terms;
/// zero-valued terms contribute {0}. An empty equation evaluates to {0}.
ESet eval_equation(const FiniteHyperfield& F, const Equation& eq, const Assignment& a);

struct SolutionCheck {
  bool solves = false;
  bool nontrivial = false;
};

SolutionCheck check_solution(const FiniteHyperfield& F, const LinearSystem& s, const Assignment& a);

/// Lexicographically first nontrivial solution by exhaustive scan, or none.
/// Refuses when carrier^variables exceeds the candidate cap.
std::optional<Assignment> brute_solve(const LinearSystem& s, long long candidate_cap = 100'000'000);

}  // namespace hyperfield
