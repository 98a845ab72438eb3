#pragma once

#include <string>
#include <vector>

#include "hyperfield/constructions.hpp"
#include "hyperfield/linsolve/reduce.hpp"
#include "hyperfield/linsolve/system.hpp"

namespace hyperfield {

struct SolveResult {
  Assignment assignment;
  ReductionTrace trace;
};

/// Solves a strengthened pilefree system of three-variable equations with
/// every variable nonzero: recursion on the variable count, with the
/// two-equation basis seeded at x = a^-1, y = b^-1 and all choice points
/// resolved by least element index. Variables outside every equation get 1.
Assignment solve_pilefree3(const MassourosField& M, const LinearSystem& s);

/// Full pipeline for a contains-zero system with more variables than
/// equations over a verified Massouros field: eliminate small equations,
/// remove piles, strengthen, reduce to three-variable equations, solve, and
/// replay the trace to a checked nontrivial assignment of the original
/// system.
SolveResult solve(const MassourosField& M, const LinearSystem& s);

/// Same pipeline, trusting the caller to have verified the field already.
SolveResult solve_prechecked(const MassourosField& M, const LinearSystem& s);

struct SweepReport {
  std::string field;
  int eqs = 0;
  int vars = 0;
  int max_terms = 0;
  long long equations_enumerated = 0;
  long long systems = 0;
  bool structured_solver_used = false;
  bool truncated = false;
  std::vector<std::string> counterexamples;  // systems with no nontrivial solution
  std::vector<std::string> disagreements;    // solver/oracle mismatches

  bool clean() const { return counterexamples.empty() && disagreements.empty() && !truncated; }
  std::string to_string() const;
};

/// Enumerates every system of `k` distinct canonicalized equations (first
/// coefficient scaled to 1, supports of size 1..max_terms over n variables),
/// brute-forces each, and cross-checks the structured solver when a phi map
/// is supplied and the field passes the Massouros and large-sums checks.
SweepReport fetvins_sweep(const FiniteHyperfield& F, const PhiMap* phi, int k, int n, int max_terms,
                          long long candidate_cap = 100'000'000);

}  // namespace hyperfield
