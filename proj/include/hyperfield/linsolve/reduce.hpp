#pragma once

#include <string>
#include <vector>

#include "hyperfield/linsolve/pile.hpp"
#include "hyperfield/linsolve/system.hpp"

namespace hyperfield {

/// One step of a reduction. Replaying the zero_var and substitute steps in
/// reverse order on a solution of the reduced system produces values for
/// every eliminated variable of the original system; the other step kinds
/// document equation surgery and do not carry values.
struct TraceStep {
  enum class Kind { zero_var, substitute, drop_equation, merge_coefficient, remove_term };

  Kind kind;
  int var = -1;       // zero_var / substitute target / merge & remove variable
  int src_var = -1;   // substitute source
  elem_t coeff = -1;  // substitute or merged or removed coefficient
  int equation = -1;  // equation id for drop / merge / remove
  ESet source_set;    // merge: the coefficient hypersum the choice came from
  std::string reason; // drop reason, e.g. "pile {x, y, z}"
};

struct ReductionTrace {
  std::vector<TraceStep> steps;

  void zero_var(int var, std::string reason = "");
  void substitute(int var, elem_t coeff, int src_var);
  void drop_equation(int id, std::string reason);
  void merge_coefficient(int id, int var, elem_t chosen, ESet source);
  void remove_term(int id, int var, elem_t coeff);

  std::string to_string(const FiniteHyperfield& F, const std::vector<std::string>& var_names) const;
};

/// Removes every one- and two-variable equation to a fixpoint: one-variable
/// equations zero their variable, two-variable equations substitute the
/// second variable by a multiple of the first; multi-valued merged
/// coefficients are resolved to their least nonzero element. Requires
/// contains-zero semantics. Throws if a merge produces only {0}.
LinearSystem eliminate_small_eqs(LinearSystem s, ReductionTrace& trace);

/// Zeroes the variables of every pile and drops its equations, cascading
/// through eliminate_small_eqs, until the system is pilefree.
LinearSystem remove_piles(LinearSystem s, ReductionTrace& trace);

/// Switches the system to covers-carrier semantics.
LinearSystem strengthen(LinearSystem s);

/// Reduces every equation to exactly three terms by removing terms one at a
/// time, trying candidates left to right and keeping the first removal that
/// leaves the system pilefree. Requires a pilefree strengthened system with
/// at least three variables per equation and more variables than equations.
LinearSystem reduce_to_three(LinearSystem s, ReductionTrace& trace);

/// Combines the two strengthened equations sharing variable z: rescales eq2
/// so the z coefficients agree, drops z from both and concatenates the rest,
/// merging duplicate variables via the least nonzero element of the
/// coefficient hypersum.
Equation combine_for_induction(const FiniteHyperfield& F, const Equation& eq1, const Equation& eq2, int z);

/// The merge rule: least nonzero element of a coefficient hypersum. Throws
/// when the sum is {0} (an internally contradictory system).
elem_t least_nonzero(const ESet& s, const FiniteHyperfield& F);

/// Extends a solution of the reduced system to the eliminated variables by
/// replaying zero_var / substitute steps in reverse. Entries for variables
/// untouched by both systems and the trace stay at -1.
Assignment replay_trace(std::size_t num_vars, const ReductionTrace& trace, const LinearSystem& reduced,
                        const Assignment& reduced_assignment);

}  // namespace hyperfield
