#include "hyperfield/linsolve/reduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hyperfield {

void ReductionTrace::zero_var(int var, std::string reason) {
  TraceStep s;
  s.kind = TraceStep::Kind::zero_var;
  s.var = var;
  s.reason = std::move(reason);
  steps.push_back(std::move(s));
}

void ReductionTrace::substitute(int var, elem_t coeff, int src_var) {
  TraceStep s;
  s.kind = TraceStep::Kind::substitute;
  s.var = var;
  s.coeff = coeff;
  s.src_var = src_var;
  steps.push_back(std::move(s));
}

void ReductionTrace::drop_equation(int id, std::string reason) {
  TraceStep s;
  s.kind = TraceStep::Kind::drop_equation;
  s.equation = id;
  s.reason = std::move(reason);
  steps.push_back(std::move(s));
}

void ReductionTrace::merge_coefficient(int id, int var, elem_t chosen, ESet source) {
  TraceStep s;
  s.kind = TraceStep::Kind::merge_coefficient;
  s.equation = id;
  s.var = var;
  s.coeff = chosen;
  s.source_set = source;
  steps.push_back(std::move(s));
}

void ReductionTrace::remove_term(int id, int var, elem_t coeff) {
  TraceStep s;
  s.kind = TraceStep::Kind::remove_term;
  s.equation = id;
  s.var = var;
  s.coeff = coeff;
  steps.push_back(std::move(s));
}

std::string ReductionTrace::to_string(const FiniteHyperfield& F,
                                      const std::vector<std::string>& var_names) const {
  std::ostringstream os;
  for (const TraceStep& s : steps) {
    switch (s.kind) {
      case TraceStep::Kind::zero_var:
        os << var_names.at(s.var) << " := 0";
        if (!s.reason.empty()) os << "  (" << s.reason << ")";
        break;
      case TraceStep::Kind::substitute:
        os << var_names.at(s.var) << " := " << F.elem_name(s.coeff) << "*" << var_names.at(s.src_var);
        break;
      case TraceStep::Kind::drop_equation:
        os << "drop equation " << s.equation;
        if (!s.reason.empty()) os << "  (" << s.reason << ")";
        break;
      case TraceStep::Kind::merge_coefficient:
        os << "equation " << s.equation << ": coefficient of " << var_names.at(s.var) << " merges to "
           << F.elem_name(s.coeff) << " from " << F.set_to_string(s.source_set);
        break;
      case TraceStep::Kind::remove_term:
        os << "equation " << s.equation << ": remove term " << F.elem_name(s.coeff) << "*"
           << var_names.at(s.var);
        break;
    }
    os << '\n';
  }
  return os.str();
}

elem_t least_nonzero(const ESet& s, const FiniteHyperfield& F) {
  for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
    const elem_t e = __builtin_ctzll(m);
    if (e != 0) return e;
  }
  throw std::domain_error("coefficient hypersum " + F.set_to_string(s) +
                          " has no nonzero element; system is internally contradictory");
}

namespace {

// Removes every term of `var` from the remaining equations (the variable was
// zeroed), dropping equations that become empty. Positions in `eqs` shift.
void prune_zeroed_var(std::vector<Equation>& eqs, int var, ReductionTrace& trace) {
  for (std::size_t i = 0; i < eqs.size();) {
    Equation& eq = eqs[i];
    bool removed = false;
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      if (eq.terms[t].var == var) {
        trace.remove_term(eq.id, var, eq.terms[t].coeff);
        eq.terms.erase(eq.terms.begin() + static_cast<long>(t));
        removed = true;
        break;
      }
    }
    if (removed && eq.terms.empty()) {
      trace.drop_equation(eq.id, "vacuous after zeroing");
      eqs.erase(eqs.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
}

// Rewrites every occurrence of `var` as coeff*src throughout, merging with an
// existing src term when present.
void apply_substitution(const FiniteHyperfield& F, std::vector<Equation>& eqs, int var, elem_t coeff,
                        int src, ReductionTrace& trace) {
  for (Equation& eq : eqs) {
    int var_pos = -1;
    int src_pos = -1;
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      if (eq.terms[t].var == var) var_pos = static_cast<int>(t);
      if (eq.terms[t].var == src) src_pos = static_cast<int>(t);
    }
    if (var_pos < 0) continue;
    const elem_t routed = F.mul(eq.terms[var_pos].coeff, coeff);
    if (src_pos < 0) {
      eq.terms[var_pos] = {routed, src};
    } else {
      const ESet merged = F.hadd(eq.terms[src_pos].coeff, routed);
      const elem_t chosen = least_nonzero(merged, F);
      trace.merge_coefficient(eq.id, src, chosen, merged);
      eq.terms[src_pos].coeff = chosen;
      eq.terms.erase(eq.terms.begin() + var_pos);
    }
  }
}

}  // namespace

LinearSystem eliminate_small_eqs(LinearSystem s, ReductionTrace& trace) {
  if (s.semantics != EqSemantics::contains_zero)
    throw std::invalid_argument("small-equation elimination needs contains-zero semantics");
  const FiniteHyperfield& F = *s.field;

  while (true) {
    int pos = -1;
    for (std::size_t i = 0; i < s.equations.size(); ++i) {
      const std::size_t k = s.equations[i].terms.size();
      if (k == 1 || k == 2) {
        pos = static_cast<int>(i);
        break;
      }
    }
    if (pos < 0) break;

    Equation eq = s.equations[pos];
    s.equations.erase(s.equations.begin() + pos);
    if (eq.terms.size() == 1) {
      // a*x contains 0 forces x = 0.
      trace.zero_var(eq.terms[0].var, "one-variable equation " + std::to_string(eq.id));
      trace.drop_equation(eq.id, "one-variable");
      prune_zeroed_var(s.equations, eq.terms[0].var, trace);
    } else {
      // a*x + b*y contains 0 under y := (-b^{-1} a) * x.
      const Term& tx = eq.terms[0];
      const Term& ty = eq.terms[1];
      const elem_t coeff = F.mul(F.neg(F.inv(ty.coeff)), tx.coeff);
      trace.substitute(ty.var, coeff, tx.var);
      trace.drop_equation(eq.id, "two-variable");
      apply_substitution(F, s.equations, ty.var, coeff, tx.var, trace);
    }
  }
  return s;
}

LinearSystem remove_piles(LinearSystem s, ReductionTrace& trace) {
  if (s.semantics != EqSemantics::contains_zero)
    throw std::invalid_argument("pile removal needs contains-zero semantics");

  while (true) {
    const auto pile = find_pile(s);
    if (!pile) break;

    std::string desc = "pile {";
    for (std::size_t i = 0; i < pile->variables.size(); ++i) {
      if (i) desc += ", ";
      desc += s.variables[pile->variables[i]];
    }
    desc += "}";

    for (int v : pile->variables) trace.zero_var(v, desc);
    // Drop pile equations from the back so positions stay valid.
    for (auto it = pile->equations.rbegin(); it != pile->equations.rend(); ++it) {
      trace.drop_equation(s.equations[*it].id, desc);
      s.equations.erase(s.equations.begin() + *it);
    }
    for (int v : pile->variables) prune_zeroed_var(s.equations, v, trace);

    s = eliminate_small_eqs(std::move(s), trace);
  }
  return s;
}

LinearSystem strengthen(LinearSystem s) {
  s.semantics = EqSemantics::covers_carrier;
  return s;
}

LinearSystem reduce_to_three(LinearSystem s, ReductionTrace& trace) {
  if (find_pile(s)) throw std::invalid_argument("term reduction needs a pilefree system");
  for (const Equation& eq : s.equations)
    if (eq.terms.size() < 3)
      throw std::invalid_argument("term reduction needs at least three variables per equation");

  while (true) {
    int pos = -1;
    for (std::size_t i = 0; i < s.equations.size(); ++i)
      if (s.equations[i].terms.size() > 3) {
        pos = static_cast<int>(i);
        break;
      }
    if (pos < 0) break;

    Equation& eq = s.equations[pos];
    bool reduced = false;
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      const Term removed = eq.terms[t];
      eq.terms.erase(eq.terms.begin() + static_cast<long>(t));
      if (!find_pile(s)) {
        trace.remove_term(eq.id, removed.var, removed.coeff);
        reduced = true;
        break;
      }
      eq.terms.insert(eq.terms.begin() + static_cast<long>(t), removed);
    }
    if (!reduced)
      throw std::logic_error("no term of equation " + std::to_string(eq.id) +
                             " can be removed without creating a pile");
  }
  return s;
}

Equation combine_for_induction(const FiniteHyperfield& F, const Equation& eq1, const Equation& eq2, int z) {
  const Term* tz1 = eq1.find_var(z);
  const Term* tz2 = eq2.find_var(z);
  if (!tz1 || !tz2) throw std::invalid_argument("both equations must contain the shared variable");
  const elem_t scale = F.mul(tz1->coeff, F.inv(tz2->coeff));  // c * f^{-1}

  Equation out;
  out.id = eq1.id;
  for (const Term& t : eq1.terms)
    if (t.var != z) out.terms.push_back(t);
  for (const Term& t : eq2.terms) {
    if (t.var == z) continue;
    const elem_t rescaled = F.mul(scale, t.coeff);
    bool merged = false;
    for (Term& existing : out.terms) {
      if (existing.var != t.var) continue;
      existing.coeff = least_nonzero(F.hadd(existing.coeff, rescaled), F);
      merged = true;
      break;
    }
    if (!merged) out.terms.push_back({rescaled, t.var});
  }
  std::sort(out.terms.begin(), out.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
  return out;
}

Assignment replay_trace(std::size_t num_vars, const ReductionTrace& trace, const LinearSystem& reduced,
                        const Assignment& reduced_assignment) {
  const FiniteHyperfield& F = *reduced.field;
  Assignment full(num_vars, -1);
  for (std::size_t v = 0; v < reduced_assignment.size() && v < num_vars; ++v)
    full[v] = reduced_assignment[v];

  for (auto it = trace.steps.rbegin(); it != trace.steps.rend(); ++it) {
    switch (it->kind) {
      case TraceStep::Kind::zero_var:
        full.at(it->var) = 0;
        break;
      case TraceStep::Kind::substitute: {
        const elem_t src = full.at(it->src_var);
        if (src < 0) throw std::logic_error("substitution source has no value during replay");
        full.at(it->var) = F.mul(it->coeff, src);
        break;
      }
      default:
        break;
    }
  }
  return full;
}

}  // namespace hyperfield
