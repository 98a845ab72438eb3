#include "hyperfield/linsolve/solve.hpp"

#include <algorithm>
#include <climits>
#include <sstream>
#include <stdexcept>

namespace hyperfield {

namespace {

elem_t coeff_of(const Equation& eq, int var) {
  const Term* t = eq.find_var(var);
  if (!t) throw std::logic_error("equation lacks an expected variable");
  return t->coeff;
}

// Recursive solver for strengthened pilefree systems of three-variable
// equations. `out` is indexed by variable id; -1 means unset.
struct Pilefree3Solver {
  const MassourosField& M;
  const FiniteHyperfield& F;
  Assignment out;

  explicit Pilefree3Solver(const MassourosField& m, std::size_t num_vars)
      : M(m), F(m.field), out(num_vars, -1) {}

  int img(elem_t e) const { return M.phi.of(e); }

  bool eval_covers(const Equation& eq) const {
    ESet acc = ESet::single(0);
    bool first = true;
    for (const Term& t : eq.terms) {
      const elem_t v = out.at(t.var);
      if (v < 0) throw std::logic_error("evaluation over an unset variable");
      const ESet term = ESet::single(F.mul(t.coeff, v));
      if (first) {
        acc = term;
        first = false;
      } else {
        acc = F.set_add(acc, term);
      }
    }
    return acc.contains_all(F.carrier());
  }

  void check_pilefree(const std::vector<Equation>& eqs, const std::vector<std::string>& names) {
    LinearSystem probe;
    probe.field = &F;
    probe.variables = names;
    probe.equations = eqs;
    probe.semantics = EqSemantics::covers_carrier;
    if (find_pile(probe))
      throw std::logic_error("induction step produced a pile; outside the construction's guarantees");
  }

  // Basis: three variables carrying at most two equations. x and y are seeded
  // at the coefficient inverses so their first-equation terms share an image,
  // then z is the least element satisfying the image constraints.
  void solve_basis(const std::vector<Equation>& eqs, const std::vector<int>& live) {
    const int vx = live[0], vy = live[1], vz = live[2];
    const Equation& eq1 = eqs[0];
    const elem_t a = coeff_of(eq1, vx), b = coeff_of(eq1, vy), c = coeff_of(eq1, vz);
    out[vx] = F.inv(a);
    out[vy] = F.inv(b);
    const int img_ax = img(F.mul(a, out[vx]));

    if (eqs.size() == 1) {
      for (elem_t z = 1; z < F.size(); ++z) {
        if (img(F.mul(c, z)) == img_ax) continue;
        out[vz] = z;
        if (eval_covers(eq1)) return;
        out[vz] = -1;
      }
      throw std::logic_error("basis candidates exhausted on a single equation");
    }

    const Equation& eq2 = eqs[1];
    const elem_t d = coeff_of(eq2, vx), e = coeff_of(eq2, vy), f = coeff_of(eq2, vz);
    const int img_dx = img(F.mul(d, out[vx]));
    const int img_ey = img(F.mul(e, out[vy]));
    for (elem_t z = 1; z < F.size(); ++z) {
      const int img_cz = img(F.mul(c, z));
      const int img_fz = img(F.mul(f, z));
      const bool ok = (img_dx == img_ey) ? (img_cz != img_ax && img_fz != img_dx)
                                         : ((img_fz == img_dx || img_fz == img_ey) && img_cz != img_ax);
      if (!ok) continue;
      out[vz] = z;
      if (eval_covers(eq1) && eval_covers(eq2)) return;
      out[vz] = -1;
    }
    throw std::logic_error("basis candidates exhausted; the field fails large sums");
  }

  // Back-solves zstar against the one withheld equation whose other two
  // variables already have values.
  void back_solve_single(const Equation& eq, int zstar) {
    std::vector<int> known_imgs;
    elem_t zcoeff = -1;
    for (const Term& t : eq.terms) {
      if (t.var == zstar) {
        zcoeff = t.coeff;
      } else {
        known_imgs.push_back(img(F.mul(t.coeff, out.at(t.var))));
      }
    }
    if (zcoeff < 0 || known_imgs.size() != 2) throw std::logic_error("withheld equation has the wrong shape");
    for (elem_t z = 1; z < F.size(); ++z) {
      const int iz = img(F.mul(zcoeff, z));
      const bool ok = (known_imgs[0] == known_imgs[1]) ? iz != known_imgs[0]
                                                       : (iz == known_imgs[0] || iz == known_imgs[1]);
      if (!ok) continue;
      out[zstar] = z;
      if (eval_covers(eq)) return;
      out[zstar] = -1;
    }
    throw std::logic_error("no value solves the withheld equation; the field fails large sums");
  }

  // Back-solves zstar against its two original equations after the reduced
  // system is solved. Case 1 (some term images coincide) scans values
  // directly; case 2 routes through the least element s of the first pair sum
  // whose negation the second pair sum contains.
  void back_solve_pair(const Equation& ea, const Equation& eb, int zstar) {
    const elem_t c = coeff_of(ea, zstar);
    const elem_t f = coeff_of(eb, zstar);
    const elem_t scale = F.mul(c, F.inv(f));

    std::vector<elem_t> first_vals, second_vals;
    for (const Term& t : ea.terms)
      if (t.var != zstar) first_vals.push_back(F.mul(t.coeff, out.at(t.var)));
    for (const Term& t : eb.terms)
      if (t.var != zstar) second_vals.push_back(F.mul(F.mul(scale, t.coeff), out.at(t.var)));
    if (first_vals.size() != 2 || second_vals.size() != 2)
      throw std::logic_error("induction equations have the wrong shape");

    const int imgs[4] = {img(first_vals[0]), img(first_vals[1]), img(second_vals[0]), img(second_vals[1])};
    bool all_distinct = true;
    for (int i = 0; i < 4 && all_distinct; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (imgs[i] == imgs[j]) {
          all_distinct = false;
          break;
        }

    if (!all_distinct) {
      for (elem_t z = 1; z < F.size(); ++z) {
        out[zstar] = z;
        if (eval_covers(ea) && eval_covers(eb)) return;
        out[zstar] = -1;
      }
      throw std::logic_error("back-substitution exhausted in the coinciding-image case");
    }

    const ESet sum1 = F.hadd(first_vals[0], first_vals[1]);
    const ESet sum2 = F.hadd(second_vals[0], second_vals[1]);
    for (elem_t s = 1; s < F.size(); ++s) {
      if (!sum1.contains(s) || !sum2.contains(F.neg(s))) continue;
      out[zstar] = F.mul(F.inv(c), s);
      if (eval_covers(ea) && eval_covers(eb)) return;
      out[zstar] = -1;
    }
    throw std::logic_error("back-substitution exhausted in the distinct-image case");
  }

  void solve_rec(std::vector<Equation> eqs, std::vector<int> live, const std::vector<std::string>& names) {
    if (eqs.empty()) {
      for (int v : live) out[v] = F.one();
      return;
    }
    if (live.size() == 3) {
      if (eqs.size() > 2) throw std::logic_error("three live variables carry more than two equations");
      solve_basis(eqs, live);
      return;
    }

    std::vector<int> count(out.size(), 0);
    for (const Equation& eq : eqs)
      for (const Term& t : eq.terms) ++count[t.var];
    int min_count = INT_MAX;
    for (int v : live) min_count = std::min(min_count, count[v]);

    if (min_count == 0) {
      int zstar = -1;
      for (int v : live)
        if (count[v] == 0) {
          zstar = v;
          break;
        }
      out[zstar] = F.one();
      live.erase(std::find(live.begin(), live.end(), zstar));
      solve_rec(std::move(eqs), std::move(live), names);
      return;
    }

    if (min_count == 1) {
      int zstar = -1;
      for (int v : live)
        if (count[v] == 1) {
          zstar = v;
          break;
        }
      std::size_t pos = eqs.size();
      for (std::size_t i = 0; i < eqs.size(); ++i)
        if (eqs[i].has_var(zstar)) {
          pos = i;
          break;
        }
      const Equation withheld = eqs[pos];
      eqs.erase(eqs.begin() + static_cast<long>(pos));
      live.erase(std::find(live.begin(), live.end(), zstar));
      solve_rec(std::move(eqs), std::move(live), names);
      back_solve_single(withheld, zstar);
      return;
    }

    if (min_count != 2)
      throw std::logic_error("pigeonhole violation: no variable lies in at most two equations");

    std::vector<int> cands;
    for (int v : live)
      if (count[v] == 2) cands.push_back(v);

    auto pair_positions = [&](int zstar) {
      std::pair<int, int> pos{-1, -1};
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (!eqs[i].has_var(zstar)) continue;
        (pos.first < 0 ? pos.first : pos.second) = static_cast<int>(i);
      }
      return pos;
    };
    auto other_vars = [&](const Equation& eq, int zstar) {
      std::vector<int> vs;
      for (const Term& t : eq.terms)
        if (t.var != zstar) vs.push_back(t.var);
      return vs;
    };

    // Preferred route: combine the two equations when their remaining
    // variables overlap in at most one place, so the combined equation keeps
    // at least three variables.
    for (int zstar : cands) {
      const auto [p1, p2] = pair_positions(zstar);
      const auto v1 = other_vars(eqs[p1], zstar);
      const auto v2 = other_vars(eqs[p2], zstar);
      int overlap = 0;
      for (int v : v1)
        if (std::find(v2.begin(), v2.end(), v) != v2.end()) ++overlap;
      if (overlap > 1) continue;

      const Equation ea = eqs[p1], eb = eqs[p2];
      Equation combined = combine_for_induction(F, ea, eb, zstar);
      eqs.erase(eqs.begin() + p2);
      eqs.erase(eqs.begin() + p1);
      eqs.push_back(std::move(combined));
      live.erase(std::find(live.begin(), live.end(), zstar));

      if (eqs.back().terms.size() > 3) {
        LinearSystem tmp;
        tmp.field = &F;
        tmp.variables = names;
        tmp.equations = std::move(eqs);
        tmp.semantics = EqSemantics::covers_carrier;
        ReductionTrace scratch;  // removals do not affect values
        tmp = reduce_to_three(std::move(tmp), scratch);
        eqs = std::move(tmp.equations);
      } else {
        check_pilefree(eqs, names);
      }
      solve_rec(std::move(eqs), std::move(live), names);
      back_solve_pair(ea, eb, zstar);
      return;
    }

    // Fallback for fully overlapping pairs: both equations live on the same
    // three variables {u, w, zstar}. Pinning w to a ratio of u keeps a
    // nonzero cancellation inside the pair sums available for the
    // back-substitution, and the pair itself leaves the system.
    for (int zstar : cands) {
      const auto [p1, p2] = pair_positions(zstar);
      const auto vs = other_vars(eqs[p1], zstar);
      const int u = std::min(vs[0], vs[1]);
      const int w = std::max(vs[0], vs[1]);

      bool shares_both = false;
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (static_cast<int>(i) == p1 || static_cast<int>(i) == p2) continue;
        if (eqs[i].has_var(u) && eqs[i].has_var(w)) {
          shares_both = true;
          break;
        }
      }
      if (shares_both) continue;

      const Equation ea = eqs[p1], eb = eqs[p2];
      const elem_t scale = F.mul(coeff_of(ea, zstar), F.inv(coeff_of(eb, zstar)));
      const elem_t mu = least_nonzero(F.hadd(coeff_of(ea, u), F.mul(scale, coeff_of(eb, u))), F);
      const elem_t nw = least_nonzero(F.hadd(coeff_of(ea, w), F.mul(scale, coeff_of(eb, w))), F);
      const elem_t ratio = F.mul(F.neg(F.inv(nw)), mu);

      std::vector<Equation> next;
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (static_cast<int>(i) == p1 || static_cast<int>(i) == p2) continue;
        Equation eq = eqs[i];
        for (Term& t : eq.terms)
          if (t.var == w) t = {F.mul(t.coeff, ratio), u};
        next.push_back(std::move(eq));
      }

      std::vector<int> next_live;
      for (int v : live)
        if (v != zstar && v != w) next_live.push_back(v);

      // The variable identification can create a pile; such a candidate is
      // outside this route's guarantees.
      {
        LinearSystem probe;
        probe.field = &F;
        probe.variables = names;
        probe.equations = next;
        probe.semantics = EqSemantics::covers_carrier;
        if (find_pile(probe)) continue;
      }

      solve_rec(std::move(next), std::move(next_live), names);
      out[w] = F.mul(ratio, out.at(u));
      back_solve_pair(ea, eb, zstar);
      return;
    }

    throw std::logic_error("no admissible variable elimination step; system outside the construction's reach");
  }
};

}  // namespace

Assignment solve_pilefree3(const MassourosField& M, const LinearSystem& s) {
  if (s.semantics != EqSemantics::covers_carrier)
    throw std::invalid_argument("the structured solver works on strengthened systems");
  for (const Equation& eq : s.equations)
    if (eq.terms.size() != 3)
      throw std::invalid_argument("every equation must have exactly three variables");
  if (find_pile(s)) throw std::invalid_argument("the structured solver needs a pilefree system");
  if (s.variables.size() <= s.equations.size())
    throw std::invalid_argument("needs strictly more variables than equations");

  Pilefree3Solver solver(M, s.variables.size());
  solver.solve_rec(s.equations, s.occurring_variables(), s.variables);
  for (elem_t& v : solver.out)
    if (v < 0) v = M.field.one();
  return solver.out;
}

namespace {

SolveResult solve_impl(const MassourosField& M, const LinearSystem& s) {
  if (s.semantics != EqSemantics::contains_zero)
    throw std::invalid_argument("solve expects contains-zero semantics");
  if (s.variables.size() <= s.equations.size())
    throw std::invalid_argument("FETVINS applies to systems with more variables than equations");

  SolveResult res;
  LinearSystem cur = eliminate_small_eqs(s, res.trace);
  cur = remove_piles(std::move(cur), res.trace);
  cur = strengthen(std::move(cur));
  cur = reduce_to_three(std::move(cur), res.trace);

  const Assignment reduced = solve_pilefree3(M, cur);
  res.assignment = replay_trace(s.variables.size(), res.trace, cur, reduced);
  for (elem_t& v : res.assignment)
    if (v < 0) v = M.field.one();

  const SolutionCheck chk = check_solution(*s.field, s, res.assignment);
  if (!chk.solves || !chk.nontrivial)
    throw std::logic_error("solver self-check failed: produced assignment does not solve the system");
  return res;
}

}  // namespace

SolveResult solve(const MassourosField& M, const LinearSystem& s) {
  if (!verify_massouros(M.field, M.phi).all_passed())
    throw std::invalid_argument("field '" + M.field.name() + "' fails the Massouros conditions");
  if (!verify_large_sums(M).all_passed())
    throw std::invalid_argument("field '" + M.field.name() + "' fails the large-sums check");
  return solve_impl(M, s);
}

SolveResult solve_prechecked(const MassourosField& M, const LinearSystem& s) { return solve_impl(M, s); }

namespace {

std::string render_system(const LinearSystem& s) {
  std::ostringstream os;
  for (std::size_t e = 0; e < s.equations.size(); ++e) {
    if (e) os << " | ";
    const Equation& eq = s.equations[e];
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      if (t) os << " + ";
      os << s.field->elem_name(eq.terms[t].coeff) << '*' << s.variables[eq.terms[t].var];
    }
  }
  return os.str();
}

}  // namespace

std::string SweepReport::to_string() const {
  std::ostringstream os;
  os << "sweep over " << field << ": k=" << eqs << " n=" << vars << " max-terms=" << max_terms << '\n';
  os << "equations enumerated: " << equations_enumerated << '\n';
  os << "systems checked: " << systems << '\n';
  os << "structured solver: " << (structured_solver_used ? "yes" : "brute force only") << '\n';
  os << "counterexamples: " << counterexamples.size() << '\n';
  for (const auto& c : counterexamples) os << "  " << c << '\n';
  os << "disagreements: " << disagreements.size() << '\n';
  for (const auto& d : disagreements) os << "  " << d << '\n';
  if (truncated) os << "TRUNCATED: candidate cap reached before the enumeration finished\n";
  return os.str();
}

SweepReport fetvins_sweep(const FiniteHyperfield& F, const PhiMap* phi, int k, int n, int max_terms,
                          long long candidate_cap) {
  if (k < 1 || n < 2 || k >= n)
    throw std::invalid_argument("sweep needs 1 <= k < n");
  if (max_terms < 1) throw std::invalid_argument("sweep needs max-terms >= 1");
  if (n > 20) throw std::invalid_argument("sweep variable count out of range");
  max_terms = std::min(max_terms, n);

  SweepReport report;
  report.field = F.name();
  report.eqs = k;
  report.vars = n;
  report.max_terms = max_terms;

  // A verified Massouros pair turns on the structured cross-check.
  const bool structured = phi != nullptr && verify_massouros(F, *phi).all_passed();
  MassourosField M{F, structured ? *phi : PhiMap()};
  const bool cross_check = structured && verify_large_sums(M).all_passed();
  report.structured_solver_used = cross_check;

  // Canonicalized equation pool: ascending supports, first coefficient 1,
  // remaining coefficients over all nonzero elements in index order.
  std::vector<std::vector<Term>> pool;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) > max_terms) continue;
    std::vector<int> vars;
    for (int v = 0; v < n; ++v)
      if (mask & (1 << v)) vars.push_back(v);
    const int extras = static_cast<int>(vars.size()) - 1;
    std::vector<elem_t> coefs(vars.size(), F.one());
    while (true) {
      std::vector<Term> eq;
      for (std::size_t i = 0; i < vars.size(); ++i) eq.push_back({coefs[i], vars[i]});
      pool.push_back(std::move(eq));
      int pos = extras;
      for (; pos >= 1; --pos) {
        if (coefs[pos] + 1 < F.size()) {
          ++coefs[pos];
          for (int j = pos + 1; j <= extras; ++j) coefs[j] = 1;
          break;
        }
      }
      if (pos < 1) break;
    }
  }
  report.equations_enumerated = static_cast<long long>(pool.size());
  if (static_cast<std::size_t>(k) > pool.size())
    throw std::invalid_argument("fewer canonical equations than requested system size");

  long long brute_space = 1;
  for (int i = 0; i < n; ++i) {
    brute_space *= F.size();
    if (brute_space > candidate_cap) throw std::length_error("assignment space exceeds the cap");
  }

  LinearSystem sys;
  sys.field = cross_check ? &M.field : &F;
  for (int v = 0; v < n; ++v) sys.variables.push_back("x" + std::to_string(v + 1));

  std::vector<int> combo(k);
  for (int i = 0; i < k; ++i) combo[i] = i;
  long long consumed = 0;
  while (true) {
    if (consumed + brute_space > candidate_cap) {
      report.truncated = true;
      break;
    }
    consumed += brute_space;
    ++report.systems;

    sys.equations.clear();
    for (int i = 0; i < k; ++i) {
      Equation eq;
      eq.id = i + 1;
      eq.terms = pool[combo[i]];
      sys.equations.push_back(std::move(eq));
    }

    const auto brute = brute_solve(sys, candidate_cap);
    if (!brute) report.counterexamples.push_back(render_system(sys));

    if (cross_check) {
      bool solved = false;
      std::string why;
      try {
        solve_prechecked(M, sys);
        solved = true;
      } catch (const std::exception& ex) {
        why = ex.what();
      }
      if (solved != brute.has_value())
        report.disagreements.push_back(render_system(sys) + "  [structured: " +
                                       (solved ? "solved" : ("failed: " + why)) + ", oracle: " +
                                       (brute ? "solved" : "no solution") + "]");
    }

    // next k-combination of pool indices
    int pos = k - 1;
    while (pos >= 0 && combo[pos] == static_cast<int>(pool.size()) - k + pos) --pos;
    if (pos < 0) break;
    ++combo[pos];
    for (int j = pos + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
  }

  return report;
}

}  // namespace hyperfield
