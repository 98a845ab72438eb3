#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperfield/constructions.hpp"
#include "hyperfield/linsolve/solve.hpp"
#include "worked_example.hpp"

using namespace hyperfield;

namespace {

elem_t e(const FiniteHyperfield& F, const char* name) { return F.elem_by_name(name); }

bool all_nonzero(const Assignment& a) {
  for (elem_t v : a)
    if (v == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("basis fixture from the worked example") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  LinearSystem s = parse_equations("a*r + -a^2*s + 1*u\na*r + -1*s + a*u", F);
  s = strengthen(std::move(s));

  SUBCASE("the known witness assignment solves it") {
    Assignment a = {e(F, "1"), e(F, "a^2"), e(F, "-1")};
    CHECK(check_solution(F, s, a).solves);
  }
  SUBCASE("the deterministic output verifies with all variables nonzero") {
    const Assignment a = solve_pilefree3(M, s);
    CHECK(check_solution(F, s, a).solves);
    CHECK(all_nonzero(a));
    CHECK(solve_pilefree3(M, s) == a);  // deterministic
  }
}

TEST_CASE("back-substitution fixture: a value for v solves both parent equations") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  LinearSystem s = parse_equations("a*r + 1*u + 1*v\na^2*r + -a^2*s + 1*v", F);
  s = strengthen(std::move(s));
  // r, u, s fixed at the basis solution; v = a completes both equations
  Assignment a(4, 0);
  a[0] = e(F, "1");    // r
  a[1] = e(F, "-1");   // u
  a[2] = e(F, "a");    // v
  a[3] = e(F, "a^2");  // s
  CHECK(check_solution(F, s, a).solves);
}

TEST_CASE("single strengthened equation solved directly") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  LinearSystem s = parse_equations("a*p + a^2*q + 1*t", F);
  s = strengthen(std::move(s));
  const Assignment a = solve_pilefree3(M, s);
  CHECK(check_solution(F, s, a).solves);
  CHECK(all_nonzero(a));
  // seeds: p = a^{-1}, q = (a^2)^{-1}
  CHECK(a[0] == e(F, "a^2"));
  CHECK(a[1] == e(F, "a"));
}

TEST_CASE("structured solver preconditions") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  SUBCASE("wrong semantics") {
    const LinearSystem s = parse_equations("1*x + 1*y + 1*z", F);
    CHECK_THROWS_AS(solve_pilefree3(M, s), std::invalid_argument);
  }
  SUBCASE("non-three-variable equations") {
    LinearSystem s = strengthen(parse_equations("1*x + 1*y", F));
    CHECK_THROWS_AS(solve_pilefree3(M, s), std::invalid_argument);
  }
  SUBCASE("as many equations as variables") {
    LinearSystem too_square = parse_equations("1*x + 1*y + 1*z\na*x + a*y + a*z\na^2*x + 1*y + a*z", F);
    CHECK_THROWS_AS(solve(M, too_square), std::invalid_argument);
  }
  SUBCASE("a non-Massouros pairing is rejected by the gate") {
    const FiniteHyperfield S = build_sign();
    PhiMap phi(std::vector<int>{-1, 0, 1});
    const MassourosField bad{S, phi};
    const LinearSystem s = parse_equations("1*x + 1*y", S);
    CHECK_THROWS_AS(solve(bad, s), std::invalid_argument);
  }
}

TEST_CASE("full pipeline on the worked example") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  const LinearSystem s = parse_equations(hftest::kWorkedExampleEquations, F);

  const SolveResult res = solve(M, s);
  const SolutionCheck c = check_solution(F, s, res.assignment);
  CHECK(c.solves);
  CHECK(c.nontrivial);

  const std::string trace = res.trace.to_string(F, s.variables);
  CHECK(trace.find("pile {x, y, z}") != std::string::npos);
  CHECK(trace.find("w := -a^2*v") != std::string::npos);

  SUBCASE("deterministic across repeated runs") {
    const SolveResult again = solve(M, s);
    CHECK(again.assignment == res.assignment);
    CHECK(again.trace.to_string(F, s.variables) == trace);
  }

  SUBCASE("the paper's assignment is one witness") {
    Assignment paper(8, 0);
    paper[0] = e(F, "1");
    paper[1] = e(F, "a^2");
    paper[2] = e(F, "-1");
    paper[3] = e(F, "a");
    paper[4] = e(F, "-1");
    const SolutionCheck pc = check_solution(F, s, paper);
    CHECK(pc.solves);
    CHECK(pc.nontrivial);
  }
}

TEST_CASE("small systems route through eliminations") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  SUBCASE("one equation, two variables") {
    const LinearSystem s = parse_equations("a*x + a^2*y", F);
    const SolveResult res = solve(M, s);
    CHECK(check_solution(F, s, res.assignment).solves);
    CHECK(check_solution(F, s, res.assignment).nontrivial);
  }
  SUBCASE("zeroed variable with free leftovers") {
    const LinearSystem s = parse_equations("1*x\n1*x + a*y + 1*z + a^2*t", F);
    const SolveResult res = solve(M, s);
    CHECK(res.assignment[0] == 0);
    CHECK(check_solution(F, s, res.assignment).nontrivial);
  }
}

TEST_CASE("fully overlapping equation pairs") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  SUBCASE("two disjoint overlapping blocks") {
    LinearSystem s = parse_equations("1*u + 1*w + 1*z\n1*u + a*w + a^2*z\n1*p + 1*q + 1*t\n1*p + a*q + a^2*t", F);
    const SolveResult res = solve(M, s);
    const SolutionCheck c = check_solution(F, s, res.assignment);
    CHECK(c.solves);
    CHECK(c.nontrivial);
  }
  SUBCASE("overlapping block entangled with a partial block") {
    LinearSystem s = parse_equations("1*u + 1*w + 1*z\n1*u + a*w + a^2*z\n1*u + 1*p + 1*q\n1*w + 1*p + a*q", F);
    const SolveResult res = solve(M, s);
    CHECK(check_solution(F, s, res.assignment).solves);
    CHECK(check_solution(F, s, res.assignment).nontrivial);
  }
}

TEST_CASE("random systems over F_G(Z4) cross-checked against brute force") {
  const MassourosField M = build_FG(AbelianGroup({4}));
  const FiniteHyperfield& F = M.field;
  REQUIRE(verify_massouros(F, M.phi).all_passed());
  REQUIRE(verify_large_sums(M).all_passed());

  std::mt19937 rng(555000111);
  std::uniform_int_distribution<int> coeff(1, F.size() - 1);
  for (int round = 0; round < 60; ++round) {
    LinearSystem s;
    s.field = &F;
    for (int v = 0; v < 4; ++v) s.variables.push_back("x" + std::to_string(v + 1));
    for (int i = 0; i < 2; ++i) {
      Equation eq;
      eq.id = i + 1;
      std::vector<int> vars = {0, 1, 2, 3};
      std::shuffle(vars.begin(), vars.end(), rng);
      for (int t = 0; t < 3; ++t) eq.terms.push_back({coeff(rng), vars[t]});
      std::sort(eq.terms.begin(), eq.terms.end(), [](const Term& a, const Term& b) { return a.var < b.var; });
      s.equations.push_back(std::move(eq));
    }
    const auto oracle = brute_solve(s);
    REQUIRE(oracle.has_value());
    const SolveResult res = solve_prechecked(M, s);
    const SolutionCheck c = check_solution(F, s, res.assignment);
    CHECK(c.solves);
    CHECK(c.nontrivial);
  }
}

TEST_CASE("sweeps") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));

  SUBCASE("m7 one equation, two variables") {
    const SweepReport r = fetvins_sweep(M.field, &M.phi, 1, 2, 3);
    CHECK(r.structured_solver_used);
    CHECK(r.counterexamples.empty());
    CHECK(r.disagreements.empty());
    CHECK_FALSE(r.truncated);
    CHECK(r.systems == 8);
  }
  SUBCASE("krasner brute-only") {
    const FiniteHyperfield K = build_krasner();
    const SweepReport r = fetvins_sweep(K, nullptr, 1, 2, 2);
    CHECK_FALSE(r.structured_solver_used);
    CHECK(r.counterexamples.empty());
    CHECK(r.systems == 3);
  }
  SUBCASE("hypothesis gate") {
    const FiniteHyperfield K = build_krasner();
    CHECK_THROWS_AS(fetvins_sweep(K, nullptr, 3, 3, 3), std::invalid_argument);
  }
  SUBCASE("sweep reports are deterministic") {
    const SweepReport a = fetvins_sweep(M.field, &M.phi, 1, 3, 3);
    const SweepReport b = fetvins_sweep(M.field, &M.phi, 1, 3, 3);
    CHECK(a.to_string() == b.to_string());
  }
}

TEST_CASE("flipping v in the known worked-example witness breaks the fourth equation") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  const LinearSystem s = parse_equations(hftest::kWorkedExampleEquations, F);
  Assignment flipped(8, 0);
  flipped[0] = e(F, "1");
  flipped[1] = e(F, "a^2");
  flipped[2] = e(F, "-1");
  flipped[3] = e(F, "-a");  // v = -a instead of a
  flipped[4] = e(F, "-1");
  // a(-a) + a^2(-1) folds to (-a^2) + (-a^2); equal elements of the same sign
  // sum without zero, so the fourth equation no longer contains 0.
  const ESet eq4 = eval_equation(F, s.equations[3], flipped);
  CHECK_FALSE(eq4.contains(0));
  CHECK_FALSE(check_solution(F, s, flipped).solves);
}

TEST_CASE("solutions of a combined equation lift back to the pair") {
  // For every all-nonzero solution of the combined equation, some value of
  // the dropped variable solves both originating strengthened equations.
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  LinearSystem pair = parse_equations("a*r + 1*u + 1*v\n1*r + -1*s + a*v", F);
  pair = strengthen(std::move(pair));
  const int zvar = 2;  // v
  const Equation E = combine_for_induction(F, pair.equations[0], pair.equations[1], zvar);

  LinearSystem combined = pair;
  combined.equations = {E};

  Assignment a(4, 0);
  int lifted = 0;
  for (elem_t r = 1; r < F.size(); ++r)
    for (elem_t u = 1; u < F.size(); ++u)
      for (elem_t sv = 1; sv < F.size(); ++sv) {
        a[0] = r;
        a[1] = u;
        a[3] = sv;
        a[zvar] = 0;
        if (!check_solution(F, combined, a).solves) continue;
        bool liftable = false;
        for (elem_t v = 1; v < F.size() && !liftable; ++v) {
          a[zvar] = v;
          liftable = check_solution(F, pair, a).solves;
        }
        CHECK(liftable);
        ++lifted;
      }
  CHECK(lifted > 0);
}

TEST_CASE("strengthening soundness by sampling") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  const LinearSystem weak = parse_equations("a*x + 1*y + a^2*z", F);
  LinearSystem strong = strengthen(weak);
  Assignment a(3, 0);
  int strengthened_hits = 0;
  for (elem_t x = 0; x < F.size(); ++x)
    for (elem_t y = 0; y < F.size(); ++y)
      for (elem_t z = 0; z < F.size(); ++z) {
        a = {x, y, z};
        if (check_solution(F, strong, a).solves) {
          ++strengthened_hits;
          CHECK(check_solution(F, weak, a).solves);
        }
      }
  CHECK(strengthened_hits > 0);
}
