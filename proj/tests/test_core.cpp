#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hyperfield/axioms.hpp"
#include "hyperfield/constructions.hpp"
#include "hyperfield/table.hpp"

using namespace hyperfield;

namespace {

ESet set_of(const FiniteHyperfield& F, std::initializer_list<const char*> names) {
  ESet s;
  for (const char* n : names) s.insert(F.elem_by_name(n));
  return s;
}

elem_t e(const FiniteHyperfield& F, const char* name) { return F.elem_by_name(name); }

}  // namespace

TEST_CASE("krasner table basics") {
  const FiniteHyperfield K = build_krasner();
  CHECK(K.size() == 2);
  CHECK(K.hadd(1, 1) == set_of(K, {"0", "1"}));
  CHECK(K.hadd(0, 1) == set_of(K, {"1"}));
  CHECK(K.hadd(0, 0) == set_of(K, {"0"}));
  CHECK(K.neg(1) == 1);
  CHECK(K.mul(1, 1) == 1);
  CHECK(K.hsum({set_of(K, {"1"}), set_of(K, {"1"})}) == set_of(K, {"0", "1"}));
}

TEST_CASE("sign table basics") {
  const FiniteHyperfield S = build_sign();
  CHECK(S.hadd(e(S, "1"), e(S, "-1")) == S.carrier());
  CHECK(S.hadd(e(S, "1"), e(S, "1")) == set_of(S, {"1"}));
  CHECK(S.hadd(e(S, "-1"), e(S, "-1")) == set_of(S, {"-1"}));
  CHECK(S.neg(e(S, "1")) == e(S, "-1"));
  CHECK(S.mul(e(S, "-1"), e(S, "-1")) == e(S, "1"));
}

TEST_CASE("seven-element example arithmetic") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  REQUIRE(F.size() == 7);

  SUBCASE("element order is 0, 1, -1, a, -a, a^2, -a^2") {
    CHECK(F.elem_name(0) == "0");
    CHECK(F.elem_name(1) == "1");
    CHECK(F.elem_name(2) == "-1");
    CHECK(F.elem_name(3) == "a");
    CHECK(F.elem_name(6) == "-a^2");
  }

  SUBCASE("addition rules from the direct-product definition") {
    CHECK(F.hadd(e(F, "a"), e(F, "-a^2")) == set_of(F, {"a", "-a", "a^2", "-a^2"}));
    CHECK(F.hadd(e(F, "a"), e(F, "a")) == set_of(F, {"1", "-1", "a^2", "-a^2"}));
    CHECK(F.hadd(e(F, "a"), e(F, "-a")) == set_of(F, {"0", "1", "-1", "a^2", "-a^2"}));
    CHECK(F.hadd(e(F, "1"), e(F, "a^2")) == set_of(F, {"1", "-1", "a^2", "-a^2"}));
    CHECK(F.hadd(0, e(F, "-a")) == set_of(F, {"-a"}));
  }

  SUBCASE("negation and multiplication") {
    CHECK(F.neg(e(F, "a")) == e(F, "-a"));
    CHECK(F.mul(e(F, "-a^2"), e(F, "a")) == e(F, "-1"));  // a^3 = 1
    CHECK(F.inv(e(F, "a")) == e(F, "a^2"));
    CHECK(F.mul(0, e(F, "a")) == 0);
  }

  SUBCASE("scale_set multiplies elementwise") {
    CHECK(F.scale_set(e(F, "a^2"), set_of(F, {"a", "-a"})) == set_of(F, {"1", "-1"}));
    CHECK(F.scale_set(F.one(), set_of(F, {"a", "-a^2"})) == set_of(F, {"a", "-a^2"}));
    CHECK(F.scale_set(0, set_of(F, {"a", "-a^2"})) == ESet::single(0));
  }

  SUBCASE("triple sum a + a + (-1) covers the carrier") {
    // Pairwise fold oracle over the definition's rules: a + a misses only
    // {a, -a}, and adding -1 sweeps the rest back in.
    const ESet folded = F.hsum({ESet::single(e(F, "a")), ESet::single(e(F, "a")), ESet::single(e(F, "-1"))});
    CHECK(folded == F.carrier());
  }
}

TEST_CASE("hsum conventions") {
  const FiniteHyperfield K = build_krasner();
  CHECK(K.hsum({}) == ESet::single(0));
  const ESet s = set_of(K, {"1"});
  CHECK(K.hsum({s}) == s);
}

TEST_CASE("hsum is independent of fold order") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  const FiniteHyperfield& F = M.field;
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> len_dist(0, 6);
  std::uniform_int_distribution<std::uint64_t> mask_dist(1, (1u << F.size()) - 1);
  for (int round = 0; round < 200; ++round) {
    std::vector<ESet> terms;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i) terms.push_back(ESet::from_mask(mask_dist(rng)));
    const ESet base = F.hsum(terms);
    std::vector<ESet> reversed(terms.rbegin(), terms.rend());
    CHECK(F.hsum(reversed) == base);
    std::shuffle(terms.begin(), terms.end(), rng);
    CHECK(F.hsum(terms) == base);
  }
}

TEST_CASE("axiom verifier accepts the paper fields") {
  CHECK(verify_axioms(build_krasner()).all_passed());
  CHECK(verify_axioms(build_sign()).all_passed());
  CHECK(verify_axioms(build_massouros_original(AbelianGroup({3})).field).all_passed());
}

TEST_CASE("axiom verifier flags a broken Krasner table") {
  // 1 + 1 altered to {1}: no element is a negative of 1 any more.
  std::vector<std::vector<elem_t>> mul = {{0, 0}, {0, 1}};
  std::vector<std::vector<ESet>> add(2, std::vector<ESet>(2));
  add[0][0] = ESet::single(0);
  add[0][1] = add[1][0] = ESet::single(1);
  add[1][1] = ESet::single(1);
  const FiniteHyperfield broken("broken", {"0", "1"}, 1, std::move(mul), std::move(add));

  const AxiomReport report = verify_axioms(broken);
  CHECK_FALSE(report.all_passed());
  const AxiomCheck* neg = report.find("unique-negatives");
  REQUIRE(neg != nullptr);
  CHECK_FALSE(neg->passed);
  CHECK(neg->witness.find("1") != std::string::npos);
  CHECK_FALSE(broken.has_neg(1));
  CHECK_THROWS_AS(broken.neg(1), std::domain_error);
}

TEST_CASE("reversibility holds both ways on small verified fields") {
  for (const FiniteHyperfield& F :
       {build_krasner(), build_sign(), build_massouros_original(AbelianGroup({3})).field,
        build_FG(AbelianGroup({4})).field}) {
    for (elem_t y = 0; y < F.size(); ++y)
      for (elem_t z = 0; z < F.size(); ++z)
        for (elem_t x = 0; x < F.size(); ++x) {
          const bool forward = F.hadd(y, z).contains(x);
          const bool backward = F.hadd(x, F.neg(y)).contains(z);
          CHECK(forward == backward);
        }
  }
}

TEST_CASE("derived negatives match an addition-row scan") {
  const MassourosField M = build_FG(AbelianGroup({5}));
  const FiniteHyperfield& F = M.field;
  for (elem_t x = 0; x < F.size(); ++x) {
    elem_t found = -1;
    for (elem_t y = 0; y < F.size(); ++y)
      if (F.hadd(x, y).contains(0)) {
        CHECK(found == -1);
        found = y;
      }
    CHECK(found == F.neg(x));
    // in this family every element is its own negative
    CHECK(F.neg(x) == x);
  }
}

TEST_CASE("permanent-F: the carrier absorbs any single element") {
  for (const FiniteHyperfield& F :
       {build_krasner(), build_sign(), build_massouros_original(AbelianGroup({3})).field,
        build_nakassis(AbelianGroup({5}))}) {
    for (elem_t x = 0; x < F.size(); ++x)
      CHECK(F.hsum({F.carrier(), ESet::single(x)}) == F.carrier());
  }
}

TEST_CASE("distributivity as a set identity") {
  const FiniteHyperfield F = build_massouros_original(AbelianGroup({3})).field;
  for (elem_t a = 0; a < F.size(); ++a)
    for (elem_t b = 0; b < F.size(); ++b)
      for (elem_t c = 0; c < F.size(); ++c)
        CHECK(F.scale_set(a, F.hadd(b, c)) == F.hadd(F.mul(a, b), F.mul(a, c)));
}

TEST_CASE("invalid element indices are rejected") {
  const FiniteHyperfield K = build_krasner();
  CHECK_THROWS_AS(K.hadd(0, 2), std::out_of_range);
  CHECK_THROWS_AS(K.mul(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(K.inv(0), std::domain_error);
}
