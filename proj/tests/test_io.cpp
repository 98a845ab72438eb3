#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hyperfield/axioms.hpp"
#include "hyperfield/constructions.hpp"
#include "hyperfield/table_io.hpp"

using namespace hyperfield;

TEST_CASE("hf round trip preserves the tables") {
  for (const FiniteHyperfield& F : {build_krasner(), build_sign(), build_quotient(7, 2),
                                    build_massouros_original(AbelianGroup({3})).field}) {
    std::istringstream in(format_hf(F));
    const FiniteHyperfield back = load_hf(in, "roundtrip");
    REQUIRE(back.size() == F.size());
    CHECK(back.name() == F.name());
    CHECK(back.one() == F.one());
    for (elem_t a = 0; a < F.size(); ++a) {
      CHECK(back.elem_name(a) == F.elem_name(a));
      for (elem_t b = 0; b < F.size(); ++b) {
        CHECK(back.mul(a, b) == F.mul(a, b));
        CHECK(back.hadd(a, b) == F.hadd(a, b));
      }
    }
  }
}

TEST_CASE("loader rejections") {
  SUBCASE("non-symmetric add entry") {
    const char* text =
        "name: bad\n"
        "elements: 0 1\n"
        "one: 1\n"
        "mul:\n0 0\n0 1\n"
        "add:\n{0} {1}\n{0,1} {0,1}\n";  // add[0][1] != add[1][0]
    std::istringstream in(text);
    CHECK_THROWS_WITH_AS(load_hf(in, "t"), doctest::Contains("not symmetric"), std::invalid_argument);
  }
  SUBCASE("empty add entry") {
    const char* text =
        "name: bad\nelements: 0 1\none: 1\nmul:\n0 0\n0 1\nadd:\n{0} {1}\n{1} {}\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(load_hf(in, "t"), std::invalid_argument);
  }
  SUBCASE("unknown element name") {
    const char* text = "name: bad\nelements: 0 1\none: 1\nmul:\n0 0\n0 2\nadd:\n{0} {1}\n{1} {0}\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(load_hf(in, "t"), std::invalid_argument);
  }
  SUBCASE("missing one") {
    const char* text = "name: bad\nelements: 0 1\n";
    std::istringstream in(text);
    CHECK_THROWS_AS(load_hf(in, "t"), std::invalid_argument);
  }
}

TEST_CASE("phi round trip") {
  const MassourosField M = build_massouros_original(AbelianGroup({3}));
  std::istringstream in(format_phi(M.field, M.phi));
  const PhiMap back = load_phi(in, M.field, "roundtrip");
  CHECK(back.image == M.phi.image);
  CHECK(back.image_size == M.phi.image_size);
  CHECK(verify_massouros(M.field, back).all_passed());
}

TEST_CASE("phi loader rejections") {
  const FiniteHyperfield F = build_sign();
  SUBCASE("missing element") {
    std::istringstream in("1: 0\n");
    CHECK_THROWS_AS(load_phi(in, F, "t"), std::invalid_argument);
  }
  SUBCASE("zero element") {
    std::istringstream in("0: 0\n1: 0\n-1: 0\n");
    CHECK_THROWS_AS(load_phi(in, F, "t"), std::invalid_argument);
  }
  SUBCASE("duplicate entry") {
    std::istringstream in("1: 0\n1: 1\n-1: 0\n");
    CHECK_THROWS_AS(load_phi(in, F, "t"), std::invalid_argument);
  }
}

TEST_CASE("loaded tables feed the verifier") {
  // a hand-authored table with a broken associativity should load fine and
  // fail verification, not crash
  const char* text =
      "name: lopsided\n"
      "elements: 0 1\n"
      "one: 1\n"
      "mul:\n0 0\n0 1\n"
      "add:\n{0} {0,1}\n{0,1} {1}\n";  // 0 + 1 is not {1}
  std::istringstream in(text);
  const FiniteHyperfield F = load_hf(in, "t");
  const AxiomReport r = verify_axioms(F);
  CHECK_FALSE(r.all_passed());
  CHECK_FALSE(r.find("zero-identity")->passed);
}
