#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperfield/dyadic.hpp"
#include "hyperfield/ordered.hpp"

using namespace hyperfield;

namespace {

OrderedSet levels(std::initializer_list<long long> ls) {
  OrderedSet s;
  for (long long l : ls) s.insert_level(l);
  return s;
}

}  // namespace

TEST_CASE("oadd basics") {
  CHECK(oadd(OrderedMode::closed, OrderedElem::at(3), OrderedElem::at(5)) == levels({5}));
  CHECK(oadd(OrderedMode::open, OrderedElem::at(-2), OrderedElem::at(7)) == levels({7}));
  CHECK(oadd(OrderedMode::open, OrderedElem::bottom(), OrderedElem::at(4)) == levels({4}));
  CHECK(oadd(OrderedMode::closed, OrderedElem::bottom(), OrderedElem::bottom()) ==
        OrderedSet::single(OrderedElem::bottom()));

  SUBCASE("equal elements fan out to down-sets") {
    const OrderedSet open = oadd(OrderedMode::open, OrderedElem::at(3), OrderedElem::at(3));
    CHECK(open.has_bottom());
    CHECK(open.down_threshold() == 2);  // all levels < 3
    CHECK(open.contains(OrderedElem::at(2)));
    CHECK(open.contains(OrderedElem::at(-100)));
    CHECK_FALSE(open.contains(OrderedElem::at(3)));

    const OrderedSet closed = oadd(OrderedMode::closed, OrderedElem::at(3), OrderedElem::at(3));
    CHECK(closed.down_threshold() == 3);  // all levels <= 3
    CHECK(closed.contains(OrderedElem::at(3)));
    CHECK_FALSE(closed.contains(OrderedElem::at(4)));
  }
}

TEST_CASE("x + x membership separates the two modes") {
  for (long long x = -4; x <= 4; ++x) {
    CHECK(oadd(OrderedMode::closed, OrderedElem::at(x), OrderedElem::at(x)).contains(OrderedElem::at(x)));
    CHECK_FALSE(oadd(OrderedMode::open, OrderedElem::at(x), OrderedElem::at(x)).contains(OrderedElem::at(x)));
  }
}

TEST_CASE("oadd never returns the empty set") {
  const std::vector<OrderedElem> elems = {OrderedElem::bottom(), OrderedElem::at(-3), OrderedElem::at(0),
                                          OrderedElem::at(3)};
  for (OrderedMode mode : {OrderedMode::open, OrderedMode::closed})
    for (const auto& x : elems)
      for (const auto& y : elems) CHECK_FALSE(oadd(mode, x, y).empty());
}

TEST_CASE("ordered set normal form") {
  OrderedSet s;
  s.insert_down(2);
  s.insert_level(3);  // adjacent: absorbed into the down-set
  CHECK(s.down_threshold() == 3);
  CHECK(s.finite_part().empty());
  s.insert_level(7);
  CHECK(s.finite_part().count(7) == 1);
  s.insert_level(0);  // already covered
  CHECK(s.finite_part().size() == 1);

  OrderedSet t;
  t.insert_level(7);
  t.insert_down(6);  // swallows the level immediately above
  CHECK(t.down_threshold() == 7);
  CHECK(t.finite_part().empty());
}

TEST_CASE("windowed axiom checks pass in both modes") {
  for (OrderedMode mode : {OrderedMode::open, OrderedMode::closed}) {
    const CheckReport r = overify_window(mode, -4, 4);
    CHECK(r.all_passed());
  }
}

TEST_CASE("associativity needs the symbolic sets") {
  // (x + x) + y where y sits far below x: the down-set keeps every level,
  // so the identity holds exactly rather than up to window truncation.
  const OrderedSet lhs = ordered_set_add(OrderedMode::open,
                                         oadd(OrderedMode::open, OrderedElem::at(3), OrderedElem::at(3)),
                                         OrderedSet::single(OrderedElem::at(-50)));
  const OrderedSet rhs = ordered_set_add(OrderedMode::open, OrderedSet::single(OrderedElem::at(3)),
                                         oadd(OrderedMode::open, OrderedElem::at(3), OrderedElem::at(-50)));
  CHECK(lhs == rhs);
}

TEST_CASE("dyadic classes") {
  CHECK(dyadic_class(Rational(7)) == DyadicClass::at(0));  // 7 = 4 + 3 stays in P
  CHECK(dyadic_class(Rational(12)) == DyadicClass::at(2));
  CHECK(dyadic_class(Rational(3, 10)) == DyadicClass::at(-1));
  CHECK(dyadic_class(Rational(0)).is_zero);
  CHECK(dyadic_class(Rational(-8)) == DyadicClass::at(3));
  CHECK(DyadicClass::at(0).to_string() == "P");
  CHECK(DyadicClass::at(2).to_string() == "2^2P");
}

TEST_CASE("the corrected literature calculation: 7 = 4 + 3 lands in P") {
  const Rational four(4), three(3);
  CHECK(dyadic_class(four) == DyadicClass::at(2));
  CHECK(dyadic_class(three) == DyadicClass::at(0));
  // class(4) + class(3) has distinct levels, so the max (= class P) wins,
  // and the representative sum 7 indeed lies in P.
  const OrderedSet sum = oadd(OrderedMode::open, dyadic_class(four).to_ordered(),
                              dyadic_class(three).to_ordered());
  CHECK(sum == OrderedSet::single(OrderedElem::at(0)));
  CHECK(dyadic_class(four + three) == DyadicClass::at(0));
}

TEST_CASE("dyadic sum checks") {
  SUBCASE("equal classes predict the strictly-smaller classes plus zero") {
    const DyadicSumReport r = dyadic_sum_check(0, 0, -8, 8, 9);
    CHECK(r.sound);
    CHECK(r.complete);
    CHECK(r.zero_class_included);
    CHECK(r.predicted.has_bottom());
    CHECK(r.predicted.down_threshold() == -1);  // levels < 0, i.e. classes 2^k P with k >= 1
  }
  SUBCASE("distinct classes predict the minimum valuation") {
    const DyadicSumReport r = dyadic_sum_check(0, 2, -8, 8, 9);
    CHECK(r.sound);
    CHECK(r.complete);
    CHECK_FALSE(r.zero_class_included);
    CHECK(r.predicted == OrderedSet::single(OrderedElem::at(0)));
  }
  SUBCASE("witness for the eighth class") {
    // 1 + 7 = 8: the pair explicitly realizes 2^3 P from P + P.
    CHECK(dyadic_class(Rational(1) + Rational(7)) == DyadicClass::at(3));
    const DyadicSumReport r = dyadic_sum_check(0, 0, -8, 8, 9);
    bool found = false;
    for (const auto& w : r.witnesses)
      if (w.find("2^3P") != std::string::npos) found = true;
    CHECK(found);
  }
  SUBCASE("full grid") {
    for (int m = -4; m <= 4; ++m)
      for (int n = -4; n <= 4; ++n) {
        const DyadicSumReport r = dyadic_sum_check(m, n, -8, 8, 9);
        CHECK(r.sound);
        CHECK(r.complete);
      }
  }
}

TEST_CASE("functoriality of the dyadic class map") {
  // Exhaustive over a deterministic sample: classes multiply by adding
  // valuations, and sums land inside the open ordered prediction.
  std::vector<Rational> samples;
  for (int v = -3; v <= 3; ++v)
    for (int a : {-5, -3, -1, 1, 3, 5})
      for (int b : {1, 3, 5}) {
        Rational scale = v >= 0 ? Rational(1 << v) : Rational(1, 1 << -v);
        samples.push_back(scale * Rational(a, b));
      }

  for (const Rational& r : samples)
    for (const Rational& s : samples) {
      const DyadicClass cr = dyadic_class(r), cs = dyadic_class(s);
      CHECK(dyadic_class(r * s).valuation == cr.valuation + cs.valuation);
      const OrderedSet predicted = oadd(OrderedMode::open, cr.to_ordered(), cs.to_ordered());
      CHECK(predicted.contains(dyadic_class(r + s).to_ordered()));
    }
}
