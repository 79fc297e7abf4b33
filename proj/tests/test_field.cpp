#include "doctest.h"

#include "kxval/error.hpp"
#include "kxval/field.hpp"
#include "kxval/suites.hpp"

using namespace kxval;

namespace {

const FieldContext& tq() {
  static FieldContext ctx = FieldContext::tadic();
  return ctx;
}

FieldElement tp(const Rational& e) { return FieldElement::monomial(tq(), 1, e); }

FieldElement mono(const Rational& c, const Rational& e) {
  return FieldElement::monomial(tq(), c, e);
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("context construction") {
  CHECK(FieldContext::padic(2).str() == "padic:2");
  CHECK(FieldContext::tadic().str() == "tadic:QQ");
  CHECK_THROWS_AS((void)FieldContext::padic(4), const error&);
  CHECK_THROWS_AS((void)FieldContext::padic(1), const error&);
  CHECK(FieldContext::padic(101).prime == 101);
}

TEST_CASE("arithmetic") {
  CHECK(tp(Rational(1, 2)) * tp(Rational(1, 2)) == tp(1));
  CHECK((tp(-1) + (-tp(-1))).is_zero());
  CHECK((tp(1) + mono(1, 2)) / tp(1) ==
        FieldElement::one(tq()) + tp(1));
  CHECK_THROWS_AS((void)(tp(1) / FieldElement::zero(tq())), const error&);
  SUBCASE("an inverse that would be an infinite series is rejected") {
    FieldElement one_plus_t = FieldElement::one(tq()) + tp(1);
    CHECK_THROWS_AS((void)(FieldElement::one(tq()) / one_plus_t), const error&);
  }
  SUBCASE("exact division by a multi-term divisor works") {
    FieldElement one_plus_t = FieldElement::one(tq()) + tp(1);
    FieldElement x = mono(Rational(2, 3), Rational(-1, 2)) + tp(3);
    CHECK((x * one_plus_t) / one_plus_t == x);
  }
  SUBCASE("cross-context arithmetic is rejected") {
    FieldElement p = FieldElement::from_rational(FieldContext::padic(2), 3);
    CHECK_THROWS_AS((void)(p + tp(1)), const error&);
  }
}

TEST_CASE("valuations of elements") {
  FieldElement twelve = FieldElement::from_rational(FieldContext::padic(2), 12);
  CHECK(valuation_of(twelve) == GroupValue::scalar(2));
  CHECK(valuation_of(tp(Rational(1, 2)) + tp(1)) ==
        GroupValue::scalar(Rational(1, 2)));
  CHECK(valuation_of(FieldElement::zero(tq())).is_infinity());
  FieldElement half = FieldElement::from_rational(FieldContext::padic(2),
                                                  Rational(1, 2));
  CHECK(valuation_of(half) == GroupValue::scalar(-1));
  SUBCASE("values land on the last coordinate of a taller group") {
    FieldContext tall = FieldContext::tadic(2);
    FieldElement x = FieldElement::monomial(tall, 1, 3);
    CHECK(valuation_of(x) == GroupValue::vec({Rational(0), Rational(3)}));
  }
}

TEST_CASE("residues") {
  CHECK(residue_of(FieldElement::one(tq()) + tp(1)) == 1);
  FieldElement q = FieldElement::from_rational(FieldContext::padic(5),
                                               Rational(7, 2));
  CHECK(residue_of(q) == 1);
  CHECK_THROWS_AS((void)residue_of(tp(1)), const error&);
}

TEST_CASE("binomial roots") {
  std::vector<FieldElement> r = binomial_roots(tp(1), 2);
  REQUIRE(r.size() == 2);
  CHECK(((r[0] == tp(Rational(1, 2)) && r[1] == -tp(Rational(1, 2))) ||
         (r[1] == tp(Rational(1, 2)) && r[0] == -tp(Rational(1, 2)))));

  std::vector<FieldElement> s = binomial_roots(mono(4, 3), 2);
  REQUIRE(s.size() == 2);
  CHECK((s[0] == mono(2, Rational(3, 2)) || s[1] == mono(2, Rational(3, 2))));

  CHECK_THROWS_AS((void)binomial_roots(mono(2, 1), 2), const error&);
  SUBCASE("cube roots and the zero element") {
    std::vector<FieldElement> c = binomial_roots(mono(8, 3), 3);
    REQUIRE(c.size() == 1);
    CHECK(c[0] == mono(2, 1));
    std::vector<FieldElement> z = binomial_roots(FieldElement::zero(tq()), 5);
    REQUIRE(z.size() == 1);
    CHECK(z[0].is_zero());
  }
}

TEST_CASE("element text forms") {
  CHECK(FieldElement::zero(tq()).str() == "0");
  CHECK(tp(Rational(1, 2)).str() == "t^(1/2)");
  CHECK((tp(Rational(1, 2)) + mono(2, 3) - tp(-1)).str() ==
        "-t^-1 + t^(1/2) + 2*t^3");
  CHECK(FieldElement::from_rational(FieldContext::padic(3),
                                    Rational(-3, 4)).str() == "-3/4");
  CHECK(mono(Rational(-1, 2), 1).str() == "-(1/2)*t");
  CHECK(mono(Rational(1, 2), 0).str() == "1/2");
}

TEST_CASE("sampled valued-field laws") {
  Report r = check_field_axioms(21, 120);
  CHECK(r.pass);
}

} // TEST_SUITE
