#include "doctest.h"

#include "kxval/diskoid.hpp"
#include "kxval/error.hpp"
#include "kxval/suites.hpp"

using namespace kxval;

namespace {

const FieldContext& tq() {
  static FieldContext ctx = FieldContext::tadic();
  return ctx;
}

FieldElement tp(const Rational& e) { return FieldElement::monomial(tq(), 1, e); }

FieldElement z() { return FieldElement::zero(tq()); }

Polynomial X() { return Polynomial::variable(tq()); }

Polynomial C(const FieldElement& c) { return Polynomial::constant(c); }

GroupValue sc(const Rational& q) { return GroupValue::scalar(q); }

Polynomial key() { return X() * X() - C(tp(1)); }

// X*(X - t^-1), the polynomial whose sublevel set at -1 shows the
// multiplicativity gap.
Polynomial gap_poly() { return X() * (X() - C(tp(-1))); }

} // namespace

TEST_SUITE("diskoid") {

TEST_CASE("ball values") {
  FieldElement a = tp(Rational(1, 2));
  CHECK(ball_value(a, sc(Rational(3, 2)), X() * X()) == sc(1));
  CHECK(ball_value(z(), sc(0), X() - C(tp(-1))) == sc(-1));
  SUBCASE("an infinite radius degenerates to evaluation") {
    CHECK(ball_value(tp(1), GroupValue::infinity(), X() * X()) == sc(2));
    CHECK(ball_value(a, GroupValue::infinity(), key()).is_infinity());
  }
  SUBCASE("constants pass through") {
    CHECK(ball_value(a, sc(Rational(3, 2)), C(tp(2))) == sc(2));
  }
}

TEST_CASE("smallest sublevel-preserving radius") {
  CHECK(epsilon_radius(z(), gap_poly(), sc(-1)) == sc(0));
  CHECK(epsilon_radius(tp(-1), gap_poly(), sc(-1)) == sc(0));
  CHECK(epsilon_radius(tp(Rational(1, 2)), key(), sc(2)) == sc(Rational(3, 2)));
  CHECK(epsilon_radius(tp(1), X() - C(tp(1)), sc(Rational(5, 7))) ==
        sc(Rational(5, 7)));
  CHECK_THROWS_AS((void)epsilon_radius(tp(1), key(), sc(2)), const error&);
  CHECK_THROWS_AS(
      (void)epsilon_radius(tp(1), X() - C(tp(1)), GroupValue::infinity()),
      const error&);
}

TEST_CASE("decomposition into balls") {
  Diskoid d1 = decompose(gap_poly(), {z(), tp(-1)}, sc(-1));
  REQUIRE(d1.balls.size() == 2);
  CHECK(d1.balls[0].radius == sc(0));
  CHECK(d1.balls[1].radius == sc(0));

  FieldElement a = tp(Rational(1, 2));
  Diskoid d2 = decompose(key(), {a, -a}, sc(2));
  REQUIRE(d2.balls.size() == 2);
  CHECK(d2.balls[0].radius == sc(Rational(3, 2)));
  CHECK(d2.balls[1].radius == sc(Rational(3, 2)));

  Diskoid d3 = decompose(X() * X() - C(tp(2)), {tp(1), -tp(1)}, sc(3));
  REQUIRE(d3.balls.size() == 2);
  CHECK(d3.balls[0].radius == sc(2));
  CHECK(d3.balls[1].radius == sc(2));

  CHECK_THROWS_AS((void)decompose(key(), {tp(1), -tp(1)}, sc(2)),
                  const error&);
}

TEST_CASE("diskoid minimum and the multiplicativity gap") {
  Diskoid d1 = decompose(gap_poly(), {z(), tp(-1)}, sc(-1));
  CHECK(diskoid_value(d1, X()) == sc(-1));
  CHECK(diskoid_value(d1, X() - C(tp(-1))) == sc(-1));
  CHECK(diskoid_value(d1, gap_poly()) == sc(-1));
  // strict gap: value of the product exceeds the sum of the factor values
  CHECK(diskoid_value(d1, gap_poly()) >
        diskoid_value(d1, X()) + diskoid_value(d1, X() - C(tp(-1))));

  FieldElement a = tp(Rational(1, 2));
  Diskoid d2 = decompose(key(), {a, -a}, sc(2));
  CHECK(diskoid_value(d2, X() * X()) == sc(1));
  CHECK(ball_value(a, sc(Rational(3, 2)), X() * X()) ==
        ball_value(-a, sc(Rational(3, 2)), X() * X()));

  CHECK_THROWS_AS((void)diskoid_value(Diskoid{key(), sc(2), {}}, X()),
                  const error&);
}

TEST_CASE("membership coherence") {
  Diskoid d1 = decompose(gap_poly(), {z(), tp(-1)}, sc(-1));
  Report inside = membership(tp(1), gap_poly(), sc(-1), d1);
  CHECK(inside.pass);
  CHECK(d1.contains(tp(1)));

  Report outside = membership(tp(-2), gap_poly(), sc(-1), d1);
  CHECK(outside.pass);
  CHECK(!d1.contains(tp(-2)));

  Report at_root = membership(tp(-1), gap_poly(), sc(-1), d1);
  CHECK(at_root.pass);
  CHECK(d1.contains(tp(-1)));

  SUBCASE("single ball membership") {
    Ball b{z(), sc(0)};
    CHECK(b.contains(tp(1)));
    CHECK(!b.contains(tp(-1)));
    Ball point{tp(1), GroupValue::infinity()};
    CHECK(point.contains(tp(1)));
    CHECK(!point.contains(tp(2)));
  }
}

TEST_CASE("value is blind to the choice of root") {
  FieldElement a = tp(Rational(1, 2));
  std::vector<Polynomial> samples = {X(), X() * X(), key(),
                                     X() * X() * X() - C(tp(2))};
  Report r = verify_conjugate_invariance({a, -a}, sc(Rational(3, 2)), samples);
  CHECK(r.pass);

  CHECK_THROWS_AS((void)verify_conjugate_invariance(
                      {a, -a}, sc(Rational(3, 2)), {X() - C(a)}),
                  const error&);
  CHECK_THROWS_AS(
      (void)verify_conjugate_invariance({}, sc(Rational(3, 2)), samples),
      const error&);
}

TEST_CASE("close polynomials have matched roots") {
  FieldElement a = tp(Rational(1, 2));
  Polynomial f = key();
  FieldElement shift = FieldElement::one(tq()) + tp(1);
  FieldElement astar = a * shift; // t^(1/2) + t^(3/2)
  Polynomial fstar = X() * X() - C(astar * astar);
  Report r = verify_root_matching(f, fstar, {a, -a}, {astar, -astar});
  CHECK(r.pass);

  Report trivial = verify_root_matching(f, f, {a, -a}, {a, -a});
  CHECK(trivial.pass);

  CHECK_THROWS_AS((void)verify_root_matching(f, f * (X() - C(tp(1))), {a, -a},
                                             {a, -a, tp(1)}),
                  const error&);
}

TEST_CASE("constructive witnesses for the ball minimum") {
  FieldElement a = tp(Rational(1, 2));
  BallWitness w1 = attain_ball_minimum(a, sc(Rational(3, 2)), X() * X());
  CHECK(w1.value == sc(1));
  CHECK(w1.attempts <= 3);
  CHECK(Ball{a, sc(Rational(3, 2))}.contains(w1.point));

  BallWitness w2 = attain_ball_minimum(a, sc(Rational(3, 2)), X() - C(a));
  CHECK(w2.value == sc(Rational(3, 2)));
  CHECK(w2.attempts == 2); // the center itself gives infinity, the next lift works
  CHECK(Ball{a, sc(Rational(3, 2))}.contains(w2.point));

  BallWitness w3 = attain_ball_minimum(tp(1), GroupValue::infinity(), key());
  CHECK(w3.point == tp(1));
  CHECK(w3.value == sc(1)); // plain evaluation of X^2 - t at t
  CHECK(w3.attempts == 1);
}

TEST_CASE("gap report") {
  Report r = product_gap_report(tq(), tp(-1));
  CHECK(r.pass);
  CHECK_THROWS_AS((void)product_gap_report(tq(), z()), const error&);
}

TEST_CASE("sampled diskoid properties") {
  CHECK(check_ball_pair_identity(19, 40).pass);
  CHECK(check_ball_witnesses(23, 40).pass);
  CHECK(check_diskoid_ultrametric(29, 40).pass);
  CHECK(check_single_ball_multiplicative(31, 40).pass);
  CHECK(check_membership_coherence(37, 40).pass);
  CHECK(check_diskoid_truncation_agreement(43, 40).pass);
}

} // TEST_SUITE
