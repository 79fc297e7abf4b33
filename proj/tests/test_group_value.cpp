#include "doctest.h"

#include "kxval/error.hpp"
#include "kxval/group_value.hpp"
#include "kxval/suites.hpp"

using namespace kxval;

namespace {

GroupValue sc(const Rational& q) { return GroupValue::scalar(q); }

GroupValue v2(const Rational& a, const Rational& b) {
  return GroupValue::vec({a, b});
}

} // namespace

TEST_SUITE("group_value") {

TEST_CASE("lexicographic comparison") {
  CHECK(vg_compare(v2(1, 0), v2(0, 5)) > 0);
  CHECK(vg_compare(GroupValue::infinity(1), sc(100)) > 0);
  CHECK(vg_compare(sc(Rational(1, 2)), sc(Rational(1, 2))) == 0);
  CHECK(GroupValue::infinity(1) == GroupValue::infinity(2));
  CHECK(sc(-3) < sc(Rational(-5, 2)));
  CHECK_THROWS_AS((void)vg_compare(sc(1), v2(1, 0)), const error&);
}

TEST_CASE("affine combination") {
  CHECK(vg_affine(sc(Rational(1, 2)), 3, sc(Rational(3, 2))) == sc(5));
  CHECK(vg_affine(GroupValue::infinity(1), 2, sc(1)).is_infinity());
  CHECK(vg_affine(v2(0, 1), 2, v2(1, 0)) == v2(2, 1));
  SUBCASE("index zero ignores the step entirely") {
    CHECK(vg_affine(sc(7), 0, GroupValue::infinity(1)) == sc(7));
    CHECK(vg_affine(v2(1, 2), 0, v2(9, 9)) == v2(1, 2));
  }
}

TEST_CASE("slope of a drop") {
  CHECK(vg_slope(sc(2), sc(Rational(1, 2)), 1) == sc(Rational(3, 2)));
  CHECK(vg_slope(sc(1), sc(1), 4) == sc(0));
  CHECK(vg_slope(v2(3, 1), v2(1, 0), 2) == v2(1, Rational(1, 2)));
  CHECK_THROWS_AS((void)vg_slope(GroupValue::infinity(1), sc(0), 1),
                  const error&);
  CHECK_THROWS_AS((void)vg_slope(sc(0), GroupValue::infinity(1), 1),
                  const error&);
}

TEST_CASE("subgroup ranks") {
  auto [r1, q1] = vg_subgroup_ranks({sc(1), sc(Rational(1, 2))});
  CHECK(r1 == 1);
  CHECK(q1 == 1);
  auto [r2, q2] = vg_subgroup_ranks({v2(1, 0), v2(0, 1)});
  CHECK(r2 == 2);
  CHECK(q2 == 2);
  auto [r3, q3] = vg_subgroup_ranks({v2(0, 1), v2(0, Rational(2, 3))});
  CHECK(r3 == 1);
  CHECK(q3 == 1);
  auto [r0, q0] = vg_subgroup_ranks({});
  CHECK(r0 == 0);
  CHECK(q0 == 0);
  CHECK_THROWS_AS((void)vg_subgroup_ranks({GroupValue::infinity(1)}),
                  const error&);
}

TEST_CASE("text round trip") {
  CHECK(sc(Rational(3, 4)).str() == "3/4");
  CHECK(sc(-2).str() == "-2");
  CHECK(GroupValue::infinity(1).str() == "inf");
  CHECK(v2(1, Rational(-1, 2)).str() == "(1,-1/2)");
}

TEST_CASE("order is a trichotomous transitive total order on samples") {
  SampleGen gen(11);
  for (int k = 0; k < 300; ++k) {
    const int dim = static_cast<int>(gen.integer(1, 3));
    auto draw = [&]() {
      if (gen.integer(0, 9) == 0) return GroupValue::infinity(dim);
      std::vector<Rational> coords;
      for (int i = 0; i < dim; ++i) coords.push_back(gen.rational(6, 4));
      return GroupValue::vec(coords);
    };
    GroupValue a = draw(), b = draw(), c = draw();
    const auto ab = vg_compare(a, b);
    const auto ba = vg_compare(b, a);
    CHECK((static_cast<int>(ab < 0) + static_cast<int>(ab == 0) +
           static_cast<int>(ab > 0)) == 1);
    CHECK(((ab < 0 && ba > 0) || (ab > 0 && ba < 0) || (ab == 0 && ba == 0)));
    if (!(b < a) && !(c < b)) CHECK(!(c < a));
  }
}

TEST_CASE("affine preserves order and slope inverts affine") {
  SampleGen gen(12);
  for (int k = 0; k < 200; ++k) {
    GroupValue u = GroupValue::scalar(gen.rational(9, 6));
    GroupValue v = GroupValue::scalar(gen.rational(9, 6));
    GroupValue d = GroupValue::scalar(gen.rational(9, 6));
    const unsigned long i = static_cast<unsigned long>(gen.integer(0, 5));
    if (u < v) CHECK(vg_affine(u, i, d) < vg_affine(v, i, d));
    const unsigned long n = static_cast<unsigned long>(gen.integer(1, 7));
    CHECK(vg_slope(vg_affine(v, n, d), v, n) == d);
  }
}

} // TEST_SUITE
