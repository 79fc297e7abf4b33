#include "doctest.h"

#include "kxval/error.hpp"
#include "kxval/newton_polygon.hpp"
#include "kxval/suites.hpp"

using namespace kxval;

namespace {

const FieldContext& tq() {
  static FieldContext ctx = FieldContext::tadic();
  return ctx;
}

FieldElement tp(const Rational& e) { return FieldElement::monomial(tq(), 1, e); }

Polynomial X() { return Polynomial::variable(tq()); }

Polynomial C(const FieldElement& c) { return Polynomial::constant(c); }

GroupValue sc(const Rational& q) { return GroupValue::scalar(q); }

Polynomial key() { return X() * X() - C(tp(1)); }

PolyValuation fix_pair() {
  return PolyValuation::pair(tp(Rational(1, 2)), sc(Rational(3, 2)));
}

HullPoint hp(long a, const Rational& v) { return HullPoint{a, sc(v)}; }

std::vector<std::pair<long, Rational>> vert_list(const NewtonPolygon& p) {
  std::vector<std::pair<long, Rational>> out;
  for (const auto& v : p.vertices)
    out.emplace_back(v.abscissa, v.value.coords().at(0));
  return out;
}

std::vector<Rational> slope_list(const NewtonPolygon& p) {
  std::vector<Rational> out;
  for (const auto& s : p.slopes) out.push_back(s.coords().at(0));
  return out;
}

} // namespace

TEST_SUITE("newton") {

TEST_CASE("ten point hull") {
  std::vector<HullPoint> pts = {hp(0, 9),  hp(2, 10), hp(6, 3),  hp(8, 2),
                                hp(8, 6),  hp(10, 5), hp(11, 8), hp(12, 0),
                                hp(14, 3), hp(20, 8)};
  NewtonPolygon p = lower_hull(pts);
  CHECK(vert_list(p) == std::vector<std::pair<long, Rational>>{
                            {0, 9}, {6, 3}, {12, 0}, {20, 8}});
  CHECK(slope_list(p) == std::vector<Rational>{1, Rational(1, 2), -1});
  CHECK(p.points.size() == 9); // the higher of the two points at abscissa 8 dies
  CHECK(polygon_supports(p));
  SUBCASE("the quadratic reference construction agrees") {
    NewtonPolygon q = oracle_hull(pts);
    CHECK(vert_list(q) == vert_list(p));
    CHECK(slope_list(q) == slope_list(p));
  }
}

TEST_CASE("degenerate hulls") {
  NewtonPolygon single = lower_hull({hp(3, Rational(5, 2))});
  CHECK(vert_list(single) ==
        std::vector<std::pair<long, Rational>>{{3, Rational(5, 2)}});
  CHECK(single.slopes.empty());
  CHECK(polygon_supports(single));

  NewtonPolygon flat = lower_hull({hp(0, 2), hp(1, 1), hp(2, 0)});
  CHECK(vert_list(flat) ==
        std::vector<std::pair<long, Rational>>{{0, 2}, {2, 0}});
  CHECK(slope_list(flat) == std::vector<Rational>{1});

  CHECK_THROWS_AS((void)lower_hull({HullPoint{0, GroupValue::infinity()},
                                    HullPoint{1, GroupValue::infinity()}}),
                  const error&);
  CHECK_THROWS_AS((void)lower_hull({}), const error&);
}

TEST_CASE("infinite values drop out instead of breaking the hull") {
  NewtonPolygon p = lower_hull(
      {hp(0, 2), HullPoint{1, GroupValue::infinity()}, hp(2, 0)});
  CHECK(vert_list(p) == std::vector<std::pair<long, Rational>>{{0, 2}, {2, 0}});
  CHECK(p.points.size() == 2);
}

TEST_CASE("derivative values of the quadratic key") {
  NewtonPolygon p = slope_data(key(), fix_pair());
  CHECK(vert_list(p) == std::vector<std::pair<long, Rational>>{
                            {0, 2}, {1, Rational(1, 2)}, {2, 0}});
  CHECK(slope_list(p) == std::vector<Rational>{Rational(3, 2), Rational(1, 2)});
}

TEST_CASE("linear polynomial under its own centered valuation") {
  PolyValuation mu = PolyValuation::pair(tp(1), sc(2));
  NewtonPolygon p = slope_data(X() - C(tp(1)), mu);
  CHECK(vert_list(p) == std::vector<std::pair<long, Rational>>{{0, 2}, {1, 0}});
  CHECK(slope_list(p) == std::vector<Rational>{2});
}

TEST_CASE("monomial weight flattens the square to one face") {
  PolyValuation g = PolyValuation::gauss(tq(), sc(Rational(1, 3)));
  NewtonPolygon p = slope_data(X() * X(), g);
  CHECK(vert_list(p) == std::vector<std::pair<long, Rational>>{
                            {0, Rational(2, 3)}, {2, 0}});
  CHECK(slope_list(p) == std::vector<Rational>{Rational(1, 3)});
  CHECK_THROWS_AS((void)slope_data(C(tp(1)), g), const error&);
}

TEST_CASE("root grouping by value") {
  RootConfiguration rc =
      root_configuration({tp(Rational(1, 2)), -tp(Rational(1, 2))}, fix_pair());
  REQUIRE(rc.groups.size() == 2);
  CHECK(rc.groups[0] == std::pair<unsigned long, GroupValue>{1, sc(Rational(3, 2))});
  CHECK(rc.groups[1] == std::pair<unsigned long, GroupValue>{1, sc(Rational(1, 2))});

  PolyValuation g0 = PolyValuation::gauss(tq(), sc(0));
  RootConfiguration dbl = root_configuration(
      {FieldElement::zero(tq()), FieldElement::zero(tq())}, g0);
  REQUIRE(dbl.groups.size() == 1);
  CHECK(dbl.groups[0] == std::pair<unsigned long, GroupValue>{2, sc(0)});

  RootConfiguration split =
      root_configuration({FieldElement::zero(tq()), tp(-1)}, g0);
  REQUIRE(split.groups.size() == 2);
  CHECK(split.groups[0] == std::pair<unsigned long, GroupValue>{1, sc(0)});
  CHECK(split.groups[1] == std::pair<unsigned long, GroupValue>{1, sc(-1)});
}

TEST_CASE("faces mirror the root configuration") {
  FieldElement a = tp(Rational(1, 2));
  CHECK(verify_slope_root_equivalence(key(), {a, -a}, fix_pair()).pass);

  PolyValuation g0 = PolyValuation::gauss(tq(), sc(0));
  Polynomial f2 = X() * (X() - C(tp(-1)));
  CHECK(verify_slope_root_equivalence(
            f2, {FieldElement::zero(tq()), tp(-1)}, g0)
            .pass);

  Polynomial cubic = key() * (X() - C(tp(1)));
  CHECK(verify_slope_root_equivalence(cubic, {a, -a, tp(1)}, fix_pair()).pass);
  SUBCASE("the cubic hull itself") {
    NewtonPolygon p = slope_data(cubic, fix_pair());
    CHECK(vert_list(p) == std::vector<std::pair<long, Rational>>{
                              {0, Rational(5, 2)}, {1, 1}, {3, 0}});
    CHECK(slope_list(p) ==
          std::vector<Rational>{Rational(3, 2), Rational(1, 2)});
  }

  CHECK_THROWS_AS(
      (void)verify_slope_root_equivalence(key(), {tp(1), -tp(1)}, fix_pair()),
      const error&);
}

TEST_CASE("renderings") {
  NewtonPolygon p = slope_data(key(), fix_pair());
  CHECK(render(p, RenderFormat::json) == p.to_json().dump(2));

  std::string ascii = render(p, RenderFormat::ascii);
  std::string expected = "value range [0, 2], abscissa range [0, 2]\n";
  expected += "|o\n";
  for (int i = 0; i < 11; ++i) expected += "|\n";
  expected += "| o\n";
  for (int i = 0; i < 3; ++i) expected += "|\n";
  expected += "|  o\n";
  expected += "+---\n";
  expected += " 0  2\n";
  CHECK(ascii == expected);

  std::string svg = render(p, RenderFormat::svg);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  SUBCASE("rank two polygons have no planar plot") {
    NewtonPolygon tall = lower_hull(
        {HullPoint{0, GroupValue::vec({Rational(1), Rational(0)})},
         HullPoint{1, GroupValue::zero(2)}});
    CHECK_THROWS_AS((void)render(tall, RenderFormat::ascii), const error&);
    CHECK_THROWS_AS((void)render(tall, RenderFormat::svg), const error&);
    CHECK_NOTHROW((void)render(tall, RenderFormat::json));
  }
}

TEST_CASE("sampled hulls match the reference construction") {
  Report r = check_hull_oracle(17, 60);
  CHECK(r.pass);
}

} // TEST_SUITE
