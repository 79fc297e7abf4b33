// Acceptance gate: one line per criterion, exit code counts the failures.
// Every comparison is exact; nothing here tolerates drift.

#include "kxval/suites.hpp"

#include <cstdio>
#include <vector>

using namespace kxval;

namespace {

int failures = 0;
int index = 0;

void criterion(const char* text, bool ok) {
  ++index;
  std::printf("[%d/9] %s: %s\n", index, text, ok ? "PASS" : "FAIL");
  if (!ok) ++failures;
}

GroupValue sc(const Rational& q) { return GroupValue::scalar(q); }

bool gap_counterexample() {
  FieldContext ctx = FieldContext::tadic();
  FieldElement a = FieldElement::monomial(ctx, 1, -1);
  Report r = product_gap_report(ctx, a);
  if (!r.pass) return false;
  // Independent recomputation of the advertised numbers.
  Polynomial X = Polynomial::variable(ctx);
  Polynomial f = X * (X - Polynomial::constant(a));
  Diskoid d = decompose(f, {FieldElement::zero(ctx), a}, sc(-1));
  bool radii = d.balls.size() == 2 && d.balls[0].radius == sc(0) &&
               d.balls[1].radius == sc(0);
  bool factors = diskoid_value(d, X) == sc(-1) &&
                 diskoid_value(d, X - Polynomial::constant(a)) == sc(-1);
  bool product = diskoid_value(d, f) == sc(-1);
  bool gap = diskoid_value(d, f) != sc(-2);
  return radii && factors && product && gap;
}

bool ten_point_hull() {
  auto pt = [](long x, const Rational& v) { return HullPoint{x, sc(v)}; };
  NewtonPolygon p = lower_hull({pt(0, 9), pt(2, 10), pt(6, 3), pt(8, 2),
                                pt(8, 6), pt(10, 5), pt(11, 8), pt(12, 0),
                                pt(14, 3), pt(20, 8)});
  std::vector<std::pair<long, Rational>> want = {
      {0, 9}, {6, 3}, {12, 0}, {20, 8}};
  if (p.vertices.size() != want.size()) return false;
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (p.vertices[i].abscissa != want[i].first) return false;
    if (p.vertices[i].value != sc(want[i].second)) return false;
  }
  std::vector<Rational> slopes = {1, Rational(1, 2), -1};
  if (p.slopes.size() != slopes.size()) return false;
  for (std::size_t i = 0; i < slopes.size(); ++i)
    if (p.slopes[i] != sc(slopes[i])) return false;
  return true;
}

bool truncation_spots() {
  FieldContext ctx = FieldContext::tadic();
  Polynomial X = Polynomial::variable(ctx);
  Polynomial key =
      X * X - Polynomial::constant(FieldElement::monomial(ctx, 1, 1));
  PolyValuation mu = PolyValuation::pair(
      FieldElement::monomial(ctx, 1, Rational(1, 2)), sc(Rational(3, 2)));
  PolyValuation trunc = PolyValuation::truncation(key, mu);
  return value_of(trunc, X * X) == sc(1) && value_of(trunc, key) == sc(2);
}

bool epsilon_spots() {
  FieldContext ctx = FieldContext::tadic();
  Polynomial X = Polynomial::variable(ctx);
  Polynomial key =
      X * X - Polynomial::constant(FieldElement::monomial(ctx, 1, 1));
  PolyValuation mu = PolyValuation::pair(
      FieldElement::monomial(ctx, 1, Rational(1, 2)), sc(Rational(3, 2)));
  PolyValuation trunc = PolyValuation::truncation(key, mu);
  return epsilon_factor(trunc, X * X) == sc(Rational(1, 2)) &&
         epsilon_factor(trunc, key) == sc(Rational(3, 2));
}

bool fixture_bundle() {
  if (!fixture_product_rule_reports().pass) return false;
  if (!fixture_pair_equivalence_report().pass) return false;
  if (!fixture_conjugate_invariance_report().pass) return false;
  if (!fixture_root_matching_report().pass) return false;
  FieldContext ctx = FieldContext::tadic();
  Polynomial X = Polynomial::variable(ctx);
  Polynomial key =
      X * X - Polynomial::constant(FieldElement::monomial(ctx, 1, 1));
  PolyValuation mu = PolyValuation::pair(
      FieldElement::monomial(ctx, 1, Rational(1, 2)), sc(Rational(3, 2)));
  return verify_graded_rewrite(key, mu, X * X).pass;
}

} // namespace

int main() {
  criterion("diskoid minimum stays at the factor value on X(X - a), radii 0",
            gap_counterexample());
  criterion("ten-point lower hull has vertices (0,9),(6,3),(12,0),(20,8) and "
            "slopes 1, 1/2, -1",
            ten_point_hull());
  criterion("truncation by X^2 - t agrees with the centered valuation on 220 "
            "seeded samples plus spot values 1 and 2",
            truncation_spots() && check_truncation_pair_agreement(2026, 220).pass);
  criterion("epsilon of the truncation is bounded by the key and hits it "
            "exactly off the constant support",
            epsilon_spots() && check_epsilon_bound_biconditional(2026, 210).pass);
  criterion("polygon faces match root multiplicities and values on 120 seeded "
            "factored polynomials",
            check_slope_root_equivalence(2026, 120).pass);
  criterion("fast lower hull equals the all-pairs support-line reference on "
            "220 seeded point sets",
            check_hull_oracle(2026, 220).pass);
  criterion("valuation axioms hold on 520 sampled pairs and derivative "
            "identities on 210",
            check_valuation_axioms(2026, 520).pass &&
                check_hasse_identities(2026, 210).pass);
  criterion("ball minima are attained by witnesses within degree + 1 attempts "
            "on 120 samples",
            check_ball_witnesses(2026, 120).pass);
  criterion("product rule, pair equivalence, rewrite, conjugate invariance, "
            "and root matching fixtures all verify",
            fixture_bundle());
  return failures;
}
