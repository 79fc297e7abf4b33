#include "kxval/diskoid.hpp"

#include "kxval/error.hpp"

#include <algorithm>
#include <numeric>

namespace kxval {

namespace {

// leading(f) * prod (X - r) must reproduce f exactly.
void require_factorization(const Polynomial& f,
                           const std::vector<FieldElement>& roots,
                           const char* what) {
  if (f.degree() < 1)
    fail(errc::constant_polynomial, std::string(what) + " needs degree >= 1");
  const FieldContext& ctx = f.context();
  Polynomial rebuilt = Polynomial::constant(f.leading());
  Polynomial x = Polynomial::variable(ctx);
  for (const auto& r : roots) rebuilt = rebuilt * (x - Polynomial::constant(r));
  if (rebuilt != f)
    fail(errc::roots_dont_factor,
         std::string(what) + ": the roots rebuild " + rebuilt.str() + ", not " +
             f.str());
}

} // namespace

bool Ball::contains(const FieldElement& x) const {
  return valuation_of(x - center) >= radius;
}

Json Ball::to_json() const {
  return Json{{"center", center.str()}, {"radius", radius.str()}};
}

bool Diskoid::contains(const FieldElement& x) const {
  return valuation_of(defining.evaluate(x)) >= rho;
}

Json Diskoid::to_json() const {
  Json bs = Json::array();
  for (const auto& b : balls) bs.push_back(b.to_json());
  return Json{{"defining", defining.str()}, {"rho", rho.str()}, {"balls", bs}};
}

GroupValue ball_value(const FieldElement& a, const GroupValue& delta,
                      const Polynomial& g) {
  std::vector<FieldElement> coeffs = taylor_at(g, a);
  GroupValue best = GroupValue::infinity(a.context().group_dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    GroupValue term =
        vg_affine(valuation_of(coeffs[i]), static_cast<unsigned long>(i), delta);
    if (term < best) best = term;
  }
  return best;
}

GroupValue epsilon_radius(const FieldElement& a, const Polynomial& f,
                          const GroupValue& rho) {
  if (f.degree() < 1)
    fail(errc::constant_polynomial, "the radius formula needs degree >= 1");
  if (!rho.is_finite())
    fail(errc::precondition_violated, "the radius formula needs a finite level");
  if (!f.evaluate(a).is_zero())
    fail(errc::not_a_root, a.str() + " is not a root of " + f.str());
  std::vector<FieldElement> coeffs = taylor_at(f, a);
  GroupValue best;
  bool seen = false;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue; // contributes no constraint
    GroupValue candidate = vg_slope(rho, valuation_of(coeffs[i]),
                                    static_cast<unsigned long>(i));
    if (!seen || candidate > best) {
      best = candidate;
      seen = true;
    }
  }
  if (!seen) fail(errc::precondition_violated, "every derivative vanished");
  return best;
}

Diskoid decompose(const Polynomial& f, const std::vector<FieldElement>& roots,
                  const GroupValue& rho) {
  require_factorization(f, roots, "decompose");
  if (!rho.is_finite())
    fail(errc::precondition_violated, "decompose needs a finite level");
  Diskoid d{f, rho, {}};
  for (const auto& r : roots) {
    bool seen = false;
    for (const auto& b : d.balls) {
      if (b.center == r) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    d.balls.push_back(Ball{r, epsilon_radius(r, f, rho)});
  }
  return d;
}

GroupValue diskoid_value(const Diskoid& d, const Polynomial& g) {
  if (d.balls.empty())
    fail(errc::empty_roots, "a diskoid value needs at least one ball");
  GroupValue best = ball_value(d.balls.front().center, d.balls.front().radius, g);
  for (std::size_t i = 1; i < d.balls.size(); ++i) {
    GroupValue v = ball_value(d.balls[i].center, d.balls[i].radius, g);
    if (v < best) best = v;
  }
  return best;
}

Report membership(const FieldElement& x, const Polynomial& f,
                  const GroupValue& rho, const Diskoid& d) {
  const bool in_sublevel = valuation_of(f.evaluate(x)) >= rho;
  bool in_cover = false;
  for (const auto& b : d.balls)
    if (b.contains(x)) in_cover = true;
  Report report;
  report.claim = "the two membership tests agree";
  report.check(in_sublevel == in_cover,
               Json{{"point", x.str()},
                    {"sublevel", in_sublevel},
                    {"ball_cover", in_cover},
                    {"value", valuation_of(f.evaluate(x)).str()},
                    {"rho", rho.str()}});
  return report;
}

Report verify_conjugate_invariance(const std::vector<FieldElement>& roots,
                                   const GroupValue& delta,
                                   const std::vector<Polynomial>& samples) {
  if (roots.empty()) fail(errc::empty_roots, "invariance needs centers");
  Report report;
  report.claim = "ball values do not depend on the chosen center";
  for (const auto& g : samples) {
    if (!g.in_base_ring())
      fail(errc::sample_not_in_base_ring,
           "invariance is only claimed for integer t-exponents: " + g.str());
    GroupValue common = ball_value(roots.front(), delta, g);
    bool all_equal = true;
    for (const auto& r : roots) {
      GroupValue v = ball_value(r, delta, g);
      if (!(v == common)) all_equal = false;
    }
    report.check(all_equal, Json{{"sample", g.str()}, {"value", common.str()}});
  }
  return report;
}

Report verify_root_matching(const Polynomial& f, const Polynomial& fstar,
                            const std::vector<FieldElement>& roots,
                            const std::vector<FieldElement>& rootsstar) {
  if (f.degree() != fstar.degree())
    fail(errc::degree_mismatch,
         "the polynomials have degrees " + std::to_string(f.degree()) + " and " +
             std::to_string(fstar.degree()));
  if (f.degree() < 2)
    fail(errc::precondition_violated, "the matching bound needs degree >= 2");
  if (!f.is_monic() || !fstar.is_monic())
    fail(errc::non_monic, "the matching bound needs monic polynomials");
  require_factorization(f, roots, "root matching");
  require_factorization(fstar, rootsstar, "root matching");
  const int dim = f.context().group_dim;
  const GroupValue zero = GroupValue::zero(dim);
  for (const Polynomial* p : {&f, &fstar}) {
    for (long i = 0; i <= p->degree(); ++i) {
      if (!(valuation_of(p->coeff(static_cast<unsigned long>(i))) >= zero))
        fail(errc::precondition_violated,
             "the bound needs coefficients of nonnegative value: " + p->str());
    }
  }

  // V = least coefficient value of the difference; the bound is V / degree.
  Polynomial diff = f - fstar;
  GroupValue v_of_diff = GroupValue::infinity(dim);
  for (long i = 0; i <= diff.degree(); ++i) {
    GroupValue c = valuation_of(diff.coeff(static_cast<unsigned long>(i)));
    if (c < v_of_diff) v_of_diff = c;
  }
  GroupValue bound = v_of_diff.scaled(Rational(1, static_cast<unsigned long>(f.degree())));

  const std::size_t n = roots.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GroupValue> matched_values;
  bool found = false;
  do {
    std::vector<GroupValue> values;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      GroupValue v = valuation_of(roots[i] - rootsstar[perm[i]]);
      if (!(v >= bound)) ok = false;
      values.push_back(std::move(v));
    }
    if (ok) {
      found = true;
      matched_values = std::move(values);
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Report report;
  report.claim = "some matching of the roots meets the perturbation bound";
  report.note(Json{{"difference_value", v_of_diff.str()}, {"bound", bound.str()}});
  if (found) {
    Json pairs = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back(Json{{"root", roots[i].str()},
                           {"matched", rootsstar[perm[i]].str()},
                           {"value", matched_values[i].str()}});
    }
    report.check(true, Json{{"matching", pairs}});
  } else {
    report.check(false, Json{{"what", "no bijection meets the bound"}});
  }
  return report;
}

BallWitness attain_ball_minimum(const FieldElement& a, const GroupValue& delta,
                                const Polynomial& g) {
  const FieldContext& ctx = a.context();
  const GroupValue target = ball_value(a, delta, g);
  if (delta.is_infinity()) {
    // Singleton ball: the center itself attains the plain evaluation.
    return BallWitness{a, target, 1};
  }

  // An element of value delta: t^d or p^d, with delta supported on the
  // embedded coordinate.
  const std::vector<Rational>& coords = delta.coords();
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    if (coords[i] != 0)
      fail(errc::not_representable,
           "no element of the model has value " + delta.str());
  }
  const Rational d = coords.back();
  FieldElement step = FieldElement::zero(ctx);
  if (ctx.kind == FieldContext::Kind::tadic) {
    step = FieldElement::monomial(ctx, 1, d);
  } else {
    Rational dr = d;
    if (denominator(dr) != 1)
      fail(errc::not_representable,
           "no element of the model has value " + delta.str());
    Int e = numerator(dr);
    Rational power = 1;
    Int reps = e < 0 ? Int(-e) : e;
    for (Int k = 0; k < reps; ++k) power *= Rational(ctx.prime);
    if (e < 0) power = 1 / power;
    step = FieldElement::from_rational(ctx, power);
  }

  const unsigned long limit =
      g.degree() < 0 ? 0 : static_cast<unsigned long>(g.degree());
  for (unsigned long u = 0; u <= limit; ++u) {
    FieldElement x = a + FieldElement::from_rational(ctx, Rational(u)) * step;
    GroupValue v = valuation_of(g.evaluate(x));
    if (v == target) return BallWitness{x, v, u + 1};
  }
  fail(errc::precondition_violated,
       "witness search exhausted; the residue field is too small");
}

} // namespace kxval
