#include "kxval/suites.hpp"

#include "kxval/error.hpp"
#include "kxval/parse.hpp"

#include <algorithm>
#include <array>

namespace kxval {

namespace {

constexpr std::uint64_t kFnvBasis = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

FieldContext tt() { return FieldContext::tadic(); }

FieldElement tpow(const Rational& e) {
  return FieldElement::monomial(tt(), 1, e);
}

Polynomial var(const FieldContext& ctx) { return Polynomial::variable(ctx); }

Polynomial con(const FieldElement& c) { return Polynomial::constant(c); }

GroupValue sc(const Rational& q) { return GroupValue::scalar(q); }

// Q = X^2 - t with the hand-proved key data a = t^(1/2), delta = 3/2.
Polynomial fixture_key() {
  return var(tt()) * var(tt()) - con(tpow(1));
}

PolyValuation fixture_pair() {
  return PolyValuation::pair(tpow(Rational(1, 2)), sc(Rational(3, 2)));
}

PolyValuation fixture_truncation() {
  return PolyValuation::truncation(fixture_key(), fixture_pair());
}

struct FailureLog {
  Report* report;
  int failures = 0;

  void observe(bool ok, const Json& detail) {
    if (ok) return;
    ++failures;
    if (failures <= 3) {
      Json item = detail;
      report->check(false, item);
    }
  }

  void finish(const char* what, long samples, std::uint64_t seed,
              std::uint64_t corpus) {
    report->note(Json{{"seed", hex64(seed)},
                      {"samples", samples},
                      {"corpus", hex64(corpus)}});
    report->check(failures == 0,
                  Json{{"what", what}, {"failures", failures}});
  }
};

} // namespace

long SampleGen::integer(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(raw() % span);
}

Rational SampleGen::rational(long max_abs_num, long max_den) {
  return Rational(integer(-max_abs_num, max_abs_num), integer(1, max_den));
}

Rational SampleGen::nonzero_rational(long max_abs_num, long max_den) {
  long num = 0;
  while (num == 0) num = integer(-max_abs_num, max_abs_num);
  return Rational(num, integer(1, max_den));
}

FieldElement SampleGen::base_element(const FieldContext& ctx, int max_terms) {
  if (ctx.kind == FieldContext::Kind::padic)
    return FieldElement::from_rational(ctx, rational(40, 12));
  FieldElement e = FieldElement::zero(ctx);
  const long terms = integer(0, max_terms);
  for (long j = 0; j < terms; ++j)
    e = e + FieldElement::monomial(ctx, nonzero_rational(9, 4),
                                   Rational(integer(-3, 6)));
  return e;
}

FieldElement SampleGen::nonzero_base_element(const FieldContext& ctx,
                                             int max_terms) {
  while (true) {
    FieldElement e = base_element(ctx, std::max(1, max_terms));
    if (!e.is_zero()) return e;
  }
}

FieldElement SampleGen::model_element(const FieldContext& ctx, int max_terms) {
  if (ctx.kind == FieldContext::Kind::padic)
    return base_element(ctx, max_terms);
  FieldElement e = FieldElement::zero(ctx);
  const long terms = integer(0, max_terms);
  for (long j = 0; j < terms; ++j)
    e = e + FieldElement::monomial(
                ctx, nonzero_rational(9, 4),
                Rational(integer(-8, 12), integer(1, 4)));
  return e;
}

Polynomial SampleGen::base_polynomial(const FieldContext& ctx, long max_degree) {
  const long degree = integer(0, max_degree);
  Polynomial p = con(FieldElement::zero(ctx));
  for (long i = 0; i <= degree; ++i)
    p = p + Polynomial::monomial(ctx, base_element(ctx, 2),
                                 static_cast<unsigned long>(i));
  return p;
}

Polynomial SampleGen::nonzero_base_polynomial(const FieldContext& ctx,
                                              long max_degree) {
  while (true) {
    Polynomial p = base_polynomial(ctx, max_degree);
    if (!p.is_zero()) return p;
  }
}

std::uint64_t fnv1a(std::uint64_t state, const std::string& piece) {
  if (state == 0) state = kFnvBasis;
  for (unsigned char byte : piece) {
    state ^= byte;
    state *= kFnvPrime;
  }
  return state;
}

std::string hex64(std::uint64_t value) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

Report check_valuation_axioms(std::uint64_t seed, int pairs) {
  Report report;
  report.claim = "valuation axioms hold on sampled polynomial pairs";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};

  std::vector<PolyValuation> valuations;
  valuations.push_back(PolyValuation::gauss(tt(), sc(Rational(1, 2))));
  valuations.push_back(
      PolyValuation::gauss(FieldContext::padic(5), sc(2)));
  valuations.push_back(fixture_pair());
  valuations.push_back(fixture_truncation());
  valuations.push_back(PolyValuation::gauss(
      FieldContext::tadic(2), GroupValue::vec({Rational(1), Rational(0)})));

  long total = 0;
  for (const auto& mu : valuations) {
    const FieldContext& ctx = mu.context();
    report.check(value_of(mu, con(FieldElement::one(ctx))) ==
                     GroupValue::zero(ctx.group_dim),
                 Json{{"what", "value of 1 is 0"}, {"valuation", mu.str()}});
    report.check(value_of(mu, con(FieldElement::zero(ctx))).is_infinity(),
                 Json{{"what", "value of 0 is infinite"},
                      {"valuation", mu.str()}});
    for (int k = 0; k < pairs; ++k) {
      Polynomial f = gen.base_polynomial(ctx, 5);
      Polynomial g = gen.base_polynomial(ctx, 5);
      FieldElement s = gen.base_element(ctx, 2);
      corpus = fnv1a(corpus, f.str());
      corpus = fnv1a(corpus, g.str());
      corpus = fnv1a(corpus, s.str());
      GroupValue vf = value_of(mu, f);
      GroupValue vg = value_of(mu, g);
      GroupValue vmin = vf < vg ? vf : vg;
      const bool multiplicative = value_of(mu, f * g) == vf + vg;
      GroupValue vsum = value_of(mu, f + g);
      const bool ultrametric = vsum >= vmin;
      const bool tight = vf == vg || vsum == vmin;
      const bool scalar_hom =
          value_of(mu, con(s) * f) == valuation_of(s) + vf;
      const bool support = f.is_zero() == vf.is_infinity();
      ++total;
      log.observe(multiplicative && ultrametric && tight && scalar_hom && support,
                  Json{{"valuation", mu.str()},
                       {"f", f.str()},
                       {"g", g.str()},
                       {"multiplicative", multiplicative},
                       {"ultrametric", ultrametric},
                       {"tight", tight},
                       {"scalar", scalar_hom},
                       {"support", support}});
    }
  }
  log.finish("sampled axiom checks", total, seed, corpus);
  return report;
}

Report check_hasse_identities(std::uint64_t seed, int pairs) {
  Report report;
  report.claim = "derivative coefficient operators obey Leibniz, composition, "
                 "and Taylor identities";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  for (int k = 0; k < pairs; ++k) {
    Polynomial f = gen.base_polynomial(ctx, 5);
    Polynomial g = gen.base_polynomial(ctx, 4);
    FieldElement a = gen.base_element(ctx, 2);
    corpus = fnv1a(corpus, f.str());
    corpus = fnv1a(corpus, g.str());
    corpus = fnv1a(corpus, a.str());

    bool leibniz = true;
    Polynomial fg = f * g;
    for (unsigned long i = 0; i <= 6 && leibniz; ++i) {
      Polynomial rhs = con(FieldElement::zero(ctx));
      for (unsigned long j = 0; j <= i; ++j)
        rhs = rhs + hasse_derivative(f, j) * hasse_derivative(g, i - j);
      leibniz = hasse_derivative(fg, i) == rhs;
    }

    const unsigned long i = static_cast<unsigned long>(gen.integer(0, 3));
    const unsigned long j = static_cast<unsigned long>(gen.integer(0, 3));
    Polynomial lhs = hasse_derivative(hasse_derivative(f, j), i);
    Polynomial rhs =
        con(FieldElement::from_rational(ctx, Rational(binomial(i + j, i)))) *
        hasse_derivative(f, i + j);
    const bool composition = lhs == rhs;

    std::vector<FieldElement> coeffs = taylor_at(f, a);
    Polynomial shift = var(ctx) - con(a);
    Polynomial rebuilt = con(FieldElement::zero(ctx));
    Polynomial power = con(FieldElement::one(ctx));
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      rebuilt = rebuilt + con(coeffs[d]) * power;
      power = power * shift;
    }
    const bool taylor = rebuilt == f;

    log.observe(leibniz && composition && taylor,
                Json{{"f", f.str()},
                     {"g", g.str()},
                     {"center", a.str()},
                     {"leibniz", leibniz},
                     {"composition", composition},
                     {"taylor", taylor}});
  }
  log.finish("sampled derivative identities", pairs, seed, corpus);
  return report;
}

Report check_field_axioms(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "field arithmetic and the base valuation behave on samples";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};

  const std::array<FieldContext, 3> contexts = {
      tt(), FieldContext::padic(2), FieldContext::padic(7)};
  long total = 0;
  for (const auto& ctx : contexts) {
    for (int k = 0; k < samples; ++k) {
      FieldElement x = gen.model_element(ctx, 3);
      FieldElement y = gen.model_element(ctx, 3);
      FieldElement z = gen.model_element(ctx, 2);
      corpus = fnv1a(corpus, x.str());
      corpus = fnv1a(corpus, y.str());
      corpus = fnv1a(corpus, z.str());

      const bool ring = (x + y) + z == x + (y + z) && x * y == y * x &&
                        x * (y + z) == x * y + x * z &&
                        x + (-x) == FieldElement::zero(ctx) &&
                        FieldElement::one(ctx) * x == x;
      bool division = true;
      if (!y.is_zero()) division = (x * y) / y == x;

      GroupValue vx = valuation_of(x);
      GroupValue vy = valuation_of(y);
      const bool mult = valuation_of(x * y) == vx + vy;
      GroupValue vmin = vx < vy ? vx : vy;
      const bool ultra = valuation_of(x + y) >= vmin;

      bool residues = true;
      const GroupValue zero = GroupValue::zero(ctx.group_dim);
      if (vx == zero && vy == zero) {
        Rational product = residue_of(x) * residue_of(y);
        if (ctx.kind == FieldContext::Kind::padic) {
          Rational pr = product;
          Int rem = numerator(pr) % ctx.prime;
          residues = residue_of(x * y) == Rational(rem);
        } else {
          residues = residue_of(x * y) == product;
        }
      }

      ++total;
      log.observe(ring && division && mult && ultra && residues,
                  Json{{"context", ctx.str()},
                       {"x", x.str()},
                       {"y", y.str()},
                       {"ring", ring},
                       {"division", division},
                       {"multiplicative", mult},
                       {"ultrametric", ultra},
                       {"residues", residues}});
    }
  }
  log.finish("sampled field checks", total, seed, corpus);
  return report;
}

Report check_hull_oracle(std::uint64_t seed, int sets) {
  Report report;
  report.claim = "the incremental hull agrees with the all-pairs oracle";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};

  for (int s = 0; s < sets; ++s) {
    const long n = gen.integer(1, 12);
    std::vector<HullPoint> points;
    bool any_finite = false;
    for (long i = 0; i < n; ++i) {
      const long abscissa = gen.integer(0, 20);
      GroupValue value = gen.integer(0, 7) == 0
                             ? GroupValue::infinity(1)
                             : sc(gen.rational(12, 12));
      if (!value.is_infinity()) any_finite = true;
      corpus = fnv1a(corpus, std::to_string(abscissa) + ":" + value.str());
      points.push_back(HullPoint{abscissa, std::move(value)});
    }
    if (!any_finite) points.front().value = sc(0);

    NewtonPolygon fast = lower_hull(points);
    NewtonPolygon slow = oracle_hull(points);
    bool same = fast.vertices.size() == slow.vertices.size() &&
                fast.slopes.size() == slow.slopes.size();
    for (std::size_t i = 0; same && i < fast.vertices.size(); ++i)
      same = fast.vertices[i].abscissa == slow.vertices[i].abscissa &&
             fast.vertices[i].value == slow.vertices[i].value;
    for (std::size_t i = 0; same && i < fast.slopes.size(); ++i)
      same = fast.slopes[i] == slow.slopes[i];
    const bool supports = polygon_supports(fast);
    bool falling = true;
    for (std::size_t i = 1; i < fast.slopes.size(); ++i)
      if (!(fast.slopes[i - 1] > fast.slopes[i])) falling = false;

    log.observe(same && supports && falling,
                Json{{"set", s},
                     {"points", static_cast<long>(points.size())},
                     {"match", same},
                     {"supports", supports},
                     {"falling", falling}});
  }
  log.finish("sampled hull comparisons", sets, seed, corpus);
  return report;
}

Report check_slope_root_equivalence(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "polygon faces mirror root values and multiplicities";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  for (int s = 0; s < samples; ++s) {
    std::vector<FieldElement> roots;
    Polynomial f = con(FieldElement::one(ctx));
    const long factors = gen.integer(1, 3);
    for (long k = 0; k < factors; ++k) {
      FieldElement c =
          gen.integer(0, 5) == 0
              ? FieldElement::zero(ctx)
              : FieldElement::monomial(
                    ctx, gen.nonzero_rational(5, 3),
                    Rational(gen.integer(-2, 4), gen.integer(1, 2)));
      if (gen.integer(0, 1) == 0) {
        f = f * (var(ctx) - con(c));
        roots.push_back(c);
      } else {
        f = f * (var(ctx) * var(ctx) - con(c * c));
        roots.push_back(c);
        roots.push_back(-c);
      }
    }
    PolyValuation mu =
        gen.integer(0, 1) == 0
            ? PolyValuation::gauss(ctx, sc(gen.rational(4, 3)))
            : fixture_pair();
    corpus = fnv1a(corpus, f.str());
    corpus = fnv1a(corpus, mu.str());

    Report sub = verify_slope_root_equivalence(f, roots, mu);
    NewtonPolygon polygon = slope_data(f, mu);
    const bool first_slope =
        polygon.slopes.empty() ||
        epsilon_factor(mu, f) == polygon.slopes.front();

    log.observe(sub.pass && first_slope,
                Json{{"polynomial", f.str()},
                     {"valuation", mu.str()},
                     {"equivalence", sub.pass},
                     {"first_slope", first_slope}});
  }
  log.finish("sampled slope and root comparisons", samples, seed, corpus);
  return report;
}

Report check_truncation_pair_agreement(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "the truncation computes the center valuation on the base ring";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  const Polynomial key = fixture_key();
  const PolyValuation pair = fixture_pair();
  const PolyValuation trunc = fixture_truncation();
  const Polynomial x2 = var(ctx) * var(ctx);

  report.check(value_of(trunc, x2) == sc(1),
               Json{{"what", "truncated value of X^2"}, {"expected", "1"}});
  report.check(value_of(pair, x2) == sc(1),
               Json{{"what", "center value of X^2"}, {"expected", "1"}});
  report.check(value_of(trunc, key) == sc(2),
               Json{{"what", "truncated value of the key"}, {"expected", "2"}});

  const Polynomial key2 = var(ctx) - con(tpow(1));
  const PolyValuation pair2 = PolyValuation::pair(tpow(1), sc(2));
  const PolyValuation trunc2 = PolyValuation::truncation(key2, pair2);
  const GroupValue delta = sc(Rational(3, 2));

  for (int k = 0; k < samples; ++k) {
    Polynomial f = gen.base_polynomial(ctx, 6);
    corpus = fnv1a(corpus, f.str());
    const bool agree = value_of(trunc, f) == value_of(pair, f);
    const bool agree2 = value_of(trunc2, f) == value_of(pair2, f);

    bool invariant = true;
    if (k % 4 == 0) {
      FieldElement c = gen.base_element(ctx, 2);
      corpus = fnv1a(corpus, c.str());
      GroupValue di = delta_invariant(pair, {c});
      Polynomial linear = var(ctx) - con(c);
      invariant = di < delta &&
                  value_of(trunc, linear) == value_of(pair, linear);
    }

    log.observe(agree && agree2 && invariant,
                Json{{"f", f.str()},
                     {"quadratic_key", agree},
                     {"linear_key", agree2},
                     {"low_degree_invariant", invariant}});
  }

  std::vector<Polynomial> op_samples = {x2, key, con(tpow(Rational(2))),
                                        var(ctx) - con(tpow(1)),
                                        x2 * x2 + var(ctx)};
  report.absorb(verify_truncation_correspondence(
      key, tpow(Rational(1, 2)), delta, op_samples));

  log.finish("sampled agreements", samples, seed, corpus);
  return report;
}

Report check_epsilon_bound_biconditional(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "epsilon stays below the key and the support tells equality";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  const Polynomial key = fixture_key();
  const PolyValuation pair = fixture_pair();
  const PolyValuation trunc = fixture_truncation();
  const Polynomial x2 = var(ctx) * var(ctx);

  report.check(epsilon_factor(trunc, x2) == sc(Rational(1, 2)),
               Json{{"what", "truncated epsilon of X^2"}, {"expected", "1/2"}});
  report.check(epsilon_factor(trunc, key) == sc(Rational(3, 2)),
               Json{{"what", "truncated epsilon of the key"},
                    {"expected", "3/2"}});
  report.absorb(verify_epsilon_equality(key, pair, x2));
  report.absorb(verify_epsilon_equality(key, pair, key));
  report.absorb(verify_epsilon_equality(key, pair, var(ctx)));

  int done = 0;
  while (done < samples) {
    Polynomial f = gen.nonzero_base_polynomial(ctx, 6);
    if (f.degree() < 1) continue;
    corpus = fnv1a(corpus, f.str());
    Report sub = verify_epsilon_equality(key, pair, f);
    log.observe(sub.pass, Json{{"f", f.str()}, {"details", sub.to_json()}});
    ++done;
  }
  log.finish("sampled epsilon checks", samples, seed, corpus);
  return report;
}

Report check_graded_rewrite_samples(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "low-epsilon polynomials reduce to their expansion constant";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  const Polynomial key = fixture_key();
  const PolyValuation pair = fixture_pair();
  const GroupValue eps_key = epsilon_factor(pair, key);

  report.absorb(verify_graded_rewrite(key, pair, var(ctx) * var(ctx)));
  report.absorb(verify_graded_rewrite(key, pair, var(ctx) - con(tpow(1))));

  int done = 0;
  while (done < samples) {
    Polynomial f = gen.nonzero_base_polynomial(ctx, 4);
    if (f.degree() < 1) continue;
    if (!(epsilon_factor(pair, f) < eps_key)) continue;
    corpus = fnv1a(corpus, f.str());
    Report sub = verify_graded_rewrite(key, pair, f);
    log.observe(sub.pass, Json{{"f", f.str()}, {"details", sub.to_json()}});
    ++done;
  }
  log.finish("sampled rewrites", samples, seed, corpus);
  return report;
}

Report check_ball_pair_identity(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "the ball minimum equals the centered valuation";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  for (int k = 0; k < samples; ++k) {
    FieldElement a = gen.model_element(ctx, 2);
    GroupValue delta = sc(gen.rational(6, 4));
    Polynomial g = gen.base_polynomial(ctx, 5);
    corpus = fnv1a(corpus, a.str());
    corpus = fnv1a(corpus, delta.str());
    corpus = fnv1a(corpus, g.str());
    const bool same =
        ball_value(a, delta, g) == value_of(PolyValuation::pair(a, delta), g);
    log.observe(same, Json{{"center", a.str()},
                           {"radius", delta.str()},
                           {"g", g.str()}});
  }
  log.finish("sampled identities", samples, seed, corpus);
  return report;
}

Report check_ball_witnesses(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "a point of the ball attains the minimum within the degree bound";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  for (int k = 0; k < samples; ++k) {
    FieldElement a = gen.model_element(ctx, 2);
    GroupValue delta =
        gen.integer(0, 5) == 0 ? GroupValue::infinity(1) : sc(gen.rational(6, 4));
    Polynomial g = gen.nonzero_base_polynomial(ctx, 5);
    corpus = fnv1a(corpus, a.str());
    corpus = fnv1a(corpus, delta.str());
    corpus = fnv1a(corpus, g.str());

    BallWitness witness = attain_ball_minimum(a, delta, g);
    const GroupValue target = ball_value(a, delta, g);
    const bool attained = witness.value == target;
    const bool bounded =
        witness.attempts <= static_cast<unsigned long>(g.degree()) + 1;
    const bool inside = Ball{a, delta}.contains(witness.point);
    log.observe(attained && bounded && inside,
                Json{{"center", a.str()},
                     {"radius", delta.str()},
                     {"g", g.str()},
                     {"witness", witness.point.str()},
                     {"attempts", witness.attempts},
                     {"attained", attained},
                     {"inside", inside}});
  }
  log.finish("sampled witnesses", samples, seed, corpus);
  return report;
}

namespace {

std::vector<Diskoid> fixture_diskoids() {
  const FieldContext ctx = tt();
  Polynomial x = var(ctx);
  FieldElement tinv = tpow(-1);
  FieldElement thalf = tpow(Rational(1, 2));
  FieldElement t1 = tpow(1);
  std::vector<Diskoid> out;
  out.push_back(decompose(x * (x - con(tinv)),
                          {FieldElement::zero(ctx), tinv}, sc(-1)));
  out.push_back(decompose(x * x - con(t1), {thalf, -thalf}, sc(2)));
  out.push_back(decompose((x - con(t1)) * (x + con(t1)), {t1, -t1}, sc(3)));
  return out;
}

} // namespace

Report check_diskoid_ultrametric(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "the diskoid minimum is ultrametric and supermultiplicative";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();
  const std::vector<Diskoid> fixtures = fixture_diskoids();

  for (int k = 0; k < samples; ++k) {
    const Diskoid& d = fixtures[static_cast<std::size_t>(k) % fixtures.size()];
    Polynomial g = gen.nonzero_base_polynomial(ctx, 4);
    Polynomial h = gen.nonzero_base_polynomial(ctx, 4);
    corpus = fnv1a(corpus, g.str());
    corpus = fnv1a(corpus, h.str());
    GroupValue vg = diskoid_value(d, g);
    GroupValue vh = diskoid_value(d, h);
    GroupValue vmin = vg < vh ? vg : vh;
    const bool ultra = diskoid_value(d, g + h) >= vmin;
    const bool super = diskoid_value(d, g * h) >= vg + vh;
    log.observe(ultra && super, Json{{"defining", d.defining.str()},
                                     {"g", g.str()},
                                     {"h", h.str()},
                                     {"ultrametric", ultra},
                                     {"supermultiplicative", super}});
  }
  log.finish("sampled diskoid inequalities", samples, seed, corpus);
  return report;
}

Report check_single_ball_multiplicative(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "a one-ball diskoid gives a genuine valuation";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  for (int k = 0; k < samples; ++k) {
    FieldElement a = gen.model_element(ctx, 2);
    GroupValue rho = sc(gen.rational(5, 3));
    Diskoid d = decompose(var(ctx) - con(a), {a}, rho);
    Polynomial g = gen.nonzero_base_polynomial(ctx, 4);
    Polynomial h = gen.nonzero_base_polynomial(ctx, 4);
    corpus = fnv1a(corpus, a.str());
    corpus = fnv1a(corpus, g.str());
    corpus = fnv1a(corpus, h.str());
    GroupValue vg = diskoid_value(d, g);
    GroupValue vh = diskoid_value(d, h);
    const bool multiplicative = diskoid_value(d, g * h) == vg + vh;
    GroupValue vmin = vg < vh ? vg : vh;
    GroupValue vsum = diskoid_value(d, g + h);
    const bool ultra = vsum >= vmin && (vg == vh || vsum == vmin);
    const bool single = d.balls.size() == 1 && d.balls.front().radius == rho;
    log.observe(multiplicative && ultra && single,
                Json{{"center", a.str()},
                     {"rho", rho.str()},
                     {"g", g.str()},
                     {"h", h.str()},
                     {"multiplicative", multiplicative},
                     {"ultrametric", ultra},
                     {"single_ball", single}});
  }
  log.finish("sampled one-ball checks", samples, seed, corpus);
  return report;
}

Report check_membership_coherence(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "sublevel membership coincides with the ball cover";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();
  const std::vector<Diskoid> fixtures = fixture_diskoids();

  for (int k = 0; k < samples; ++k) {
    const Diskoid& d = fixtures[static_cast<std::size_t>(k) % fixtures.size()];
    FieldElement x = gen.model_element(ctx, 2);
    if (k % 3 == 0) {
      const Ball& ball =
          d.balls[static_cast<std::size_t>(gen.integer(0, 100)) % d.balls.size()];
      x = ball.center +
          FieldElement::monomial(ctx, gen.rational(3, 2),
                                 Rational(gen.integer(-2, 4)));
    }
    corpus = fnv1a(corpus, x.str());
    Report sub = membership(x, d.defining, d.rho, d);
    log.observe(sub.pass, sub.to_json());
  }
  log.finish("sampled membership checks", samples, seed, corpus);
  return report;
}

Report check_diskoid_truncation_agreement(std::uint64_t seed, int samples) {
  Report report;
  report.claim = "the key diskoid minimum equals the truncated valuation";
  SampleGen gen(seed);
  std::uint64_t corpus = kFnvBasis;
  FailureLog log{&report};
  const FieldContext ctx = tt();

  const Polynomial key = fixture_key();
  const PolyValuation trunc = fixture_truncation();
  const FieldElement thalf = tpow(Rational(1, 2));
  const Diskoid d = decompose(key, {thalf, -thalf}, sc(2));

  report.check(diskoid_value(d, var(ctx) * var(ctx)) == sc(1),
               Json{{"what", "diskoid value of X^2"}, {"expected", "1"}});

  for (int k = 0; k < samples; ++k) {
    Polynomial f = gen.base_polynomial(ctx, 6);
    corpus = fnv1a(corpus, f.str());
    const bool agree = diskoid_value(d, f) == value_of(trunc, f);
    log.observe(agree, Json{{"f", f.str()}});
  }
  log.finish("sampled agreements", samples, seed, corpus);
  return report;
}

Report fixture_product_rule_reports() {
  Report report;
  report.claim = "products of low-degree parts keep the remainder value";
  const FieldContext ctx = tt();
  const Polynomial key = fixture_key();
  const PolyValuation pair = fixture_pair();
  const Polynomial x = var(ctx);
  const Polynomial xt = x - con(tpow(1));
  report.absorb(verify_product_rule(pair, key, {x, x}));
  report.absorb(verify_product_rule(pair, key, {xt, xt}));
  report.absorb(verify_product_rule(pair, key, {x, xt}));
  return report;
}

Report fixture_pair_equivalence_report() {
  Report report;
  report.claim = "center adjustments within the radius keep the valuation";
  const FieldContext ctx = tt();
  const FieldElement a = tpow(Rational(1, 2));
  const FieldElement a2 = a + tpow(2);
  const GroupValue delta = sc(Rational(3, 2));

  report.check(pairs_equivalent(a, delta, a2, delta),
               Json{{"what", "nearby centers are equivalent"},
                    {"centers", Json::array({a.str(), a2.str()})}});
  report.check(!pairs_equivalent(FieldElement::zero(ctx), sc(1),
                                 FieldElement::zero(ctx), sc(2)),
               Json{{"what", "distinct radii differ"}});
  report.check(pairs_equivalent(a, delta, a, delta),
               Json{{"what", "reflexivity"}});
  report.check(!pairs_equivalent(FieldElement::zero(ctx), sc(2), tpow(1), sc(2)),
               Json{{"what", "distant centers differ"}});

  const PolyValuation mu1 = PolyValuation::pair(a, delta);
  const PolyValuation mu2 = PolyValuation::pair(a2, delta);
  const Polynomial x = var(ctx);
  const Polynomial t1 = con(tpow(1));
  const std::vector<Polynomial> probes = {
      x,          x * x,        x - t1,          x * x - t1,      x * x * x,
      x + t1,     (x - t1) * (x - t1), x * x + x, x * x * x - con(tpow(2)),
      x * x - x + t1};
  bool sampled_equal = true;
  for (const auto& p : probes)
    if (!(value_of(mu1, p) == value_of(mu2, p))) sampled_equal = false;
  report.check(sampled_equal,
               Json{{"what", "equivalent pairs give equal sampled values"},
                    {"probes", static_cast<long>(probes.size())}});

  const PolyValuation nu1 =
      PolyValuation::pair(FieldElement::zero(ctx), sc(2));
  const PolyValuation nu2 = PolyValuation::pair(tpow(1), sc(2));
  report.check(value_of(nu1, x - t1) == sc(1) && value_of(nu2, x - t1) == sc(2),
               Json{{"what", "inequivalent pairs split on a probe"},
                    {"probe", (x - t1).str()}});
  return report;
}

Report fixture_conjugate_invariance_report() {
  Report report;
  report.claim = "conjugate centers give the same ball values on the base ring";
  const FieldContext ctx = tt();
  const FieldElement thalf = tpow(Rational(1, 2));
  const GroupValue delta = sc(Rational(3, 2));
  const Polynomial x = var(ctx);
  const Polynomial t1 = con(tpow(1));

  report.check(ball_value(thalf, delta, x * x) == sc(1) &&
                   ball_value(-thalf, delta, x * x) == sc(1),
               Json{{"what", "square probe has ball value 1 at both centers"}});
  report.check(ball_value(thalf, delta, x * x * x) == sc(Rational(3, 2)) &&
                   ball_value(-thalf, delta, x * x * x) == sc(Rational(3, 2)),
               Json{{"what", "cube probe has ball value 3/2 at both centers"}});

  const std::vector<Polynomial> samples = {
      x * x, x * x * x, x * x - t1, x - t1, x * x * x * x + t1 * x,
      t1 * x * x + con(tpow(3))};
  report.absorb(verify_conjugate_invariance({thalf, -thalf}, delta, samples));
  return report;
}

Report fixture_root_matching_report() {
  Report report;
  report.claim = "perturbed roots match within the coefficient distance bound";
  const FieldContext ctx = tt();
  const Polynomial x = var(ctx);
  const FieldElement thalf = tpow(Rational(1, 2));
  const FieldElement t1 = tpow(1);

  const Polynomial f = x * x - con(t1);
  const FieldElement shifted = thalf + tpow(Rational(3, 2));
  const Polynomial fstar = x * x - con(t1 * (FieldElement::one(ctx) + t1) *
                                       (FieldElement::one(ctx) + t1));
  report.absorb(verify_root_matching(f, fstar, {thalf, -thalf},
                                     {shifted, -shifted}));
  report.absorb(verify_root_matching(f, f, {thalf, -thalf}, {thalf, -thalf}));
  return report;
}

Report product_gap_report(const FieldContext& ctx, const FieldElement& a) {
  if (a.is_zero())
    fail(errc::precondition_violated, "the gap needs a nonzero center");
  const GroupValue va = valuation_of(a);
  const GroupValue zero = GroupValue::zero(ctx.group_dim);
  const Polynomial x = var(ctx);
  const Polynomial f = x * (x - con(a));
  const Diskoid d = decompose(f, {FieldElement::zero(ctx), a}, va);

  Report report;
  report.claim = "the diskoid minimum fails multiplicativity at this center";
  report.note(Json{{"center", a.str()},
                   {"center_value", va.str()},
                   {"diskoid", d.to_json()}});
  for (const auto& ball : d.balls)
    report.check(ball.radius == zero,
                 Json{{"what", "component radius is 0"},
                      {"center", ball.center.str()},
                      {"radius", ball.radius.str()}});
  const GroupValue left = diskoid_value(d, x);
  const GroupValue right = diskoid_value(d, x - con(a));
  const GroupValue product = diskoid_value(d, f);
  report.check(left == va, Json{{"what", "value of X"}, {"got", left.str()}});
  report.check(right == va,
               Json{{"what", "value of the shifted factor"}, {"got", right.str()}});
  report.check(product == va,
               Json{{"what", "value of the product"}, {"got", product.str()}});
  report.check(product > left + right,
               Json{{"what", "strict gap over the sum"},
                    {"product", product.str()},
                    {"sum", (left + right).str()}});
  return report;
}

std::vector<std::string> suite_names() {
  return {"axioms", "newton", "correspondence", "diskoid", "all"};
}

Report suite_axioms(std::uint64_t seed) {
  Report report;
  report.claim = "axioms suite";
  report.note(Json{{"seed", hex64(seed)}});
  report.absorb(check_field_axioms(seed, 300));
  report.absorb(check_valuation_axioms(seed + 1, 520));
  report.absorb(check_hasse_identities(seed + 2, 210));
  return report;
}

Report suite_newton(std::uint64_t seed) {
  Report report;
  report.claim = "newton suite";
  report.note(Json{{"seed", hex64(seed)}});
  report.absorb(check_hull_oracle(seed, 220));
  report.absorb(check_slope_root_equivalence(seed + 1, 120));
  return report;
}

Report suite_correspondence(std::uint64_t seed) {
  Report report;
  report.claim = "correspondence suite";
  report.note(Json{{"seed", hex64(seed)}});
  report.absorb(check_truncation_pair_agreement(seed, 220));
  report.absorb(check_epsilon_bound_biconditional(seed + 1, 210));
  report.absorb(check_graded_rewrite_samples(seed + 2, 60));
  report.absorb(fixture_product_rule_reports());
  report.absorb(fixture_pair_equivalence_report());
  return report;
}

Report suite_diskoid(std::uint64_t seed) {
  Report report;
  report.claim = "diskoid suite";
  report.note(Json{{"seed", hex64(seed)}});
  report.absorb(check_ball_pair_identity(seed, 150));
  report.absorb(check_ball_witnesses(seed + 1, 120));
  report.absorb(check_diskoid_ultrametric(seed + 2, 150));
  report.absorb(check_single_ball_multiplicative(seed + 3, 150));
  report.absorb(check_membership_coherence(seed + 4, 150));
  report.absorb(check_diskoid_truncation_agreement(seed + 5, 150));
  report.absorb(fixture_conjugate_invariance_report());
  report.absorb(fixture_root_matching_report());
  report.absorb(product_gap_report(tt(), tpow(-1)));
  return report;
}

Report suite_all(std::uint64_t seed) {
  Report report;
  report.claim = "all suites";
  report.note(Json{{"seed", hex64(seed)}});
  report.absorb(suite_axioms(seed));
  report.absorb(suite_newton(seed));
  report.absorb(suite_correspondence(seed));
  report.absorb(suite_diskoid(seed));
  return report;
}

Report run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "axioms") return suite_axioms(seed);
  if (name == "newton") return suite_newton(seed);
  if (name == "correspondence") return suite_correspondence(seed);
  if (name == "diskoid") return suite_diskoid(seed);
  if (name == "all") return suite_all(seed);
  fail(errc::unknown_suite, "unknown suite: " + name);
}

} // namespace kxval
