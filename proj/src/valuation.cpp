#include "kxval/valuation.hpp"

#include "kxval/error.hpp"

#include <utility>

namespace kxval {

struct PolyValuation::Impl {
  Kind kind = Kind::gauss;
  FieldContext ctx;
  GroupValue weight;                  // gauss gamma or pair delta
  std::optional<FieldElement> center; // pair
  std::optional<Polynomial> key;      // truncation
  std::optional<PolyValuation> inner; // truncation
};

PolyValuation::PolyValuation(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

PolyValuation PolyValuation::gauss(const FieldContext& ctx, GroupValue gamma) {
  if (!gamma.is_finite())
    fail(errc::precondition_violated, "monomial weight must be finite");
  if (gamma.dim() != ctx.group_dim)
    fail(errc::dimension_mismatch, "weight dimension differs from the context");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::gauss;
  impl->ctx = ctx;
  impl->weight = std::move(gamma);
  return PolyValuation(impl);
}

PolyValuation PolyValuation::pair(FieldElement center, GroupValue delta) {
  const FieldContext& ctx = center.context();
  if (ctx.kind != FieldContext::Kind::tadic)
    fail(errc::context_mismatch, "pair centers live in the t-adic model");
  if (!delta.is_finite())
    fail(errc::precondition_violated, "pair radius must be finite");
  if (delta.dim() != ctx.group_dim)
    fail(errc::dimension_mismatch, "radius dimension differs from the context");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::pair;
  impl->ctx = ctx;
  impl->center = std::move(center);
  impl->weight = std::move(delta);
  return PolyValuation(impl);
}

PolyValuation PolyValuation::truncation(Polynomial key, PolyValuation inner) {
  if (key.degree() < 1)
    fail(errc::degree_zero_key, "truncation key must have degree >= 1");
  if (!key.is_monic())
    fail(errc::non_monic, "truncation key must be monic: " + key.str());
  if (!(key.context() == inner.context()))
    fail(errc::context_mismatch, "key and inner valuation contexts differ");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::truncation;
  impl->ctx = key.context();
  impl->key = std::move(key);
  impl->inner = std::move(inner);
  return PolyValuation(impl);
}

PolyValuation::Kind PolyValuation::kind() const { return impl_->kind; }
const FieldContext& PolyValuation::context() const { return impl_->ctx; }

const GroupValue& PolyValuation::gauss_gamma() const {
  if (impl_->kind != Kind::gauss)
    fail(errc::precondition_violated, "not a monomial valuation");
  return impl_->weight;
}

const FieldElement& PolyValuation::pair_center() const {
  if (impl_->kind != Kind::pair)
    fail(errc::precondition_violated, "not a pair valuation");
  return *impl_->center;
}

const GroupValue& PolyValuation::pair_delta() const {
  if (impl_->kind != Kind::pair)
    fail(errc::precondition_violated, "not a pair valuation");
  return impl_->weight;
}

const Polynomial& PolyValuation::truncation_key() const {
  if (impl_->kind != Kind::truncation)
    fail(errc::precondition_violated, "not a truncation");
  return *impl_->key;
}

const PolyValuation& PolyValuation::truncation_inner() const {
  if (impl_->kind != Kind::truncation)
    fail(errc::precondition_violated, "not a truncation");
  return *impl_->inner;
}

std::string PolyValuation::str() const {
  switch (impl_->kind) {
    case Kind::gauss:
      return "gauss:" + impl_->weight.str();
    case Kind::pair:
      return "pair:" + impl_->center->str() + ":" + impl_->weight.str();
    case Kind::truncation:
      return "trunc[" + impl_->key->str() + "]:" + impl_->inner->str();
  }
  return "";
}

GroupValue value_of(const PolyValuation& mu, const Polynomial& f) {
  const FieldContext& ctx = mu.context();
  if (!(f.context() == ctx))
    fail(errc::context_mismatch, "polynomial context differs from the valuation");
  GroupValue best = GroupValue::infinity(ctx.group_dim);
  switch (mu.kind()) {
    case PolyValuation::Kind::gauss: {
      const GroupValue& gamma = mu.gauss_gamma();
      for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        GroupValue v = vg_affine(valuation_of(f.coeffs()[i]), i, gamma);
        if (v < best) best = v;
      }
      return best;
    }
    case PolyValuation::Kind::pair: {
      const GroupValue& delta = mu.pair_delta();
      std::vector<FieldElement> around = taylor_at(f, mu.pair_center());
      for (std::size_t i = 0; i < around.size(); ++i) {
        if (around[i].is_zero()) continue;
        GroupValue v = vg_affine(valuation_of(around[i]), i, delta);
        if (v < best) best = v;
      }
      return best;
    }
    case PolyValuation::Kind::truncation: {
      const PolyValuation& inner = mu.truncation_inner();
      GroupValue key_value = value_of(inner, mu.truncation_key());
      std::vector<Polynomial> parts = q_expansion(f, mu.truncation_key());
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].is_zero()) continue;
        GroupValue v = vg_affine(value_of(inner, parts[i]), i, key_value);
        if (v < best) best = v;
      }
      return best;
    }
  }
  return best;
}

SupportSet support_set(const PolyValuation& inner, const Polynomial& key,
                       const Polynomial& f) {
  if (f.is_zero()) fail(errc::zero_polynomial, "support of the zero polynomial");
  GroupValue key_value = value_of(inner, key);
  std::vector<Polynomial> parts = q_expansion(f, key);
  GroupValue best = GroupValue::infinity(inner.context().group_dim);
  std::vector<std::pair<unsigned long, GroupValue>> values;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_zero()) continue;
    GroupValue v = vg_affine(value_of(inner, parts[i]), i, key_value);
    if (v < best) best = v;
    values.emplace_back(i, std::move(v));
  }
  SupportSet s;
  for (const auto& [i, v] : values) {
    if (v == best) {
      s.indices.insert(i);
      s.d = i;
    }
  }
  return s;
}

GroupValue epsilon_factor(const PolyValuation& mu, const Polynomial& f) {
  if (f.degree() < 1)
    fail(errc::constant_polynomial, "the epsilon factor needs degree >= 1");
  GroupValue top = value_of(mu, f);
  bool found = false;
  GroupValue best;
  for (long i = 1; i <= f.degree(); ++i) {
    Polynomial di = hasse_derivative(f, static_cast<unsigned long>(i));
    if (di.is_zero()) continue;
    GroupValue v = vg_slope(top, value_of(mu, di), static_cast<unsigned long>(i));
    if (!found || v > best) {
      best = std::move(v);
      found = true;
    }
  }
  if (!found)
    fail(errc::constant_polynomial, "no derivative contributes a slope");
  return best;
}

GroupValue delta_invariant(const PolyValuation& mu,
                           const std::vector<FieldElement>& roots) {
  if (roots.empty()) fail(errc::empty_roots, "delta invariant needs roots");
  const FieldContext& ctx = mu.context();
  Polynomial x = Polynomial::variable(ctx);
  bool found = false;
  GroupValue best;
  for (const auto& c : roots) {
    GroupValue v = value_of(mu, x - Polynomial::constant(c));
    if (!found || v > best) {
      best = std::move(v);
      found = true;
    }
  }
  return best;
}

bool initial_forms_equal(const PolyValuation& mu, const Polynomial& f,
                         const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    fail(errc::zero_polynomial, "initial forms need nonzero polynomials");
  GroupValue vf = value_of(mu, f);
  if (vf != value_of(mu, g)) return false;
  return value_of(mu, f - g) > vf;
}

RefutationVerdict abkp_refute(const PolyValuation& mu, const Polynomial& key,
                              const std::vector<Polynomial>& candidates) {
  if (key.degree() < 1)
    fail(errc::degree_zero_key, "key must have degree >= 1");
  if (!key.is_monic()) fail(errc::non_monic, "key must be monic: " + key.str());
  for (const auto& c : candidates)
    if (!c.is_zero() && c.degree() >= key.degree())
      fail(errc::bad_candidate_degree,
           "candidate degree must stay below the key degree: " + c.str());
  GroupValue key_eps = epsilon_factor(mu, key);
  for (const auto& c : candidates) {
    if (c.degree() < 1) continue; // constants never witness a refutation
    if (epsilon_factor(mu, c) >= key_eps) return {c};
  }
  return {};
}

Report verify_product_rule(const PolyValuation& mu, const Polynomial& key,
                           const std::vector<Polynomial>& parts) {
  if (parts.size() < 2)
    fail(errc::precondition_violated, "the product rule needs at least two parts");
  for (const auto& p : parts)
    if (p.is_zero() || p.degree() >= key.degree())
      fail(errc::bad_candidate_degree,
           "parts must be nonzero of degree below the key");
  Polynomial prod = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) prod = prod * parts[i];
  DivisionResult div = euclid_divide(prod, key);
  PolyValuation trunc = PolyValuation::truncation(key, mu);

  GroupValue v_prod = value_of(mu, prod);
  GroupValue v_rem = value_of(mu, div.remainder);
  GroupValue v_shifted = value_of(trunc, div.quotient * key);

  Report report;
  report.claim = "product-remainder value identity";
  report.note(Json{{"key", key.str()},
                   {"valuation", mu.str()},
                   {"product", prod.str()},
                   {"remainder", div.remainder.str()}});
  report.check(v_prod == v_rem, Json{{"what", "value(product) = value(remainder)"},
                                     {"value_product", v_prod.str()},
                                     {"value_remainder", v_rem.str()}});
  report.check(v_prod < v_shifted,
               Json{{"what", "value(product) < truncated value of quotient*key"},
                    {"value_product", v_prod.str()},
                    {"value_shifted", v_shifted.str()}});
  return report;
}

Report verify_truncation_correspondence(const Polynomial& key,
                                        const FieldElement& a,
                                        const GroupValue& delta,
                                        const std::vector<Polynomial>& samples) {
  if (!key.evaluate(a).is_zero())
    fail(errc::not_a_root, "the center must be a root of the key");
  PolyValuation around = PolyValuation::pair(a, delta);
  PolyValuation trunc = PolyValuation::truncation(key, around);

  Report report;
  report.claim = "truncation agrees with the center valuation";
  report.note(Json{{"key", key.str()}, {"center", a.str()}, {"radius", delta.str()}});
  std::size_t checked = 0;
  for (const auto& f : samples) {
    if (!f.in_base_ring())
      fail(errc::sample_not_in_base_ring,
           "samples must have integer t-exponents: " + f.str());
    GroupValue v_trunc = value_of(trunc, f);
    GroupValue v_pair = value_of(around, f);
    ++checked;
    if (v_trunc != v_pair) {
      report.check(false, Json{{"sample", f.str()},
                               {"value_truncation", v_trunc.str()},
                               {"value_pair", v_pair.str()}});
      return report; // first discrepancy is enough
    }
  }
  report.check(true, Json{{"samples", checked}});
  return report;
}

Report verify_epsilon_equality(const Polynomial& key, const PolyValuation& mu,
                               const Polynomial& f) {
  PolyValuation trunc = PolyValuation::truncation(key, mu);
  GroupValue eps_trunc_f = epsilon_factor(trunc, f);
  GroupValue eps_mu_key = epsilon_factor(mu, key);
  GroupValue eps_trunc_key = epsilon_factor(trunc, key);
  SupportSet support = support_set(mu, key, f);
  const bool support_beyond_zero =
      !(support.indices.size() == 1 && *support.indices.begin() == 0);

  Report report;
  report.claim = "epsilon bound and support biconditional";
  Json indices = Json::array();
  for (unsigned long i : support.indices) indices.push_back(i);
  report.note(Json{{"key", key.str()},
                   {"polynomial", f.str()},
                   {"epsilon_truncation", eps_trunc_f.str()},
                   {"epsilon_key", eps_mu_key.str()},
                   {"epsilon_truncation_of_key", eps_trunc_key.str()},
                   {"support", indices},
                   {"support_max", support.d}});
  report.check(eps_trunc_f <= eps_mu_key,
               Json{{"what", "epsilon under the truncation stays bounded"}});
  report.check(eps_trunc_key == eps_mu_key,
               Json{{"what", "the key has the same epsilon under its truncation"}});
  report.check(support_beyond_zero == (eps_trunc_f == eps_mu_key),
               Json{{"what", "support beyond index 0 iff epsilon is attained"}});
  return report;
}

bool pairs_equivalent(const FieldElement& a, const GroupValue& delta,
                      const FieldElement& a2, const GroupValue& delta2) {
  if (!delta.is_finite() || !delta2.is_finite())
    fail(errc::precondition_violated, "radii must be finite");
  if (delta != delta2) return false;
  return valuation_of(a - a2) >= delta;
}

Report verify_graded_rewrite(const Polynomial& key, const PolyValuation& mu,
                             const Polynomial& f) {
  GroupValue eps_f = epsilon_factor(mu, f);
  GroupValue eps_key = epsilon_factor(mu, key);
  if (!(eps_f < eps_key))
    fail(errc::precondition_violated,
         "rewrite needs epsilon(f) < epsilon(key); got " + eps_f.str() +
             " vs " + eps_key.str());
  PolyValuation trunc = PolyValuation::truncation(key, mu);
  Polynomial constant_part = q_expansion(f, key).front();

  Report report;
  report.claim = "initial form survives degree reduction";
  report.note(Json{{"key", key.str()},
                   {"polynomial", f.str()},
                   {"constant_part", constant_part.str()},
                   {"epsilon_f", eps_f.str()},
                   {"epsilon_key", eps_key.str()}});
  if (constant_part.is_zero()) {
    report.check(false, Json{{"what", "constant part vanished"}});
    return report;
  }
  report.check(initial_forms_equal(trunc, f, constant_part),
               Json{{"what", "initial forms match under the truncation"},
                    {"value_f", value_of(trunc, f).str()},
                    {"value_constant_part", value_of(trunc, constant_part).str()},
                    {"value_difference", value_of(trunc, f - constant_part).str()}});
  return report;
}

const char* extension_class_name(ExtensionClass c) {
  switch (c) {
    case ExtensionClass::residually_transcendental: return "residually_transcendental";
    case ExtensionClass::value_transcendental: return "value_transcendental";
    case ExtensionClass::indeterminate: return "indeterminate";
  }
  return "unknown";
}

ExtensionClass classify_extension(const PolyValuation& mu,
                                  const std::vector<GroupValue>& base_generators) {
  GroupValue defining;
  switch (mu.kind()) {
    case PolyValuation::Kind::gauss:
      defining = mu.gauss_gamma();
      break;
    case PolyValuation::Kind::pair:
      defining = mu.pair_delta();
      break;
    case PolyValuation::Kind::truncation:
      defining = epsilon_factor(mu.truncation_inner(), mu.truncation_key());
      break;
  }
  if (!defining.is_finite()) return ExtensionClass::indeterminate;
  const int base_rank = vg_subgroup_ranks(base_generators).second;
  std::vector<GroupValue> extended = base_generators;
  extended.push_back(defining);
  const int extended_rank = vg_subgroup_ranks(extended).second;
  return extended_rank == base_rank ? ExtensionClass::residually_transcendental
                                    : ExtensionClass::value_transcendental;
}

} // namespace kxval
