#pragma once

#include "kxval/polynomial.hpp"
#include "kxval/report.hpp"

#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace kxval {

// Immutable descriptor of a valuation on K[X]: monomial (Gauss) with weight
// gamma, centered pair (a, delta), or the truncation of an inner valuation by
// a monic key polynomial.
class PolyValuation {
public:
  enum class Kind { gauss, pair, truncation };

  static PolyValuation gauss(const FieldContext& ctx, GroupValue gamma);
  static PolyValuation pair(FieldElement center, GroupValue delta);
  static PolyValuation truncation(Polynomial key, PolyValuation inner);

  Kind kind() const;
  const FieldContext& context() const;
  const GroupValue& gauss_gamma() const;      // gauss only
  const FieldElement& pair_center() const;    // pair only
  const GroupValue& pair_delta() const;       // pair only
  const Polynomial& truncation_key() const;   // truncation only
  const PolyValuation& truncation_inner() const;

  std::string str() const; // descriptor form, e.g. "pair:t^(1/2):3/2"

private:
  struct Impl;
  explicit PolyValuation(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

// Value of f: min over monomials of coeff value + i*gamma (gauss), min over
// the expansion around the center of coeff value + i*delta (pair), min over
// the key expansion of inner part value + i * inner key value (truncation).
// Infinite only for f = 0.
GroupValue value_of(const PolyValuation& mu, const Polynomial& f);

struct SupportSet {
  std::set<unsigned long> indices; // argmin of the expansion values
  unsigned long d = 0;             // max of indices
};

SupportSet support_set(const PolyValuation& inner, const Polynomial& key,
                       const Polynomial& f);

// max over i >= 1 of (value(f) - value(d_i f))/i; the first slope of the
// value polygon of f. Requires deg f >= 1.
GroupValue epsilon_factor(const PolyValuation& mu, const Polynomial& f);

// max over the supplied roots c of value(X - c).
GroupValue delta_invariant(const PolyValuation& mu,
                           const std::vector<FieldElement>& roots);

// Equality of initial forms, decided by value(f) = value(g) together with
// value(f - g) > value(f).
bool initial_forms_equal(const PolyValuation& mu, const Polynomial& f,
                         const Polynomial& g);

struct RefutationVerdict {
  std::optional<Polynomial> witness; // engaged when some candidate refutes
  bool refuted() const { return witness.has_value(); }
};

// Looks for a lower-degree candidate with epsilon >= epsilon(key). A clean
// pass certifies only the tested family, never the universal property.
RefutationVerdict abkp_refute(const PolyValuation& mu, const Polynomial& key,
                              const std::vector<Polynomial>& candidates);

// prod(parts) = q*key + r must satisfy value(prod) = value(r), strictly below
// the truncated value of q*key. Needs at least two parts, all of degree
// below deg key.
Report verify_product_rule(const PolyValuation& mu, const Polynomial& key,
                           const std::vector<Polynomial>& parts);

// The truncation by key of the pair (a, delta) must agree with the pair
// valuation itself on every sample; a must be a root of key and samples must
// stay inside the base ring.
Report verify_truncation_correspondence(const Polynomial& key,
                                        const FieldElement& a,
                                        const GroupValue& delta,
                                        const std::vector<Polynomial>& samples);

// Checks epsilon_trunc(f) <= epsilon(key) and the biconditional
// "support != {0} iff epsilon_trunc(f) = epsilon(key)".
Report verify_epsilon_equality(const Polynomial& key, const PolyValuation& mu,
                               const Polynomial& f);

// Same valuation iff equal radii and the centers are within that radius.
bool pairs_equivalent(const FieldElement& a, const GroupValue& delta,
                      const FieldElement& a2, const GroupValue& delta2);

// When epsilon(f) < epsilon(key), the constant part of the key expansion has
// the same initial form as f under the truncation.
Report verify_graded_rewrite(const Polynomial& key, const PolyValuation& mu,
                             const Polynomial& f);

enum class ExtensionClass {
  residually_transcendental,
  value_transcendental,
  indeterminate,
};

const char* extension_class_name(ExtensionClass c);

// Compares the defining value of mu (gamma, delta, or the key's epsilon under
// the inner valuation) against the rational span of the base generators.
ExtensionClass classify_extension(const PolyValuation& mu,
                                  const std::vector<GroupValue>& base_generators);

} // namespace kxval
