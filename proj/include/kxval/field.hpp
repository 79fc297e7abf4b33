#pragma once

#include "kxval/group_value.hpp"

#include <map>
#include <string>
#include <vector>

namespace kxval {

struct FieldContext {
  enum class Kind { padic, tadic };

  Kind kind = Kind::tadic;
  Int prime = 0; // padic only
  int group_dim = 1;

  static FieldContext padic(const Int& p, int group_dim = 1);
  static FieldContext tadic(int group_dim = 1);

  bool operator==(const FieldContext& other) const = default;

  std::string str() const; // "padic:2" or "tadic:QQ"
};

// Exact element of the working field: a rational number in p-adic mode, a
// finite sum of rational multiples of rational powers of t in t-adic mode.
// The zero element stores no terms.
class FieldElement {
public:
  FieldElement() = default;

  static FieldElement zero(const FieldContext& ctx);
  static FieldElement one(const FieldContext& ctx);
  static FieldElement from_rational(const FieldContext& ctx, const Rational& q);
  static FieldElement monomial(const FieldContext& ctx, const Rational& coeff,
                               const Rational& exponent);
  static FieldElement from_terms(const FieldContext& ctx,
                                 std::map<Rational, Rational> terms);

  const FieldContext& context() const { return ctx_; }
  bool is_zero() const;
  bool is_rational_constant() const;
  // The rational payload; requires is_rational_constant().
  Rational rational_value() const;
  // t-adic term map, exponent -> nonzero coefficient.
  const std::map<Rational, Rational>& terms() const;
  // true when every t-exponent is an integer (always true in p-adic mode).
  bool in_base_ring() const;

  std::string str() const;

  FieldElement pow(unsigned long n) const;

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  FieldElement operator-() const;
  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

private:
  FieldContext ctx_ = FieldContext::tadic();
  Rational rat_;                      // padic payload
  std::map<Rational, Rational> terms_; // tadic payload
};

// p-adic exponent or least t-exponent, embedded at the last coordinate of the
// context's value group; infinity for zero.
GroupValue valuation_of(const FieldElement& x);

// Residue of a unit: x mod p as the canonical representative in [0, p) for
// p-adic elements, the t^0 coefficient for t-adic ones. Throws not_a_unit.
Rational residue_of(const FieldElement& x);

// All n-th roots of a monomial representable in the finite-Puiseux model.
std::vector<FieldElement> binomial_roots(const FieldElement& c, unsigned long n);

} // namespace kxval
