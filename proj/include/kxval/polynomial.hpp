#pragma once

#include "kxval/field.hpp"

#include <vector>

namespace kxval {

// Dense univariate polynomial in X over FieldElement. Trailing zero
// coefficients are trimmed; the zero polynomial has an empty vector.
class Polynomial {
public:
  explicit Polynomial(FieldContext ctx);
  Polynomial(FieldContext ctx, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial variable(const FieldContext& ctx); // X
  static Polynomial monomial(const FieldContext& ctx, const FieldElement& c,
                             unsigned long k);

  const FieldContext& context() const { return ctx_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of X^i; zero beyond the degree.
  FieldElement coeff(unsigned long i) const;
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  const FieldElement& leading() const; // nonzero polynomial only
  bool is_monic() const;
  bool in_base_ring() const;

  FieldElement evaluate(const FieldElement& a) const;
  Polynomial pow(unsigned long n) const;

  std::string str() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  Polynomial operator-() const;
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

private:
  void trim();

  FieldContext ctx_;
  std::vector<FieldElement> coeffs_;
};

struct DivisionResult {
  Polynomial quotient;
  Polynomial remainder;
};

// f = q*g + r with deg r < deg g, exact. Throws division_by_zero for g = 0.
DivisionResult euclid_divide(const Polynomial& f, const Polynomial& g);

// Parts (f_0, ..., f_n) of f = sum f_i key^i with deg f_i < deg key, by
// iterated euclidean division. key must be monic of degree >= 1.
std::vector<Polynomial> q_expansion(const Polynomial& f, const Polynomial& key);

// Hasse-Schmidt derivative: X^n -> C(n,i) X^(n-i). Binomials are computed as
// exact integers before entering the coefficient field.
Polynomial hasse_derivative(const Polynomial& f, unsigned long i);

// Coefficients of f around a: entry i equals hasse_derivative(f, i) at a, so
// f = sum_i taylor[i] (X-a)^i exactly.
std::vector<FieldElement> taylor_at(const Polynomial& f, const FieldElement& a);

} // namespace kxval
