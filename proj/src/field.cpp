#include "kxval/field.hpp"

#include "kxval/error.hpp"

#include <utility>

namespace kxval {

namespace {

bool probably_prime(const Int& p) {
  if (p < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (p == small) return true;
    if (p % small == 0) return false;
  }
  // Miller-Rabin; this base set is exact below 3.3e24.
  Int d = p - 1;
  unsigned long r = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++r;
  }
  for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    Int x = powm(Int(base), d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (unsigned long i = 1; i < r; ++i) {
      x = x * x % p;
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_same_context(const FieldElement& x, const FieldElement& y) {
  if (!(x.context() == y.context()))
    fail(errc::context_mismatch, "operands built under different contexts");
}

GroupValue base_value(const FieldContext& ctx, const Rational& v) {
  if (ctx.group_dim == 1) return GroupValue::scalar(v);
  std::vector<Rational> coords(static_cast<std::size_t>(ctx.group_dim),
                               Rational(0));
  coords.back() = v;
  return GroupValue::vec(std::move(coords));
}

long p_exponent(Int v, const Int& p) {
  long c = 0;
  if (v < 0) v = -v;
  while (v % p == 0) {
    v /= p;
    ++c;
  }
  return c;
}

// q^e form; needs_product tells whether a '*' joined part follows.
std::string magnitude_text(const Rational& qabs, const Rational& e,
                           bool has_tail, const std::string& tail) {
  std::string out;
  const bool has_t = e != 0;
  const bool show_q = qabs != 1 || (!has_t && !has_tail);
  if (show_q) {
    std::string qs = rational_str(qabs);
    if (denominator(qabs) != 1 && (has_t || has_tail)) qs = "(" + qs + ")";
    out += qs;
  }
  if (has_t) {
    if (!out.empty()) out += "*";
    if (e == 1) {
      out += "t";
    } else if (denominator(e) == 1) {
      out += "t^" + rational_str(e);
    } else {
      out += "t^(" + rational_str(e) + ")";
    }
  }
  if (has_tail) {
    if (!out.empty()) out += "*";
    out += tail;
  }
  return out;
}

} // namespace

FieldContext FieldContext::padic(const Int& p, int group_dim) {
  if (!probably_prime(p))
    fail(errc::precondition_violated, "p-adic modulus must be prime, got " + p.str());
  if (group_dim < 1)
    fail(errc::dimension_mismatch, "group dimension must be >= 1");
  FieldContext ctx;
  ctx.kind = Kind::padic;
  ctx.prime = p;
  ctx.group_dim = group_dim;
  return ctx;
}

FieldContext FieldContext::tadic(int group_dim) {
  if (group_dim < 1)
    fail(errc::dimension_mismatch, "group dimension must be >= 1");
  FieldContext ctx;
  ctx.kind = Kind::tadic;
  ctx.group_dim = group_dim;
  return ctx;
}

std::string FieldContext::str() const {
  return kind == Kind::padic ? "padic:" + prime.str() : "tadic:QQ";
}

FieldElement FieldElement::zero(const FieldContext& ctx) {
  FieldElement x;
  x.ctx_ = ctx;
  return x;
}

FieldElement FieldElement::one(const FieldContext& ctx) {
  return from_rational(ctx, Rational(1));
}

FieldElement FieldElement::from_rational(const FieldContext& ctx, const Rational& q) {
  FieldElement x;
  x.ctx_ = ctx;
  if (q == 0) return x;
  if (ctx.kind == FieldContext::Kind::padic)
    x.rat_ = q;
  else
    x.terms_.emplace(Rational(0), q);
  return x;
}

FieldElement FieldElement::monomial(const FieldContext& ctx, const Rational& coeff,
                                    const Rational& exponent) {
  if (ctx.kind != FieldContext::Kind::tadic) {
    if (exponent != 0)
      fail(errc::context_mismatch, "t powers only exist in the t-adic context");
    return from_rational(ctx, coeff);
  }
  FieldElement x;
  x.ctx_ = ctx;
  if (coeff != 0) x.terms_.emplace(exponent, coeff);
  return x;
}

FieldElement FieldElement::from_terms(const FieldContext& ctx,
                                      std::map<Rational, Rational> terms) {
  if (ctx.kind != FieldContext::Kind::tadic)
    fail(errc::context_mismatch, "term maps only exist in the t-adic context");
  FieldElement x;
  x.ctx_ = ctx;
  for (auto& term : terms)
    if (term.second != 0) x.terms_.emplace(term.first, term.second);
  return x;
}

bool FieldElement::is_zero() const {
  return ctx_.kind == FieldContext::Kind::padic ? rat_ == 0 : terms_.empty();
}

bool FieldElement::is_rational_constant() const {
  if (ctx_.kind == FieldContext::Kind::padic) return true;
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 0;
}

Rational FieldElement::rational_value() const {
  if (ctx_.kind == FieldContext::Kind::padic) return rat_;
  if (terms_.empty()) return Rational(0);
  if (!is_rational_constant())
    fail(errc::not_representable, "element depends on t: " + str());
  return terms_.begin()->second;
}

const std::map<Rational, Rational>& FieldElement::terms() const {
  if (ctx_.kind != FieldContext::Kind::tadic)
    fail(errc::context_mismatch, "p-adic elements carry no term map");
  return terms_;
}

bool FieldElement::in_base_ring() const {
  if (ctx_.kind == FieldContext::Kind::padic) return true;
  for (const auto& term : terms_)
    if (denominator(term.first) != 1) return false;
  return true;
}

std::string FieldElement::str() const {
  if (is_zero()) return "0";
  if (ctx_.kind == FieldContext::Kind::padic) return rational_str(rat_);
  std::string out;
  for (const auto& [e, q] : terms_) {
    const bool negative = q < 0;
    Rational qabs = negative ? Rational(-q) : q;
    std::string mag = magnitude_text(qabs, e, false, "");
    if (out.empty())
      out = negative ? "-" + mag : mag;
    else
      out += (negative ? " - " : " + ") + mag;
  }
  return out;
}

FieldElement FieldElement::pow(unsigned long n) const {
  FieldElement acc = one(ctx_);
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1UL;
  }
  return acc;
}

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_context(x, y);
  FieldElement r = x;
  if (x.ctx_.kind == FieldContext::Kind::padic) {
    r.rat_ += y.rat_;
    return r;
  }
  for (const auto& [e, q] : y.terms_) {
    auto it = r.terms_.find(e);
    if (it == r.terms_.end()) {
      r.terms_.emplace(e, q);
    } else {
      it->second += q;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (ctx_.kind == FieldContext::Kind::padic) {
    r.rat_ = -r.rat_;
    return r;
  }
  for (auto& term : r.terms_) term.second = -term.second;
  return r;
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
  return x + (-y);
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_context(x, y);
  FieldElement r = FieldElement::zero(x.ctx_);
  if (x.ctx_.kind == FieldContext::Kind::padic) {
    r.rat_ = x.rat_ * y.rat_;
    return r;
  }
  for (const auto& [ex, qx] : x.terms_) {
    for (const auto& [ey, qy] : y.terms_) {
      Rational e = ex + ey;
      Rational q = qx * qy;
      auto it = r.terms_.find(e);
      if (it == r.terms_.end()) {
        r.terms_.emplace(e, q);
      } else {
        it->second += q;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
  require_same_context(x, y);
  if (y.is_zero()) fail(errc::division_by_zero, "division by zero");
  if (x.ctx_.kind == FieldContext::Kind::padic) {
    FieldElement r = x;
    r.rat_ /= y.rat_;
    return r;
  }
  if (x.is_zero()) return x;

  // Normalize both operands to least exponent 0, clear the exponent
  // denominators, and divide in the polynomial ring; a nonzero remainder
  // means the true quotient is an infinite series.
  const Rational ex = x.terms_.begin()->first;
  const Rational ey = y.terms_.begin()->first;
  Int den_lcm = 1;
  for (const auto& [e, q] : x.terms_) {
    (void)q;
    den_lcm = lcm(den_lcm, denominator(Rational(e - ex)));
  }
  for (const auto& [e, q] : y.terms_) {
    (void)q;
    den_lcm = lcm(den_lcm, denominator(Rational(e - ey)));
  }
  auto as_poly = [&](const std::map<Rational, Rational>& terms, const Rational& base) {
    std::vector<Rational> coeffs;
    for (const auto& [e, q] : terms) {
      Rational idx = (e - base) * Rational(den_lcm);
      unsigned long i = static_cast<unsigned long>(numerator(idx));
      if (coeffs.size() <= i) coeffs.resize(i + 1, Rational(0));
      coeffs[i] = q;
    }
    return coeffs;
  };
  std::vector<Rational> num = as_poly(x.terms_, ex);
  std::vector<Rational> den = as_poly(y.terms_, ey);

  std::vector<Rational> quot(num.size(), Rational(0));
  while (num.size() >= den.size()) {
    while (!num.empty() && num.back() == 0) num.pop_back();
    if (num.size() < den.size()) break;
    Rational factor = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i)
      num[shift + i] -= factor * den[i];
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (!num.empty())
    fail(errc::nonterminating_inverse,
         "quotient " + x.str() + " / (" + y.str() + ") is an infinite series");

  FieldElement r = FieldElement::zero(x.ctx_);
  for (std::size_t i = 0; i < quot.size(); ++i) {
    if (quot[i] == 0) continue;
    Rational e = ex - ey + Rational(i) / Rational(den_lcm);
    r.terms_.emplace(e, quot[i]);
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& other) const {
  if (!(ctx_ == other.ctx_)) return false;
  return ctx_.kind == FieldContext::Kind::padic ? rat_ == other.rat_
                                                : terms_ == other.terms_;
}

GroupValue valuation_of(const FieldElement& x) {
  const FieldContext& ctx = x.context();
  if (x.is_zero()) return GroupValue::infinity(ctx.group_dim);
  if (ctx.kind == FieldContext::Kind::padic) {
    Rational q = x.rational_value();
    long v = p_exponent(numerator(q), ctx.prime) -
             p_exponent(denominator(q), ctx.prime);
    return base_value(ctx, Rational(v));
  }
  return base_value(ctx, x.terms().begin()->first);
}

Rational residue_of(const FieldElement& x) {
  if (valuation_of(x) != GroupValue::zero(x.context().group_dim))
    fail(errc::not_a_unit, "residue needs a unit, got " + x.str());
  const FieldContext& ctx = x.context();
  if (ctx.kind == FieldContext::Kind::tadic) return x.terms().begin()->second;
  const Rational q = x.rational_value();
  const Int& p = ctx.prime;
  Int num = numerator(q) % p;
  if (num < 0) num += p;
  Int den = denominator(q) % p;
  // den is a unit mod p since the valuation is 0.
  Int inv, g, s;
  // Extended gcd for den^{-1} mod p.
  Int a = den, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    Int quot = a / b;
    Int tmp = a - quot * b;
    a = b;
    b = tmp;
    tmp = x0 - quot * x1;
    x0 = x1;
    x1 = tmp;
  }
  g = a;
  s = x0;
  (void)g;
  inv = s % p;
  if (inv < 0) inv += p;
  Int res = num * inv % p;
  return Rational(res);
}

std::vector<FieldElement> binomial_roots(const FieldElement& c, unsigned long n) {
  const FieldContext& ctx = c.context();
  if (ctx.kind != FieldContext::Kind::tadic)
    fail(errc::context_mismatch, "root extraction runs in the t-adic model only");
  if (n == 0) fail(errc::precondition_violated, "root order must be positive");
  if (c.is_zero()) return {c};
  if (c.terms().size() != 1)
    fail(errc::not_representable, "only monomials have model roots: " + c.str());
  const auto& [e, q] = *c.terms().begin();
  auto root = exact_nth_root(q, n);
  if (!root)
    fail(errc::not_representable,
         "coefficient " + rational_str(q) + " has no exact rational root of order " +
             std::to_string(n));
  Rational re = e / Rational(n);
  std::vector<FieldElement> out;
  out.push_back(FieldElement::monomial(ctx, *root, re));
  if (n % 2 == 0) out.push_back(FieldElement::monomial(ctx, -*root, re));
  return out;
}

} // namespace kxval
