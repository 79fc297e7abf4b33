#include "kxval/polynomial.hpp"

#include "kxval/error.hpp"

#include <utility>

namespace kxval {

namespace {

void require_same_context(const Polynomial& f, const Polynomial& g) {
  if (!(f.context() == g.context()))
    fail(errc::context_mismatch, "polynomials built under different contexts");
}

// Signed monomial token "coeff * t^e * X^k" without the sign.
std::string term_text(const Rational& qabs, const Rational& e, unsigned long k) {
  std::string xpart;
  if (k == 1)
    xpart = "X";
  else if (k > 1)
    xpart = "X^" + std::to_string(k);

  std::string out;
  const bool has_t = e != 0;
  const bool has_x = !xpart.empty();
  const bool show_q = qabs != 1 || (!has_t && !has_x);
  if (show_q) {
    std::string qs = rational_str(qabs);
    if (denominator(qabs) != 1 && (has_t || has_x)) qs = "(" + qs + ")";
    out += qs;
  }
  if (has_t) {
    if (!out.empty()) out += "*";
    if (e == 1)
      out += "t";
    else if (denominator(e) == 1)
      out += "t^" + rational_str(e);
    else
      out += "t^(" + rational_str(e) + ")";
  }
  if (has_x) {
    if (!out.empty()) out += "*";
    out += xpart;
  }
  return out;
}

} // namespace

Polynomial::Polynomial(FieldContext ctx) : ctx_(std::move(ctx)) {}

Polynomial::Polynomial(FieldContext ctx, std::vector<FieldElement> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!(c.context() == ctx_))
      fail(errc::context_mismatch, "coefficient context differs from the polynomial");
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  return Polynomial(c.context(), {c});
}

Polynomial Polynomial::variable(const FieldContext& ctx) {
  return Polynomial(ctx, {FieldElement::zero(ctx), FieldElement::one(ctx)});
}

Polynomial Polynomial::monomial(const FieldContext& ctx, const FieldElement& c,
                                unsigned long k) {
  std::vector<FieldElement> coeffs(k + 1, FieldElement::zero(ctx));
  coeffs[k] = c;
  return Polynomial(ctx, std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(unsigned long i) const {
  if (i >= coeffs_.size()) return FieldElement::zero(ctx_);
  return coeffs_[i];
}

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty())
    fail(errc::zero_polynomial, "the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Polynomial::is_monic() const {
  return !coeffs_.empty() && leading() == FieldElement::one(ctx_);
}

bool Polynomial::in_base_ring() const {
  for (const auto& c : coeffs_)
    if (!c.in_base_ring()) return false;
  return true;
}

FieldElement Polynomial::evaluate(const FieldElement& a) const {
  if (!(a.context() == ctx_))
    fail(errc::context_mismatch, "evaluation point context differs");
  FieldElement acc = FieldElement::zero(ctx_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
  return acc;
}

Polynomial Polynomial::pow(unsigned long n) const {
  Polynomial acc = Polynomial::constant(FieldElement::one(ctx_));
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1UL) acc = acc * base;
    base = base * base;
    n >>= 1UL;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    // One token per field-element term, highest X power first, t-exponents
    // ascending inside a coefficient.
    std::vector<std::pair<Rational, Rational>> parts; // (exponent, coefficient)
    if (ctx_.kind == FieldContext::Kind::padic) {
      parts.emplace_back(Rational(0), c.rational_value());
    } else {
      for (const auto& [e, q] : c.terms()) parts.emplace_back(e, q);
    }
    for (const auto& [e, q] : parts) {
      const bool negative = q < 0;
      Rational qabs = negative ? Rational(-q) : q;
      std::string mag = term_text(qabs, e, k);
      if (out.empty())
        out = negative ? "-" + mag : mag;
      else
        out += (negative ? " - " : " + ") + mag;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  std::vector<FieldElement> coeffs(std::max(f.coeffs().size(), g.coeffs().size()),
                                   FieldElement::zero(f.context()));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = f.coeff(i) + g.coeff(i);
  return Polynomial(f.context(), std::move(coeffs));
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> coeffs = coeffs_;
  for (auto& c : coeffs) c = -c;
  return Polynomial(ctx_, std::move(coeffs));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.context());
  std::vector<FieldElement> coeffs(f.coeffs().size() + g.coeffs().size() - 1,
                                   FieldElement::zero(f.context()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j)
      coeffs[i + j] = coeffs[i + j] + f.coeffs()[i] * g.coeffs()[j];
  }
  return Polynomial(f.context(), std::move(coeffs));
}

bool Polynomial::operator==(const Polynomial& other) const {
  return ctx_ == other.ctx_ && coeffs_ == other.coeffs_;
}

DivisionResult euclid_divide(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (g.is_zero()) fail(errc::division_by_zero, "division by the zero polynomial");
  const FieldContext& ctx = f.context();
  if (f.degree() < g.degree()) return {Polynomial(ctx), f};

  std::vector<FieldElement> rem = f.coeffs();
  const long dq = f.degree() - g.degree();
  std::vector<FieldElement> quot(static_cast<std::size_t>(dq) + 1,
                                 FieldElement::zero(ctx));
  const auto& div = g.coeffs();
  for (long k = dq; k >= 0; --k) {
    const std::size_t lead = static_cast<std::size_t>(k) + div.size() - 1;
    if (rem[lead].is_zero()) continue;
    FieldElement factor = rem[lead] / g.leading();
    quot[static_cast<std::size_t>(k)] = factor;
    for (std::size_t i = 0; i < div.size(); ++i)
      rem[static_cast<std::size_t>(k) + i] =
          rem[static_cast<std::size_t>(k) + i] - factor * div[i];
  }
  rem.resize(div.size() - 1, FieldElement::zero(ctx));
  return {Polynomial(ctx, std::move(quot)), Polynomial(ctx, std::move(rem))};
}

std::vector<Polynomial> q_expansion(const Polynomial& f, const Polynomial& key) {
  if (key.degree() < 1) {
    if (key.is_zero())
      fail(errc::division_by_zero, "expansion by the zero polynomial");
    fail(errc::degree_zero_key, "expansion key must have degree >= 1");
  }
  if (!key.is_monic())
    fail(errc::non_monic, "expansion key must be monic: " + key.str());
  std::vector<Polynomial> parts;
  Polynomial rest = f;
  for (;;) {
    if (rest.degree() < key.degree()) {
      parts.push_back(rest);
      break;
    }
    DivisionResult step = euclid_divide(rest, key);
    parts.push_back(step.remainder);
    rest = step.quotient;
  }
  while (parts.size() > 1 && parts.back().is_zero()) parts.pop_back();
  return parts;
}

Polynomial hasse_derivative(const Polynomial& f, unsigned long i) {
  const FieldContext& ctx = f.context();
  if (i == 0) return f;
  if (f.degree() < static_cast<long>(i)) return Polynomial(ctx);
  std::vector<FieldElement> coeffs;
  coeffs.reserve(f.coeffs().size() - i);
  for (std::size_t n = i; n < f.coeffs().size(); ++n) {
    FieldElement b = FieldElement::from_rational(ctx, Rational(binomial(n, i)));
    coeffs.push_back(b * f.coeffs()[n]);
  }
  return Polynomial(ctx, std::move(coeffs));
}

std::vector<FieldElement> taylor_at(const Polynomial& f, const FieldElement& a) {
  if (!(a.context() == f.context()))
    fail(errc::context_mismatch, "expansion point context differs");
  std::vector<FieldElement> out;
  const long deg = f.degree() < 0 ? 0 : f.degree();
  out.reserve(static_cast<std::size_t>(deg) + 1);
  for (long i = 0; i <= deg; ++i)
    out.push_back(hasse_derivative(f, static_cast<unsigned long>(i)).evaluate(a));
  return out;
}

} // namespace kxval
