#include "kxval/parse.hpp"

#include "kxval/error.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

namespace kxval {

namespace {

[[noreturn]] void bad(std::size_t offset, const std::string& what) {
  fail(errc::parse_error, "offset " + std::to_string(offset) + ": " + what);
}

std::string trimmed(const std::string& text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  return text.substr(lo, hi - lo);
}

struct Token {
  enum Kind { number, tvar, xvar, plus, minus, star, slash, caret, lparen, rparen, finish };
  Kind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      tokens.push_back(Token{Token::number, text.substr(i, j - i), i});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case 't': kind = Token::tvar; break;
      case 'X': kind = Token::xvar; break;
      case '+': kind = Token::plus; break;
      case '-': kind = Token::minus; break;
      case '*': kind = Token::star; break;
      case '/': kind = Token::slash; break;
      case '^': kind = Token::caret; break;
      case '(': kind = Token::lparen; break;
      case ')': kind = Token::rparen; break;
      default: bad(i, std::string("unexpected character '") + c + "'");
    }
    tokens.push_back(Token{kind, std::string(1, c), i});
    ++i;
  }
  tokens.push_back(Token{Token::finish, "", text.size()});
  return tokens;
}

// Recursive descent over +,- then *,/ then ^, with parenthesized
// subexpressions; elements are the constant polynomials of the same grammar.
class PolyParser {
public:
  PolyParser(const std::string& text, const FieldContext& ctx)
      : ctx_(ctx), tokens_(lex(text)) {}

  Polynomial run() {
    if (peek().kind == Token::finish) bad(0, "empty input");
    Polynomial p = parse_expr();
    if (peek().kind != Token::finish)
      bad(peek().offset, "unexpected '" + peek().text + "'");
    return p;
  }

private:
  enum class AtomKind { plain_t, plain_x, other };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }

  bool accept(Token::Kind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Polynomial parse_expr() {
    bool negate = false;
    while (true) {
      if (accept(Token::minus)) negate = !negate;
      else if (accept(Token::plus)) continue;
      else break;
    }
    Polynomial sum = parse_term();
    if (negate) sum = Polynomial::constant(-FieldElement::one(ctx_)) * sum;
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      const bool subtract = take().kind == Token::minus;
      Polynomial rhs = parse_term();
      sum = subtract ? sum - rhs : sum + rhs;
    }
    return sum;
  }

  Polynomial parse_term() {
    Polynomial product = parse_factor();
    while (peek().kind == Token::star || peek().kind == Token::slash) {
      const Token op = take();
      Polynomial rhs = parse_factor();
      if (op.kind == Token::star) {
        product = product * rhs;
      } else {
        if (rhs.degree() > 0)
          bad(op.offset, "division needs a constant divisor");
        FieldElement divisor =
            rhs.is_zero() ? FieldElement::zero(ctx_) : rhs.coeff(0);
        FieldElement inverse = FieldElement::one(ctx_) / divisor;
        product = product * Polynomial::constant(inverse);
      }
    }
    return product;
  }

  Polynomial parse_factor() {
    auto [value, kind] = parse_atom();
    if (!accept(Token::caret)) return value;
    const std::size_t at = peek().offset;
    const Rational e = parse_exponent();
    switch (kind) {
      case AtomKind::plain_t:
        return Polynomial::constant(FieldElement::monomial(ctx_, 1, e));
      case AtomKind::plain_x: {
        Rational er = e;
        if (denominator(er) != 1 || e < 0)
          bad(at, "X exponents must be nonnegative integers");
        Int n = numerator(er);
        if (n > 1000000) bad(at, "exponent too large");
        return Polynomial::monomial(ctx_, FieldElement::one(ctx_),
                                    static_cast<unsigned long>(n));
      }
      case AtomKind::other: {
        Rational er = e;
        if (denominator(er) != 1)
          bad(at, "fractional exponents only apply to t");
        Int n = numerator(er);
        Int mag = n < 0 ? Int(-n) : n;
        if (mag > 1000000) bad(at, "exponent too large");
        if (n >= 0) return value.pow(static_cast<unsigned long>(mag));
        if (value.degree() > 0)
          bad(at, "negative exponents need a constant base");
        FieldElement base =
            value.is_zero() ? FieldElement::zero(ctx_) : value.coeff(0);
        FieldElement inverse = FieldElement::one(ctx_) / base;
        return Polynomial::constant(inverse.pow(static_cast<unsigned long>(mag)));
      }
    }
    bad(at, "unreachable exponent state");
  }

  std::pair<Polynomial, AtomKind> parse_atom() {
    const Token tok = take();
    switch (tok.kind) {
      case Token::number:
        return {Polynomial::constant(
                    FieldElement::from_rational(ctx_, Rational(tok.text))),
                AtomKind::other};
      case Token::tvar:
        if (ctx_.kind != FieldContext::Kind::tadic)
          bad(tok.offset, "t is not available in this context");
        return {Polynomial::constant(FieldElement::monomial(ctx_, 1, 1)),
                AtomKind::plain_t};
      case Token::xvar:
        return {Polynomial::variable(ctx_), AtomKind::plain_x};
      case Token::minus: {
        auto [inner, kind] = parse_atom();
        (void)kind;
        return {Polynomial::constant(-FieldElement::one(ctx_)) * inner,
                AtomKind::other};
      }
      case Token::lparen: {
        Polynomial inner = parse_expr();
        if (!accept(Token::rparen)) bad(peek().offset, "expected ')'");
        return {inner, AtomKind::other};
      }
      default:
        bad(tok.offset, "unexpected '" + tok.text + "'");
    }
  }

  // Integer with optional sign, or a parenthesized rational like (1/2).
  Rational parse_exponent() {
    bool negate = false;
    bool parens = false;
    if (accept(Token::lparen)) {
      parens = true;
      if (accept(Token::minus)) negate = true;
    } else if (accept(Token::minus)) {
      negate = true;
    }
    if (peek().kind != Token::number) bad(peek().offset, "expected an exponent");
    Rational value(take().text);
    if (parens && accept(Token::slash)) {
      if (peek().kind != Token::number)
        bad(peek().offset, "expected a denominator");
      Rational den(take().text);
      if (den == 0) bad(peek().offset, "zero denominator");
      value /= den;
    }
    if (parens && !accept(Token::rparen)) bad(peek().offset, "expected ')'");
    return negate ? Rational(-value) : value;
  }

  FieldContext ctx_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

} // namespace

FieldContext parse_context(const std::string& raw) {
  const std::string text = trimmed(raw);
  if (text == "tadic:QQ") return FieldContext::tadic();
  const std::string prefix = "padic:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string digits = text.substr(prefix.size());
    if (digits.empty()) bad(prefix.size(), "expected a prime");
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i])))
        bad(prefix.size() + i, "expected a prime");
    }
    return FieldContext::padic(Int(digits));
  }
  bad(0, "expected 'padic:<prime>' or 'tadic:QQ'");
}

GroupValue parse_group_value(const std::string& raw, int dim) {
  const std::string text = trimmed(raw);
  if (text.empty()) bad(0, "empty value");
  if (text == "inf") return GroupValue::infinity(dim);
  if (text.front() == '(') {
    if (text.back() != ')') bad(text.size(), "expected ')'");
    std::vector<Rational> coords;
    std::size_t start = 1;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] == ',' || i + 1 == text.size()) {
        const std::string piece = trimmed(text.substr(start, i - start));
        if (piece.empty()) bad(start, "empty component");
        coords.push_back(parse_rational(piece));
        start = i + 1;
      }
    }
    if (coords.size() != static_cast<std::size_t>(dim))
      bad(0, "expected " + std::to_string(dim) + " components, got " +
                 std::to_string(coords.size()));
    return GroupValue::vec(std::move(coords));
  }
  if (dim != 1)
    bad(0, "expected " + std::to_string(dim) + " components in parentheses");
  return GroupValue::scalar(parse_rational(text));
}

FieldElement parse_element(const std::string& text, const FieldContext& ctx) {
  Polynomial p = PolyParser(text, ctx).run();
  if (p.degree() > 0) bad(0, "X is not allowed in a field element");
  return p.is_zero() ? FieldElement::zero(ctx) : p.coeff(0);
}

Polynomial parse_polynomial(const std::string& text, const FieldContext& ctx) {
  return PolyParser(text, ctx).run();
}

PolyValuation parse_valuation(const std::string& raw, const FieldContext& ctx) {
  const std::string text = trimmed(raw);
  if (text.rfind("gauss:", 0) == 0) {
    return PolyValuation::gauss(
        ctx, parse_group_value(text.substr(6), ctx.group_dim));
  }
  if (text.rfind("pair:", 0) == 0) {
    const std::string rest = text.substr(5);
    const std::size_t cut = rest.rfind(':');
    if (cut == std::string::npos)
      bad(text.size(), "expected 'pair:<center>:<delta>'");
    FieldElement center = parse_element(rest.substr(0, cut), ctx);
    GroupValue delta = parse_group_value(rest.substr(cut + 1), ctx.group_dim);
    return PolyValuation::pair(center, delta);
  }
  if (text.rfind("trunc[", 0) == 0) {
    const std::size_t close = text.find(']');
    if (close == std::string::npos) bad(text.size(), "expected ']'");
    Polynomial key = parse_polynomial(text.substr(6, close - 6), ctx);
    if (close + 1 >= text.size() || text[close + 1] != ':')
      bad(close + 1, "expected ':' after the key");
    PolyValuation inner = parse_valuation(text.substr(close + 2), ctx);
    return PolyValuation::truncation(key, inner);
  }
  bad(0, "expected 'gauss:', 'pair:', or 'trunc[...]:'");
}

std::vector<FieldElement> parse_element_list(const std::string& raw,
                                             const FieldContext& ctx) {
  const std::string text = trimmed(raw);
  std::vector<FieldElement> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      const std::string piece = text.substr(start, i - start);
      if (trimmed(piece).empty()) bad(start, "empty list item");
      out.push_back(parse_element(piece, ctx));
      start = i + 1;
    }
  }
  return out;
}

} // namespace kxval
