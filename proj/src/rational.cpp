#include "kxval/rational.hpp"

#include "kxval/error.hpp"

#include <cctype>

namespace kxval {

std::string rational_str(const Rational& q) { return q.str(); }

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto digits = [&](const char* what) {
    skip_ws();
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start)
      fail(errc::parse_error,
           std::string("expected ") + what + " at offset " + std::to_string(start) +
               " in '" + text + "'");
    return text.substr(start, i - start);
  };

  skip_ws();
  bool negative = false;
  if (i < n && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  Int num(digits("digits"));
  Int den(1);
  skip_ws();
  if (i < n && text[i] == '/') {
    ++i;
    den = Int(digits("denominator digits"));
    if (den == 0)
      fail(errc::parse_error, "zero denominator in '" + text + "'");
  }
  skip_ws();
  if (i != n)
    fail(errc::parse_error, "trailing input at offset " + std::to_string(i) +
                                " in '" + text + "'");
  Rational q(num, den);
  return negative ? Rational(-q) : q;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned long i = 1; i <= k; ++i) {
    r *= Int(n - k + i);
    r /= Int(i); // exact at each step: product of i consecutive integers
  }
  return r;
}

namespace {

// Exact integer n-th root of v >= 0, if one exists.
std::optional<Int> int_nth_root(const Int& v, unsigned long n) {
  if (v == 0 || v == 1) return v;
  Int lo = 1;
  Int hi = Int(1) << (msb(v) / n + 1);
  while (lo <= hi) {
    Int mid = (lo + hi) / 2;
    Int p = pow(mid, static_cast<unsigned>(n));
    if (p == v) return mid;
    if (p < v)
      lo = mid + 1;
    else
      hi = mid - 1;
  }
  return std::nullopt;
}

} // namespace

std::optional<Rational> exact_nth_root(const Rational& q, unsigned long n) {
  if (n == 0) return std::nullopt;
  if (n == 1) return q;
  if (q == 0) return Rational(0);
  const bool negative = q < 0;
  if (negative && n % 2 == 0) return std::nullopt;
  Int num = numerator(q);
  if (num < 0) num = -num;
  auto rn = int_nth_root(num, n);
  if (!rn) return std::nullopt;
  auto rd = int_nth_root(denominator(q), n);
  if (!rd) return std::nullopt;
  Rational r(*rn, *rd);
  return negative ? Rational(-r) : r;
}

Int nearest_int(const Rational& q) {
  Rational shifted = q + Rational(1, 2);
  Int num = numerator(shifted);
  Int den = denominator(shifted);
  Int d = num / den;
  if (num < 0 && d * den != num) d -= 1; // floor for negatives
  return d;
}

} // namespace kxval
