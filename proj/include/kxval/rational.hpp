#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace kxval {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rational_str(const Rational& q);

// Accepts optional sign, digits, optional "/digits"; anything else throws parse_error.
Rational parse_rational(const std::string& text);

Int binomial(unsigned long n, unsigned long k);

// Exact n-th root when one exists in the rationals (principal root for even n).
std::optional<Rational> exact_nth_root(const Rational& q, unsigned long n);

// Nearest integer, halves rounding up. Used only for rendering grids.
Int nearest_int(const Rational& q);

} // namespace kxval
