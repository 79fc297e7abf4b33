#pragma once

#include "kxval/valuation.hpp"

#include <string>
#include <vector>

namespace kxval {

// All parsers throw error(errc::parse_error) with the offending offset in the
// message.

// "padic:<prime>" or "tadic:QQ".
FieldContext parse_context(const std::string& text);

// "inf", "p/q", or "(a1,...,an)"; the component count must match dim.
GroupValue parse_group_value(const std::string& text, int dim);

// Element syntax: "3/4", "t^(1/2) + 2*t^3 - t^-1", "0".
FieldElement parse_element(const std::string& text, const FieldContext& ctx);

// Polynomial syntax in X: "X^2 - t", "(1/2)*X^3 + t^(1/2)*X".
Polynomial parse_polynomial(const std::string& text, const FieldContext& ctx);

// "gauss:1/2", "pair:t^(1/2):3/2", "trunc[X^2-t]:pair:t^(1/2):3/2"; nested
// truncations repeat the prefix.
PolyValuation parse_valuation(const std::string& text, const FieldContext& ctx);

// Comma-separated elements.
std::vector<FieldElement> parse_element_list(const std::string& text,
                                             const FieldContext& ctx);

} // namespace kxval
