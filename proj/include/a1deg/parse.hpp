#pragma once

#include "a1deg/poly.hpp"

#include <string>
#include <vector>

namespace a1deg {

struct ParsedFunction {
    Polynomial numerator;
    Polynomial denominator;
};

// Grammar: integer and rational literals p/q, the variable x, operators
// + - * ^ (nonnegative integer exponents), parentheses, and one optional
// '/' at the top level separating numerator from denominator.  A '/'
// directly between two integers binds as a rational literal (longest
// match), except right after '^' where the integer is an exponent, so
// "x^2/3" splits as (x^2)/3 while "x^2 - 1/2" keeps the literal 1/2.
// '/' anywhere inside parentheses is rejected.  Positions in errors are
// 0-based character offsets.
ParsedFunction parse_rational_function(const std::string& text, const Field& k);

// A constant expression (no x), e.g. "-3", "5/7", "(1+2)*4".
FieldElement parse_field_element(const std::string& text, const Field& k);

// Comma-separated "root:multiplicity" pairs; the multiplicity defaults
// to 1 when omitted.  Roots may repeat here; consumers that need
// distinctness reject duplicates themselves.
std::vector<RootDatum> parse_roots_list(const std::string& text, const Field& k);

} // namespace a1deg
