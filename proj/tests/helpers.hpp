#pragma once

#include "a1deg/parse.hpp"

#include <string>

namespace th {

inline a1deg::Field Q() { return a1deg::Field::rationals(); }

inline a1deg::FieldElement fe(long n, long d = 1)
{
    return a1deg::FieldElement::from_rational(Q(), a1deg::BigRat(n, d));
}

inline a1deg::FieldElement el(const a1deg::Field& k, long n)
{
    return a1deg::FieldElement::from_integer(k, n);
}

inline a1deg::Polynomial poly(const std::string& s,
                              const a1deg::Field& k = Q())
{
    return a1deg::parse_rational_function(s, k).numerator;
}

inline a1deg::RationalFunction rf(const std::string& s,
                                  const a1deg::Field& k = Q())
{
    a1deg::ParsedFunction p = a1deg::parse_rational_function(s, k);
    return a1deg::RationalFunction(p.numerator, p.denominator);
}

} // namespace th
