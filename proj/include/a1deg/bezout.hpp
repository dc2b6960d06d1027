#pragma once

#include "a1deg/gw.hpp"
#include "a1deg/poly.hpp"

namespace a1deg {

// Coefficient matrix of (f(X)g(Y) - f(Y)g(X)) / (X - Y) in the basis
// {X^i Y^j}, assembled column-by-column with synthetic division.  The
// division is exact by antisymmetry; a nonzero remainder is a bug.
// Works on the raw pair, so scaling both arguments by c scales the
// result by c^2.
Mat bezoutian_coefficients(const Polynomial& f, const Polynomial& g);

// The Bezoutian of the monic-normalized pair of F, as a Gram matrix with
// its exact determinant attached.
GramMatrix bezoutian_matrix(const RationalFunction& F);

// The unstable degree of F: the Bezoutian form together with its exact
// determinant as the unit.
UnstableClass unstable_degree(const RationalFunction& F);

// For a polynomial map (constant denominator) the Bezoutian is
// anti-triangular: entries below the anti-diagonal vanish and the
// anti-diagonal is the normalized denominator constant (1/lc(f) when the
// denominator is 1).  Returns whether the computed matrix has that shape.
// Non-polynomial maps are rejected.
bool polynomial_degree_shape_check(const RationalFunction& F);

} // namespace a1deg
