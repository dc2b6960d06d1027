#pragma once

#include "a1deg/gw.hpp"
#include "a1deg/poly.hpp"

namespace a1deg {

// Everything computed for one rational root: the root itself, its
// multiplicity m, the m x m anti-triangular matrix of principal-part
// coefficients, and the unstable class that matrix presents.
struct LocalDegreeReport {
    FieldElement root;
    int multiplicity;
    GramMatrix matrix;
    UnstableClass cls;
};

// The local matrix at a root r of multiplicity m: entry (i, j) is the
// principal-part coefficient A_{r, i+j+1} when i+j+1 <= m, else zero.
GramMatrix newton_matrix(const RationalFunction& F, const FieldElement& r);

LocalDegreeReport local_degree(const RationalFunction& F, const FieldElement& r);

// Coefficient of (x - r)^{-m} in the expansion of g/f around r.
FieldElement higher_residue(const RationalFunction& F, const FieldElement& r,
                            int m);

// At a simple root, the local degree collapses to < ((f/g)'(r))^{-1} >^u.
UnstableClass simple_zero_degree(const RationalFunction& F,
                                 const FieldElement& r);

} // namespace a1deg
