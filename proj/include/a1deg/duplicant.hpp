#pragma once

#include "a1deg/matrix.hpp"
#include "a1deg/poly.hpp"

namespace a1deg {

// sigma_{m,n}(values): the m-th elementary symmetric polynomial evaluated
// at the given points, with sigma_0 = 1 and zero outside [0, n].
FieldElement elementary_symmetric(int m, const std::vector<FieldElement>& values,
                                  const Field& k);

// The coefficient matrix of a monic split polynomial f with the given
// distinct roots and multiplicities: column (root l, index j) holds the
// monomial coefficients of f / (x - r_l)^j, for j = 1..e_l, blocks in the
// order the roots are given.  Rows are indexed by monomial power.
struct SigmaMatrix {
    Mat entries;
    std::vector<RootDatum> roots;
    std::vector<std::size_t> block_offsets;

    // Column of f / (x - r_l)^j; j runs from 1 to the multiplicity.
    std::size_t column_index(std::size_t root_index, int j) const;
};

SigmaMatrix sigma_matrix(const Field& k, const std::vector<RootDatum>& roots);

// det(Sigma)^2 scaled by c^{2N} for leading coefficient c, N the degree.
FieldElement duplicant(const std::vector<RootDatum>& roots,
                       const FieldElement& leading_coefficient);

// The closed form: c^{2N} * prod_{i<j} (r_i - r_j)^{2 e_i e_j}.
FieldElement duplicant_closed_form(const std::vector<RootDatum>& roots,
                                   const FieldElement& leading_coefficient);

// Checks, column by column against direct polynomial division, that the
// Sigma matrix of the numerator's roots really is the change of basis
// from monomials to the one-root quotients f / (x - r_l)^j.  Requires the
// numerator to split over the base field.
bool newton_basis_verify(const RationalFunction& F);

} // namespace a1deg
