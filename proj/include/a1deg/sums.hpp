#pragma once

#include "a1deg/gw.hpp"
#include "a1deg/local_degree.hpp"
#include "a1deg/poly.hpp"

#include <vector>

namespace a1deg {

// Addition of pointed rational functions through the Bezout-identity
// matrix product; the result has degree deg F1 + deg F2.
RationalFunction naive_sum(const RationalFunction& F1,
                           const RationalFunction& F2);

// One summand of the algebraic D-sum: a class attached to the rational
// point where it arises.
struct DsumEntry {
    UnstableClass cls;
    FieldElement point;
};

// Combines the classes and corrects the unit by the squared differences
// of the attachment points, each pair weighted by both ranks:
// unit = prod units * prod_{i<j} (r_i - r_j)^{2 m_i m_j}.
UnstableClass dsum_algebraic(const std::vector<DsumEntry>& entries);

// Everything the local-to-global check produces for one map.
struct LtgReport {
    UnstableClass global_class;
    std::vector<LocalDegreeReport> local_reports;
    UnstableClass dsum_class;
    bool classes_equal;
    bool matrix_identity_holds;
};

// For F whose numerator splits over the base field: computes the global
// degree, every local degree, and the D-sum of the locals at their roots,
// then checks that the D-sum matches the global class and that the
// Bezoutian is congruent to the block sum of the local matrices via the
// coefficient matrix of the numerator.
LtgReport verify_local_to_global(const RationalFunction& F);

} // namespace a1deg
