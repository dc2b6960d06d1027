#include "a1deg/sums.hpp"

#include "a1deg/bezout.hpp"
#include "a1deg/duplicant.hpp"
#include "a1deg/errors.hpp"

namespace a1deg {

RationalFunction naive_sum(const RationalFunction& F1,
                           const RationalFunction& F2)
{
    if (F1.field() != F2.field())
        throw DomainError("cannot add maps over different fields");
    const auto [u1, v1] = bezout_pair(F1.numerator(), F1.denominator());
    // First column of [[f1,-v1],[g1,u1]] * [[f2,-v2],[g2,u2]]; the other
    // column never reaches the result.
    const Polynomial f3 = F1.numerator() * F2.numerator() - v1 * F2.denominator();
    const Polynomial g3 = F1.denominator() * F2.numerator() + u1 * F2.denominator();
    return RationalFunction(f3, g3);
}

UnstableClass dsum_algebraic(const std::vector<DsumEntry>& entries)
{
    if (entries.empty())
        throw DomainError("D-sum of no entries");
    const Field k = entries.front().cls.field();
    for (const DsumEntry& e : entries) {
        if (e.cls.field() != k || e.point.field() != k)
            throw DomainError("D-sum entries over different fields");
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].point == entries[j].point)
                throw DomainError("D-sum attachment points must be distinct");

    std::vector<FieldElement> pos, neg;
    FieldElement unit = FieldElement::from_integer(k, 1);
    for (const DsumEntry& e : entries) {
        const auto& p = e.cls.form().positive_entries();
        const auto& n = e.cls.form().negative_entries();
        pos.insert(pos.end(), p.begin(), p.end());
        neg.insert(neg.end(), n.begin(), n.end());
        unit *= e.cls.unit();
    }
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            const FieldElement diff = entries[i].point - entries[j].point;
            const long long exponent =
                2LL * entries[i].cls.rank() * entries[j].cls.rank();
            unit *= diff.pow(exponent);
        }
    return UnstableClass(DiagonalForm(k, std::move(pos), std::move(neg)),
                         std::move(unit));
}

LtgReport verify_local_to_global(const RationalFunction& F)
{
    const Field k = F.field();
    auto [roots, cofactor] = rational_roots(F.numerator());
    if (cofactor.degree() > 0)
        throw UnsupportedVanishingLocus(
            "the vanishing locus has a point that is not rational over the "
            "base field");

    UnstableClass global = unstable_degree(F);

    std::vector<LocalDegreeReport> locals;
    locals.reserve(roots.size());
    std::vector<DsumEntry> entries;
    entries.reserve(roots.size());
    std::vector<Mat> local_mats;
    local_mats.reserve(roots.size());
    for (const RootDatum& rd : roots) {
        LocalDegreeReport rep = local_degree(F, rd.root);
        if (rep.multiplicity != rd.multiplicity)
            throw InternalError("multiplicity disagreement between root "
                                "finding and principal part");
        entries.push_back(DsumEntry{rep.cls, rd.root});
        local_mats.push_back(rep.matrix.entries());
        locals.push_back(std::move(rep));
    }

    UnstableClass dsum = dsum_algebraic(entries);
    const bool classes_equal = gw_equal(global, dsum);

    // Exact congruence: Bezoutian = Sigma * blockdiag(local matrices) *
    // Sigma^T, blocks in the same root order as the Sigma columns.
    const SigmaMatrix s = sigma_matrix(k, roots);
    const Mat conjugated =
        mat_mul(s.entries,
                mat_mul(block_diagonal(k, local_mats), s.entries.transposed()));
    const bool matrix_identity_holds =
        conjugated == bezoutian_matrix(F).entries();

    return LtgReport{std::move(global), std::move(locals), std::move(dsum),
                     classes_equal, matrix_identity_holds};
}

} // namespace a1deg
