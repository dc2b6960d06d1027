#include "a1deg/duplicant.hpp"

#include "a1deg/errors.hpp"

namespace a1deg {

FieldElement elementary_symmetric(int m, const std::vector<FieldElement>& values,
                                  const Field& k)
{
    const int n = static_cast<int>(values.size());
    if (m < 0 || m > n)
        return FieldElement::from_integer(k, 0);
    // One-pass recurrence: fold the values in, updating e_t from the top.
    std::vector<FieldElement> e(static_cast<std::size_t>(m) + 1,
                                FieldElement::from_integer(k, 0));
    e[0] = FieldElement::from_integer(k, 1);
    for (const FieldElement& v : values) {
        if (v.field() != k)
            throw DomainError("symmetric polynomial argument over a different field");
        for (int t = m; t >= 1; --t)
            e[static_cast<std::size_t>(t)] += v * e[static_cast<std::size_t>(t) - 1];
    }
    return e[static_cast<std::size_t>(m)];
}

namespace {

void validate_roots(const Field& k, const std::vector<RootDatum>& roots)
{
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].root.field() != k)
            throw DomainError("root over a different field");
        if (roots[i].multiplicity < 1)
            throw DomainError("root multiplicities must be positive");
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].root == roots[j].root)
                throw DomainError("repeated root in the input");
    }
}

} // namespace

std::size_t SigmaMatrix::column_index(std::size_t root_index, int j) const
{
    if (root_index >= roots.size())
        throw DomainError("root index out of range");
    if (j < 1 || j > roots[root_index].multiplicity)
        throw DomainError("column index outside the root's block");
    return block_offsets[root_index] + static_cast<std::size_t>(j - 1);
}

SigmaMatrix sigma_matrix(const Field& k, const std::vector<RootDatum>& roots)
{
    validate_roots(k, roots);
    std::size_t n = 0;
    std::vector<std::size_t> offsets;
    offsets.reserve(roots.size());
    for (const RootDatum& rd : roots) {
        offsets.push_back(n);
        n += static_cast<std::size_t>(rd.multiplicity);
    }
    const int total = static_cast<int>(n);

    Mat m(k, n, n);
    for (std::size_t l = 0; l < roots.size(); ++l) {
        for (int j = 1; j <= roots[l].multiplicity; ++j) {
            // Root multiset of f / (x - r_l)^j: every root with its
            // multiplicity, r_l counted j fewer times.
            std::vector<FieldElement> vals;
            vals.reserve(n);
            for (std::size_t t = 0; t < roots.size(); ++t) {
                const int reps = roots[t].multiplicity - (t == l ? j : 0);
                for (int c = 0; c < reps; ++c)
                    vals.push_back(roots[t].root);
            }
            // Coefficient of x^i in prod (x - v) is (-1)^(d-i) sigma_{d-i}
            // with d = total - j; fill the column top power down.
            std::vector<FieldElement> e(vals.size() + 1,
                                        FieldElement::from_integer(k, 0));
            e[0] = FieldElement::from_integer(k, 1);
            std::size_t seen = 0;
            for (const FieldElement& v : vals) {
                ++seen;
                for (std::size_t t = seen; t >= 1; --t)
                    e[t] += v * e[t - 1];
            }
            const std::size_t col = offsets[l] + static_cast<std::size_t>(j - 1);
            for (int i = 0; i < total; ++i) {
                const int mdeg = total - i - j;
                if (mdeg < 0 || mdeg > static_cast<int>(vals.size()))
                    continue;
                FieldElement entry = e[static_cast<std::size_t>(mdeg)];
                if (mdeg & 1)
                    entry = -entry;
                m.at(static_cast<std::size_t>(i), col) = entry;
            }
        }
    }
    return SigmaMatrix{std::move(m), roots, std::move(offsets)};
}

FieldElement duplicant(const std::vector<RootDatum>& roots,
                       const FieldElement& leading_coefficient)
{
    if (leading_coefficient.is_zero())
        throw DomainError("leading coefficient must be nonzero");
    const Field k = leading_coefficient.field();
    const SigmaMatrix s = sigma_matrix(k, roots);
    const FieldElement d = determinant(s.entries);
    long long total = 0;
    for (const RootDatum& rd : roots)
        total += rd.multiplicity;
    return leading_coefficient.pow(2 * total) * d * d;
}

FieldElement duplicant_closed_form(const std::vector<RootDatum>& roots,
                                   const FieldElement& leading_coefficient)
{
    if (leading_coefficient.is_zero())
        throw DomainError("leading coefficient must be nonzero");
    const Field k = leading_coefficient.field();
    validate_roots(k, roots);
    long long total = 0;
    for (const RootDatum& rd : roots)
        total += rd.multiplicity;
    FieldElement prod = FieldElement::from_integer(k, 1);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const FieldElement diff = roots[i].root - roots[j].root;
            const long long e =
                2LL * roots[i].multiplicity * roots[j].multiplicity;
            prod *= diff.pow(e);
        }
    return leading_coefficient.pow(2 * total) * prod;
}

bool newton_basis_verify(const RationalFunction& F)
{
    const Field k = F.field();
    const Polynomial& f = F.numerator();
    auto [roots, cofactor] = rational_roots(f);
    if (cofactor.degree() > 0)
        throw DomainError("numerator does not split over the base field");

    const SigmaMatrix s = sigma_matrix(k, roots);
    const int total = f.degree();
    for (std::size_t l = 0; l < roots.size(); ++l) {
        Polynomial quotient = f;
        const Polynomial factor = Polynomial::linear_root(roots[l].root);
        for (int j = 1; j <= roots[l].multiplicity; ++j) {
            auto [q, rem] = divrem(quotient, factor);
            if (!(rem == Polynomial::zero(k)))
                throw InternalError("claimed root does not divide the numerator");
            quotient = std::move(q);
            const std::size_t col = s.column_index(l, j);
            for (int i = 0; i < total; ++i)
                if (s.entries.at(static_cast<std::size_t>(i), col) !=
                    quotient.coeff(i))
                    return false;
        }
    }
    return true;
}

} // namespace a1deg
