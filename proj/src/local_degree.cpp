#include "a1deg/local_degree.hpp"

#include "a1deg/errors.hpp"

namespace a1deg {

GramMatrix newton_matrix(const RationalFunction& F, const FieldElement& r)
{
    const PrincipalPart pp = laurent_principal_part(F, r);
    const std::size_t m = static_cast<std::size_t>(pp.multiplicity);
    Mat nwt(F.field(), m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i + j + 1 <= m)
                nwt.at(i, j) = pp.A(static_cast<int>(i + j + 1));
    return GramMatrix(std::move(nwt));
}

LocalDegreeReport local_degree(const RationalFunction& F, const FieldElement& r)
{
    GramMatrix gram = newton_matrix(F, r);
    UnstableClass cls = gram_to_class(gram);
    const int m = static_cast<int>(gram.dimension());
    return LocalDegreeReport{r, m, std::move(gram), std::move(cls)};
}

FieldElement higher_residue(const RationalFunction& F, const FieldElement& r,
                            int m)
{
    if (m < 1)
        throw DomainError("higher residues are indexed from 1");
    const PrincipalPart pp = laurent_principal_part(F, r);
    if (m > pp.multiplicity)
        throw DomainError("residue order exceeds the root multiplicity");
    return pp.A(m);
}

UnstableClass simple_zero_degree(const RationalFunction& F,
                                 const FieldElement& r)
{
    const Polynomial& f = F.numerator();
    const Polynomial& g = F.denominator();
    if (!f.evaluate(r).is_zero())
        throw DomainError("not a zero of the numerator");
    const FieldElement fp = f.derivative().evaluate(r);
    if (fp.is_zero())
        throw DomainError("root is not simple");
    // g(r) != 0 since f and g are coprime.
    return gw_generator((fp / g.evaluate(r)).inverse());
}

} // namespace a1deg
