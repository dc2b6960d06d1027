#include "a1deg/sampling.hpp"

#include "a1deg/errors.hpp"

#include <algorithm>

namespace a1deg {

FieldElement random_scalar(Rng& rng, const Field& k)
{
    if (k.is_prime_field())
        return FieldElement::from_integer(
            k, static_cast<long long>(rng.below(k.modulus())));
    const long num = rng.range(-9, 9);
    const long den = rng.range(1, 9);
    return FieldElement::from_rational(k, BigRat(num, den));
}

FieldElement random_nonzero_scalar(Rng& rng, const Field& k)
{
    while (true) {
        FieldElement x = random_scalar(rng, k);
        if (!x.is_zero())
            return x;
    }
}

std::vector<RootDatum> random_distinct_roots(Rng& rng, const Field& k,
                                             int max_roots, int max_mult,
                                             int max_total)
{
    long field_cap = max_roots;
    if (k.is_prime_field())
        field_cap = std::min<long>(field_cap,
                                   static_cast<long>(k.modulus()));
    // Over Q the scalar pool has a few hundred values, plenty for <= 5
    // distinct draws.
    const int count = static_cast<int>(rng.range(1, field_cap));
    std::vector<RootDatum> roots;
    while (static_cast<int>(roots.size()) < count) {
        FieldElement r = random_scalar(rng, k);
        const bool seen =
            std::any_of(roots.begin(), roots.end(),
                        [&](const RootDatum& rd) { return rd.root == r; });
        if (!seen)
            roots.push_back(RootDatum{std::move(r), 1});
    }
    // Distribute multiplicities under the total cap.
    int total = count;
    for (RootDatum& rd : roots) {
        const int room = std::min(max_mult - 1, max_total - total);
        if (room <= 0)
            continue;
        const int extra = static_cast<int>(rng.range(0, room));
        rd.multiplicity += extra;
        total += extra;
    }
    return roots;
}

namespace {

Polynomial random_poly(Rng& rng, const Field& k, int degree)
{
    std::vector<FieldElement> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i)
        coeffs.push_back(random_scalar(rng, k));
    coeffs.push_back(random_nonzero_scalar(rng, k));
    return Polynomial(k, std::move(coeffs));
}

// Denominator coprime to f, of degree below deg f.
Polynomial random_coprime_denominator(Rng& rng, const Field& k,
                                      const Polynomial& f)
{
    while (true) {
        const int dg = static_cast<int>(rng.range(0, f.degree() - 1));
        Polynomial g = random_poly(rng, k, dg);
        if (poly_gcd(f, g).degree() == 0)
            return g;
    }
}

} // namespace

RationalFunction random_split_function(Rng& rng, const Field& k, int max_roots,
                                       int max_mult, int max_total)
{
    const std::vector<RootDatum> roots =
        random_distinct_roots(rng, k, max_roots, max_mult, max_total);
    const FieldElement c = random_nonzero_scalar(rng, k);
    const Polynomial f = product_from_roots(k, roots) * c;
    return RationalFunction(f, random_coprime_denominator(rng, k, f));
}

RationalFunction random_pointed_function(Rng& rng, const Field& k,
                                         int max_degree)
{
    const int df = static_cast<int>(rng.range(1, max_degree));
    const Polynomial f = random_poly(rng, k, df);
    return RationalFunction(f, random_coprime_denominator(rng, k, f));
}

} // namespace a1deg
