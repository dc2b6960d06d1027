#include "a1deg/bezout.hpp"

#include "a1deg/errors.hpp"

namespace a1deg {

Mat bezoutian_coefficients(const Polynomial& f, const Polynomial& g)
{
    if (f.field() != g.field())
        throw DomainError("Bezoutian arguments over different fields");
    const Field k = f.field();
    const int n = f.degree();
    if (n < 1)
        throw DomainError("Bezoutian requires a numerator of degree >= 1");
    if (g.degree() >= n)
        throw DomainError("Bezoutian requires deg(denominator) < deg(numerator)");

    // Write f(X)g(Y) - f(Y)g(X) = sum_i P_i(Y) X^i, then divide by X - Y
    // synthetically in X.  Coefficients live in k[Y].
    std::vector<Polynomial> P;
    P.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
        P.push_back(g * f.coeff(i) - f * g.coeff(i));

    const Polynomial y = Polynomial::x(k);
    std::vector<Polynomial> Q(static_cast<std::size_t>(n), Polynomial::zero(k));
    Q[static_cast<std::size_t>(n) - 1] = P[static_cast<std::size_t>(n)];
    for (int i = n - 1; i >= 1; --i)
        Q[static_cast<std::size_t>(i) - 1] =
            P[static_cast<std::size_t>(i)] + y * Q[static_cast<std::size_t>(i)];
    const Polynomial remainder = P[0] + y * Q[0];
    if (!(remainder == Polynomial::zero(k)))
        throw InternalError("Bezoutian division by X - Y left a remainder");

    Mat b(k, static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (Q[static_cast<std::size_t>(i)].degree() >= n)
            throw InternalError("Bezoutian quotient exceeds expected degree");
        for (int j = 0; j < n; ++j)
            b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                Q[static_cast<std::size_t>(i)].coeff(j);
    }
    if (!b.is_symmetric())
        throw InternalError("Bezoutian matrix is not symmetric");
    return b;
}

GramMatrix bezoutian_matrix(const RationalFunction& F)
{
    Mat b = bezoutian_coefficients(F.numerator(), F.denominator());
    try {
        return GramMatrix(std::move(b));
    } catch (const DomainError& e) {
        // A reduced pointed map always has a nondegenerate Bezoutian, so
        // reaching this means an upstream invariant broke.
        throw InternalError(std::string("Bezoutian of a reduced pointed map "
                                        "is invalid: ") +
                            e.what());
    }
}

UnstableClass unstable_degree(const RationalFunction& F)
{
    return gram_to_class(bezoutian_matrix(F));
}

bool polynomial_degree_shape_check(const RationalFunction& F)
{
    if (F.denominator().degree() != 0)
        throw DomainError("shape check applies only to polynomial maps "
                          "(constant denominator)");
    const Mat b = bezoutian_coefficients(F.numerator(), F.denominator());
    const FieldElement expected = F.denominator().coeff(0);
    const std::size_t n = b.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i + j + 1 > n && !b.at(i, j).is_zero())
                return false;
            if (i + j + 1 == n && b.at(i, j) != expected)
                return false;
        }
    }
    return true;
}

} // namespace a1deg
