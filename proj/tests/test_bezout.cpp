#include "doctest.h"
#include "helpers.hpp"

#include "a1deg/bezout.hpp"
#include "a1deg/errors.hpp"

#include <random>
#include <vector>

using namespace a1deg;
using th::Q;
using th::fe;

namespace {

// Dense bivariate polynomial, coefficient of X^i Y^j at [i][j].  Just
// enough arithmetic to state the defining identity independently.
struct Bivar {
    Field k;
    std::vector<std::vector<FieldElement>> c;

    Bivar(const Field& field, std::size_t nx, std::size_t ny)
        : k(field),
          c(nx, std::vector<FieldElement>(
                    ny, FieldElement::from_integer(field, 0)))
    {
    }
};

// f(X) g(Y) - f(Y) g(X).
Bivar cross_difference(const Polynomial& f, const Polynomial& g)
{
    std::size_t n = static_cast<std::size_t>(f.degree()) + 1;
    Bivar out(f.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.c[i][j] = f.coeff(i) * g.coeff(j) - f.coeff(j) * g.coeff(i);
    return out;
}

// (X - Y) * b.
Bivar shear(const Bivar& b)
{
    std::size_t nx = b.c.size(), ny = b.c.empty() ? 0 : b.c[0].size();
    Bivar out(b.k, nx + 1, ny + 1);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j) {
            out.c[i + 1][j] += b.c[i][j];
            out.c[i][j + 1] -= b.c[i][j];
        }
    return out;
}

bool bivar_equal(const Bivar& a, const Bivar& b)
{
    std::size_t nx = std::max(a.c.size(), b.c.size());
    auto get = [](const Bivar& v, std::size_t i, std::size_t j) {
        if (i >= v.c.size() || j >= v.c[i].size())
            return FieldElement::from_integer(v.k, 0);
        return v.c[i][j];
    };
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < nx; ++j)
            if (get(a, i, j) != get(b, i, j))
                return false;
    return true;
}

Polynomial random_poly(std::mt19937_64& rng, const Field& k, long deg)
{
    std::vector<FieldElement> cs;
    for (long i = 0; i < deg; ++i)
        cs.push_back(k.is_rationals()
                         ? fe(static_cast<long>(rng() % 9) - 4,
                              static_cast<long>(rng() % 3) + 1)
                         : FieldElement::from_integer(
                               k, static_cast<long>(rng() % 7)));
    FieldElement lc = FieldElement::from_integer(k, 1);
    while (true) {
        long v = static_cast<long>(rng() % 9) - 4;
        if (v != 0) {
            lc = FieldElement::from_integer(k, v);
            break;
        }
    }
    cs.push_back(lc);
    return Polynomial(k, std::move(cs));
}

} // namespace

TEST_CASE("the coefficient matrix satisfies the defining identity")
{
    std::mt19937_64 rng(6060);
    for (const Field& k : {Field::rationals(), Field::prime_field(7)}) {
        for (int trial = 0; trial < 60; ++trial) {
            long n = static_cast<long>(rng() % 5) + 1;
            Polynomial f = random_poly(rng, k, n);
            Polynomial g = random_poly(rng, k, static_cast<long>(rng() % n));
            Mat b = bezoutian_coefficients(f, g);
            REQUIRE(b.rows() == static_cast<std::size_t>(n));
            REQUIRE(b.cols() == static_cast<std::size_t>(n));
            CHECK(b.is_symmetric());
            Bivar bb(k, static_cast<std::size_t>(n),
                     static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t j = 0; j < b.cols(); ++j)
                    bb.c[i][j] = b.at(i, j);
            CHECK(bivar_equal(shear(bb), cross_difference(f, g)));
        }
    }
}

TEST_CASE("pinned small matrices")
{
    // (x^3 + x, 1): quotient is X^2 + XY + Y^2 + 1.
    Mat b = bezoutian_coefficients(th::poly("x^3 + x"), th::poly("1"));
    CHECK(b.at(0, 0) == fe(1));
    CHECK(b.at(1, 1) == fe(1));
    CHECK(b.at(2, 0) == fe(1));
    CHECK(b.at(0, 2) == fe(1));
    CHECK(b.at(1, 0) == fe(0));
    CHECK(b.at(2, 2) == fe(0));

    // (x^2 - 1, x): quotient is XY + 1.
    Mat c = bezoutian_coefficients(th::poly("x^2 - 1"), th::poly("x"));
    CHECK(c.at(0, 0) == fe(1));
    CHECK(c.at(1, 1) == fe(1));
    CHECK(c.at(0, 1) == fe(0));
    CHECK(c.at(1, 0) == fe(0));
}

TEST_CASE("scaling both arguments scales the raw matrix by the square")
{
    Polynomial f = th::poly("x^3 - 2*x + 1");
    Polynomial g = th::poly("x + 3");
    Mat b1 = bezoutian_coefficients(f, g);
    Mat b2 = bezoutian_coefficients(f * fe(5), g * fe(5));
    for (std::size_t i = 0; i < b1.rows(); ++i)
        for (std::size_t j = 0; j < b1.cols(); ++j)
            CHECK(b2.at(i, j) == b1.at(i, j) * fe(25));
}

TEST_CASE("raw pair preconditions")
{
    CHECK_THROWS_AS(bezoutian_coefficients(th::poly("3"), th::poly("1")),
                    DomainError);
    CHECK_THROWS_AS(bezoutian_coefficients(th::poly("x"), th::poly("x^2")),
                    DomainError);
    Field f5 = Field::prime_field(5);
    CHECK_THROWS_AS(
        bezoutian_coefficients(th::poly("x"), th::poly("1", f5)),
        DomainError);
}

TEST_CASE("bezoutian_matrix works on the normalized pair")
{
    // 2x^2/2 normalizes to x^2 over 1; the form must match the monic one.
    RationalFunction a = th::rf("(2*x^2)/(2)");
    RationalFunction b = th::rf("x^2");
    CHECK(bezoutian_matrix(a).entries() == bezoutian_matrix(b).entries());
    CHECK(bezoutian_matrix(b).det() == fe(-1));
}

TEST_CASE("unstable degree of pinned maps")
{
    // deg(x) = <1>.
    CHECK(gw_equal(unstable_degree(th::rf("x")), gw_generator(fe(1))));

    // deg(x^2) is the hyperbolic class with unit -1.
    UnstableClass d2 = unstable_degree(th::rf("x^2"));
    CHECK(d2.unit() == fe(-1));
    CHECK(gw_equal(d2, UnstableClass(DiagonalForm(Q(), {fe(1), fe(-1)}),
                                     fe(-1))));

    // deg(x^3) = <1> + hyperbolic, unit -1.
    UnstableClass d3 = unstable_degree(th::rf("x^3"));
    CHECK(d3.unit() == fe(-1));
    CHECK(gw_equal(d3, UnstableClass(DiagonalForm(Q(), {fe(1), fe(1), fe(-1)}),
                                     fe(-1))));

    // deg((x^2 - 1)/x) = <1> + <1> with unit 1.
    UnstableClass dm = unstable_degree(th::rf("(x^2-1)/(x)"));
    CHECK(dm.unit() == fe(1));
    CHECK(gw_equal(dm, UnstableClass(DiagonalForm(Q(), {fe(1), fe(1)}),
                                     fe(1))));

    // The normalized pair drives everything: a common scale cancels, and
    // a leading coefficient surfaces as an exact square factor in the unit.
    CHECK(gw_equal(unstable_degree(th::rf("(5*x^2)/(5)")),
                   unstable_degree(th::rf("x^2"))));
    CHECK(unstable_degree(th::rf("5*x^2")).unit() == fe(-1, 25));
}

TEST_CASE("polynomial map shape: anti-triangular with constant anti-diagonal")
{
    CHECK(polynomial_degree_shape_check(th::rf("x^3 + x")));
    CHECK(polynomial_degree_shape_check(th::rf("4*x^5 - 3*x^2 + 7")));
    CHECK(polynomial_degree_shape_check(th::rf("x")));
    // Constant but nontrivial denominators still count as polynomial maps.
    CHECK(polynomial_degree_shape_check(th::rf("(x^2 + 1)/(3)")));
    CHECK_THROWS_AS(polynomial_degree_shape_check(th::rf("(x^2-1)/(x)")),
                    DomainError);
}

TEST_CASE("unstable degree rejects non-pointed input at construction")
{
    CHECK_THROWS_AS(th::rf("(x+1)/(x^2)"), NotPointed);
    CHECK_THROWS_AS(th::rf("(x^2+x)/(x)"), NotReduced);
}
