#include "doctest.h"
#include "helpers.hpp"

#include "a1deg/duplicant.hpp"
#include "a1deg/errors.hpp"

#include <random>
#include <vector>

using namespace a1deg;
using th::Q;
using th::fe;

namespace {

// Brute-force elementary symmetric polynomial: sum over all m-subsets.
FieldElement esym_subsets(int m, const std::vector<FieldElement>& vals,
                          const Field& k)
{
    std::size_t n = vals.size();
    FieldElement acc = FieldElement::from_integer(k, m == 0 ? 1 : 0);
    if (m <= 0 || m > static_cast<int>(n))
        return acc;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = i;
    while (true) {
        FieldElement term = FieldElement::from_integer(k, 1);
        for (std::size_t i : idx)
            term *= vals[i];
        acc += term;
        // Next combination in lexicographic order.
        std::size_t i = idx.size();
        while (i > 0) {
            --i;
            if (idx[i] != i + n - idx.size()) {
                ++idx[i];
                for (std::size_t j = i + 1; j < idx.size(); ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return acc;
        }
    }
}

std::vector<RootDatum> make_roots(const Field& k,
                                  const std::vector<std::pair<long, int>>& rs)
{
    std::vector<RootDatum> out;
    for (const auto& [r, e] : rs)
        out.push_back({FieldElement::from_integer(k, r), e});
    return out;
}

} // namespace

TEST_CASE("elementary symmetric polynomials match subset sums")
{
    std::mt19937_64 rng(9090);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FieldElement> vals;
        std::size_t n = rng() % 6;
        for (std::size_t i = 0; i < n; ++i)
            vals.push_back(fe(static_cast<long>(rng() % 9) - 4));
        for (int m = -1; m <= static_cast<int>(n) + 1; ++m)
            CHECK(elementary_symmetric(m, vals, Q()) ==
                  esym_subsets(m, vals, Q()));
    }
}

TEST_CASE("sigma matrix columns are the one-root quotients")
{
    // f = (x - 2) x^2: the worked 3 x 3 example, pinned entry by entry.
    // Columns: f/(x-2) = x^2, f/x = x^2 - 2x, f/x^2 = x - 2.
    auto roots = make_roots(Q(), {{2, 1}, {0, 2}});
    SigmaMatrix s = sigma_matrix(Q(), roots);
    REQUIRE(s.entries.rows() == 3);
    REQUIRE(s.entries.cols() == 3);

    std::size_t c0 = s.column_index(0, 1); // f/(x-2)
    std::size_t c1 = s.column_index(1, 1); // f/x
    std::size_t c2 = s.column_index(1, 2); // f/x^2
    CHECK(s.entries.at(0, c0) == fe(0));
    CHECK(s.entries.at(1, c0) == fe(0));
    CHECK(s.entries.at(2, c0) == fe(1));
    CHECK(s.entries.at(0, c1) == fe(0));
    CHECK(s.entries.at(1, c1) == fe(-2));
    CHECK(s.entries.at(2, c1) == fe(1));
    CHECK(s.entries.at(0, c2) == fe(-2));
    CHECK(s.entries.at(1, c2) == fe(1));
    CHECK(s.entries.at(2, c2) == fe(0));

    CHECK(determinant(s.entries) == fe(-4));
    CHECK(duplicant(roots, fe(1)) == fe(16));
    CHECK(duplicant_closed_form(roots, fe(1)) == fe(16));
}

TEST_CASE("sigma matrix columns divide out exactly, at random")
{
    std::mt19937_64 rng(111213);
    for (const Field& k : {Field::rationals(), Field::prime_field(13)}) {
        for (int trial = 0; trial < 30; ++trial) {
            // Distinct roots with multiplicities summing to <= 6.
            std::vector<RootDatum> roots;
            int total = 0;
            long base = static_cast<long>(rng() % 5) - 2;
            for (int i = 0; i < static_cast<int>(rng() % 3) + 1; ++i) {
                int e = static_cast<int>(rng() % 2) + 1;
                if (total + e > 6)
                    break;
                roots.push_back(
                    {FieldElement::from_integer(k, base + 3 * i), e});
                total += e;
            }
            Polynomial f = product_from_roots(k, roots);
            SigmaMatrix s = sigma_matrix(k, roots);
            for (std::size_t l = 0; l < roots.size(); ++l) {
                for (int j = 1; j <= roots[l].multiplicity; ++j) {
                    Polynomial den =
                        product_from_roots(k, {{roots[l].root, j}});
                    auto [quo, rem] = divrem(f, den);
                    REQUIRE(rem.is_zero());
                    std::size_t col = s.column_index(l, j);
                    for (std::size_t row = 0; row < s.entries.rows(); ++row)
                        CHECK(s.entries.at(row, col) ==
                              quo.coeff(row));
                }
            }
        }
    }
}

TEST_CASE("duplicant equals its closed form on random inputs")
{
    std::mt19937_64 rng(141516);
    for (const Field& k : {Field::rationals(), Field::prime_field(7)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<RootDatum> roots;
            std::vector<long> used;
            std::size_t want = 1 + rng() % 3;
            while (roots.size() < want) {
                long r = static_cast<long>(rng() % 7) - 3;
                bool dup = false;
                for (long u : used)
                    if (u == r)
                        dup = true;
                if (dup)
                    continue;
                used.push_back(r);
                int e = static_cast<int>(rng() % 3) + 1;
                roots.push_back({FieldElement::from_integer(k, r), e});
            }
            FieldElement c =
                FieldElement::from_integer(k, static_cast<long>(rng() % 5) + 1);
            CHECK(duplicant(roots, c) == duplicant_closed_form(roots, c));
        }
    }
}

TEST_CASE("two-root double pattern: duplicant is the fourth power of the gap")
{
    // (x - a)(x - b)^2 has duplicant (a - b)^4 when monic.
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            if (a == b)
                continue;
            auto roots = make_roots(Q(), {{a, 1}, {b, 2}});
            CHECK(duplicant(roots, fe(1)) == fe(a - b).pow(4));
        }
}

TEST_CASE("all-simple duplicant is the classical discriminant")
{
    std::mt19937_64 rng(171819);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<RootDatum> roots;
        std::vector<long> used;
        std::size_t n = 1 + rng() % 4;
        while (roots.size() < n) {
            long r = static_cast<long>(rng() % 11) - 5;
            bool dup = false;
            for (long u : used)
                if (u == r)
                    dup = true;
            if (dup)
                continue;
            used.push_back(r);
            roots.push_back({fe(r), 1});
        }
        Polynomial f = product_from_roots(Q(), roots);
        // disc(f) = (-1)^{n(n-1)/2} prod_i f'(r_i) for monic split f.
        FieldElement disc = fe(1);
        for (const auto& rd : roots)
            disc *= f.derivative().evaluate(rd.root);
        if ((n * (n - 1) / 2) % 2 == 1)
            disc = -disc;
        CHECK(duplicant(roots, fe(1)) == disc);
    }
}

TEST_CASE("repeated roots in the input are rejected")
{
    auto roots = make_roots(Q(), {{1, 1}, {1, 2}});
    CHECK_THROWS_AS(sigma_matrix(Q(), roots), DomainError);
    CHECK_THROWS_AS(duplicant(roots, fe(1)), DomainError);
    CHECK_THROWS_AS(duplicant_closed_form(roots, fe(1)), DomainError);
    CHECK_THROWS_AS(
        sigma_matrix(Q(), make_roots(Q(), {{1, 0}})), DomainError);
}

TEST_CASE("newton_basis_verify accepts split numerators and rejects others")
{
    CHECK(newton_basis_verify(th::rf("(x^3 - x)/(x^2 - 2)")));
    CHECK(newton_basis_verify(th::rf("x^2 - 1/4")));
    CHECK_THROWS_AS(newton_basis_verify(th::rf("x^2 - 2")), DomainError);
}
