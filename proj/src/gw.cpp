#include "a1deg/gw.hpp"

#include "a1deg/arith.hpp"
#include "a1deg/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

namespace a1deg {

namespace {

BigInt abs_int(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// Multiply two squarefree integers and strip the common square factor, so
// the result is squarefree again without factoring anything.
BigInt combine_squarefree(const BigInt& a, const BigInt& b)
{
    const BigInt g = gcd(abs_int(a), abs_int(b));
    return (a / g) * (b / g);
}

} // namespace

DiagonalForm::DiagonalForm(const Field& k, std::vector<FieldElement> positives,
                           std::vector<FieldElement> negatives)
    : field_(k), pos_(std::move(positives)), neg_(std::move(negatives))
{
    for (const auto* side : {&pos_, &neg_}) {
        for (const auto& e : *side) {
            if (e.field() != field_)
                throw DomainError("diagonal entry from a different field");
            if (e.is_zero())
                throw DomainError("diagonal forms must have nonzero entries");
        }
    }
}

FieldElement DiagonalForm::discriminant() const
{
    if (field_.kind() == Field::Kind::prime_field) {
        FieldElement prod = FieldElement::from_integer(field_, 1);
        for (const auto& e : pos_) prod *= e;
        for (const auto& e : neg_) prod *= e;
        return square_class_reduce(prod);
    }
    // Reduce entry by entry and fold with the gcd trick; the running value
    // stays squarefree, so no product of entries is ever factored whole.
    BigInt acc = 1;
    for (const auto* side : {&pos_, &neg_}) {
        for (const auto& e : *side) {
            const BigRat q = e.rational_value();
            const BigInt s = squarefree_part(numerator(q) * denominator(q));
            acc = combine_squarefree(acc, s);
        }
    }
    return FieldElement::from_integer(field_, acc);
}

long DiagonalForm::signature() const
{
    if (field_.kind() != Field::Kind::rationals)
        throw DomainError("signature is only defined over Q");
    long s = 0;
    for (const auto& e : pos_) s += e.sign();
    for (const auto& e : neg_) s -= e.sign();
    return s;
}

UnstableClass::UnstableClass(DiagonalForm form, FieldElement unit)
    : form_(std::move(form)), unit_(std::move(unit))
{
    if (unit_.field() != form_.field())
        throw DomainError("unit from a different field");
    if (unit_.is_zero())
        throw DomainError("the unit of an unstable class must be nonzero");
    // Fiber condition: the unit must represent the discriminant square
    // class.  Checking is_square(unit * prod(entries)) avoids reducing the
    // large product to a canonical representative.
    FieldElement probe = unit_;
    for (const auto& e : form_.positive_entries()) probe *= e;
    for (const auto& e : form_.negative_entries()) probe *= e;
    if (!is_square(probe))
        throw DomainError("unit does not lie in the discriminant square class");
}

UnstableClass gw_generator(const FieldElement& a)
{
    if (a.is_zero())
        throw DomainError("generators <a>^u require a nonzero a");
    return UnstableClass(DiagonalForm(a.field(), {a}), a);
}

UnstableClass gw_zero(const Field& k)
{
    return UnstableClass(DiagonalForm(k), FieldElement::from_integer(k, 1));
}

UnstableClass gw_add(const UnstableClass& a, const UnstableClass& b)
{
    if (a.field() != b.field())
        throw DomainError("cannot add classes over different fields");
    std::vector<FieldElement> pos = a.form().positive_entries();
    std::vector<FieldElement> neg = a.form().negative_entries();
    const auto& bp = b.form().positive_entries();
    const auto& bn = b.form().negative_entries();
    pos.insert(pos.end(), bp.begin(), bp.end());
    neg.insert(neg.end(), bn.begin(), bn.end());
    return UnstableClass(DiagonalForm(a.field(), std::move(pos), std::move(neg)),
                         a.unit() * b.unit());
}

UnstableClass gw_neg(const UnstableClass& a)
{
    return UnstableClass(DiagonalForm(a.field(), a.form().negative_entries(),
                                      a.form().positive_entries()),
                         a.unit().inverse());
}

GramMatrix::GramMatrix(Mat entries)
    : entries_(std::move(entries)), det_(FieldElement::from_integer(entries_.field(), 0))
{
    if (entries_.rows() != entries_.cols())
        throw DomainError("Gram matrices must be square");
    if (!entries_.is_symmetric())
        throw DomainError("Gram matrices must be symmetric");
    det_ = determinant(entries_);
    if (entries_.rows() > 0 && det_.is_zero())
        throw DomainError("Gram matrix is degenerate");
}

int hasse_invariant(const DiagonalForm& form, const Place& v)
{
    if (form.field().kind() != Field::Kind::rationals)
        throw DomainError("Hasse invariants are only computed over Q");
    if (!form.is_genuine())
        throw DomainError("Hasse invariant of a virtual form is not defined");
    const auto& d = form.positive_entries();
    int eps = 1;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            eps *= hilbert_symbol(d[i], d[j], v);
    return eps;
}

namespace {

// Bit size of a rational entry; the congruence steering below minimizes
// the total over the active block.
long height(const FieldElement& x)
{
    if (x.field().kind() == Field::Kind::prime_field) return x.is_zero() ? 0 : 1;
    const BigRat q = x.rational_value();
    const BigInt n = abs_int(numerator(q));
    return static_cast<long>(msb(n == 0 ? BigInt(1) : n)) +
           static_cast<long>(msb(denominator(q)));
}

// Symmetric congruence move: basis change b_i += t * b_j, applied to rows
// and columns at once.  The new (i,i) entry must be computed from the old
// values before the row is overwritten.
void sym_move(Mat& m, std::size_t i, std::size_t j, const FieldElement& t)
{
    const std::size_t n = m.rows();
    const FieldElement mii = m.at(i, i), mij = m.at(i, j), mjj = m.at(j, j);
    for (std::size_t k = 0; k < n; ++k)
        m.at(i, k) = m.at(i, k) + t * m.at(j, k);
    for (std::size_t k = 0; k < n; ++k)
        m.at(k, i) = m.at(i, k);
    m.at(i, i) = mii + (t + t) * mij + t * t * mjj;
}

long block_cost(const Mat& m, std::size_t start)
{
    long phi = 0;
    for (std::size_t i = start; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.rows(); ++j)
            phi += height(m.at(i, j));
    return phi;
}

// Greedy LLL-flavoured reduction of the trailing block: try integer moves
// b_i += t*b_j and keep any that strictly shrink the total bit size.
void size_reduce(Mat& m, std::size_t start)
{
    if (m.field().kind() != Field::Kind::rationals) return;
    const std::size_t n = m.rows();
    if (n - start < 2) return;
    long phi = block_cost(m, start);
    for (int sweep = 0; sweep < 6; ++sweep) {
        bool improved = false;
        for (std::size_t i = start; i < n; ++i) {
            for (std::size_t j = start; j < n; ++j) {
                if (i == j || m.at(j, j).is_zero()) continue;
                // Candidate multipliers: the rounded projection and its
                // neighbours, plus the unit steps.
                std::set<BigInt> cands;
                const BigRat ratio = -(m.at(i, j).rational_value()) /
                                     m.at(j, j).rational_value();
                const BigInt num2 = numerator(ratio) * 2;
                const BigInt den2 = denominator(ratio) * 2;
                // Round half away from zero.
                BigInt t0 = (num2 >= 0) ? BigInt((num2 + den2 / 2) / den2)
                                        : BigInt(-((-num2 + den2 / 2) / den2));
                for (const BigInt& t :
                     {t0, BigInt(t0 + 1), BigInt(t0 - 1), BigInt(1), BigInt(-1)})
                    if (t != 0) cands.insert(t);
                for (const BigInt& t : cands) {
                    Mat trial = m;
                    sym_move(trial, i, j, FieldElement::from_integer(m.field(), t));
                    const long phi2 = block_cost(trial, start);
                    if (phi2 < phi) {
                        m = std::move(trial);
                        phi = phi2;
                        improved = true;
                        break;
                    }
                }
            }
        }
        if (!improved) break;
    }
}

BigRat abs_rat(const BigRat& v) { return v < 0 ? BigRat(-v) : v; }

// Nearest integer, halves away from zero.
BigInt round_rat(const BigRat& x)
{
    const BigInt n = numerator(x), d = denominator(x);
    return n >= 0 ? BigInt((n + d / 2) / d) : BigInt(-((-n + d / 2) / d));
}

// Exact Gram-Schmidt bookkeeping for the trailing block: d[i] is the
// leading (i+1)x(i+1) principal minor and lam[i][j] = d[j] * mu[i][j].
// Returns false when a leading minor vanishes, which the caller escapes
// with a perturbation move.
struct GsoTable {
    std::vector<std::vector<BigRat>> lam;
    std::vector<BigRat> d;
};

bool compute_gso(const Mat& m, std::size_t start, GsoTable& out)
{
    const std::size_t n = m.rows() - start;
    out.lam.assign(n, {});
    out.d.assign(n, BigRat(0));
    for (std::size_t i = 0; i < n; ++i) {
        out.lam[i].assign(i, BigRat(0));
        for (std::size_t j = 0; j <= i; ++j) {
            BigRat u = m.at(start + i, start + j).rational_value();
            for (std::size_t k = 0; k < j; ++k) {
                const BigRat div = (k == 0) ? BigRat(1) : out.d[k - 1];
                u = (out.d[k] * u - out.lam[i][k] * out.lam[j][k]) / div;
            }
            if (j < i) out.lam[i][j] = u;
            else out.d[i] = u;
        }
        if (out.d[i] == 0) return false;
    }
    return true;
}

// Recompute the table, escaping vanishing leading minors.  A vanishing
// minor at index beta means the flag spanned by the first beta+1 vectors
// is degenerate.  Mixing b_beta with another block vector leaves the sound
// head of the flag alone, and because the full block is nondegenerate some
// such move must push the vanishing index strictly up, so at most the
// block width of repairs is ever needed.
bool gso_with_repair(Mat& m, std::size_t start, GsoTable& g)
{
    const std::size_t w = m.rows() - start;
    for (std::size_t round = 0; round <= w + 1; ++round) {
        if (compute_gso(m, start, g)) return true;
        std::size_t beta = 0;
        while (beta < w && g.d[beta] != 0) ++beta;
        bool repaired = false;
        for (std::size_t j = 0; j < w && !repaired; ++j) {
            if (j == beta) continue;
            for (const long tv : {1L, -1L, 2L, -2L, 3L}) {
                sym_move(m, start + beta, start + j,
                         FieldElement::from_integer(m.field(), tv));
                GsoTable probe;
                compute_gso(m, start, probe);
                std::size_t after = 0;
                while (after < w && probe.d[after] != 0) ++after;
                if (after > beta) { repaired = true; break; }
                sym_move(m, start + beta, start + j,
                         FieldElement::from_integer(m.field(), -tv));
            }
        }
        if (!repaired) return false;
    }
    return false;
}

// Lattice reduction of the trailing block with unimodular basis moves.
// Greedy size reduction alone cannot tame these matrices: it is the swap
// step that keeps every pivot near |det|^(1/dim).  A swap of b_{k-1} and
// b_k is accepted exactly when it shrinks the magnitude of the leading
// minor d[k-1].  Every entry lives on the fixed lattice generated by the
// original matrix entries, so the minors are discrete and the strictly
// decreasing product of their magnitudes terminates the loop.  Size
// reductions only touch row k of the table, which is updated in place; the
// table is recomputed after the rarer swaps.
bool lll_reduce(Mat& m, std::size_t start)
{
    if (m.field().kind() != Field::Kind::rationals) return true;
    const std::size_t n = m.rows();
    const std::size_t w = n - start;
    if (w < 2) return true;
    GsoTable g;
    if (!gso_with_repair(m, start, g)) return false;
    std::size_t k = 1;
    for (int guard = 0; k < w; ++guard) {
        if (guard > 4000) return false;
        for (std::size_t l = k; l-- > 0;) {
            const BigInt q = round_rat(g.lam[k][l] / g.d[l]);
            if (q == 0) continue;
            sym_move(m, start + k, start + l,
                     FieldElement::from_integer(m.field(), BigInt(-q)));
            const BigRat qr(q);
            for (std::size_t j = 0; j < l; ++j)
                g.lam[k][j] -= qr * g.lam[l][j];
            g.lam[k][l] -= qr * g.d[l];
        }
        const BigRat& lam = g.lam[k][k - 1];
        const BigRat dk2 = (k >= 2) ? g.d[k - 2] : BigRat(1);
        const BigRat b = (dk2 * g.d[k] + lam * lam) / g.d[k - 1];
        // Swaps that would zero a minor out exactly are skipped so the
        // bookkeeping stays intact.
        if (b != 0 && abs_rat(b) < abs_rat(g.d[k - 1])) {
            const std::size_t r1 = start + k - 1, r2 = start + k;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(m.at(r1, c), m.at(r2, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(m.at(r, r1), m.at(r, r2));
            if (!gso_with_repair(m, start, g)) return false;
            k = (k > 1) ? k - 1 : 1;
        } else {
            ++k;
        }
    }
    return true;
}

// Diagonalize a symmetric nondegenerate matrix by congruence.  Every basis
// move has determinant plus or minus one, and congruence squares that sign
// away, so the diagonal product equals the original determinant exactly.
std::vector<FieldElement> congruent_diagonal(Mat m)
{
    const std::size_t n = m.rows();
    const Field k = m.field();
    const FieldElement one = FieldElement::from_integer(k, 1);
    std::vector<FieldElement> diag;
    diag.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (!lll_reduce(m, s)) size_reduce(m, s);
        // Pick the nonzero diagonal pivot of least height.
        std::size_t pivot = n;
        long best = 0;
        for (std::size_t i = s; i < n; ++i) {
            if (m.at(i, i).is_zero()) continue;
            const long h = height(m.at(i, i));
            if (pivot == n || h < best) { pivot = i; best = h; }
        }
        if (pivot == n) {
            // All diagonal zero: some off-diagonal entry is nonzero, fold
            // it onto the diagonal with b_i += b_j.
            std::size_t bi = n, bj = n;
            for (std::size_t i = s; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n && bi == n; ++j)
                    if (!m.at(i, j).is_zero()) { bi = i; bj = j; }
            if (bi == n)
                throw InternalError("degenerate block during diagonalization");
            sym_move(m, bi, bj, one);
            pivot = bi;
        }
        if (pivot != s) {
            // Swap basis vectors s and pivot (a congruence of determinant
            // -1 composed with a sign flip, so determinant one overall).
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(s, c), m.at(pivot, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(m.at(r, s), m.at(r, pivot));
            for (std::size_t c = 0; c < n; ++c) m.at(s, c) = -m.at(s, c);
            for (std::size_t r = 0; r < n; ++r) m.at(r, s) = -m.at(r, s);
        }
        const FieldElement p = m.at(s, s);
        for (std::size_t i = s + 1; i < n; ++i) {
            if (m.at(i, s).is_zero()) continue;
            sym_move(m, i, s, -(m.at(i, s) / p));
        }
        diag.push_back(p);
    }
    return diag;
}

// Deterministic unimodular shake-up used when a diagonalization produced
// entries too hard to factor: a different congruence path lands in a
// different (usually friendlier) set of square-class representatives.
Mat remix(const Mat& original, unsigned attempt)
{
    Mat m = original;
    const std::size_t n = m.rows();
    std::mt19937_64 rng(0xA1DE6ull + attempt);
    const long long ts[4] = {-2, -1, 1, 2};
    for (std::size_t step = 0; step < 2 * n; ++step) {
        const std::size_t i = static_cast<std::size_t>(rng() % n);
        std::size_t j = static_cast<std::size_t>(rng() % (n - 1));
        if (j >= i) ++j;
        const long long t = ts[rng() % 4];
        sym_move(m, i, j, FieldElement::from_integer(m.field(), t));
    }
    return m;
}

// A diagonal entry is easy when its square class is cheap to extract:
// once the small primes are stripped, the leftover must be trivial, a
// prime, a prime power, or small enough that rho factors it in guaranteed
// time.  Entries that would merely be feasible under the full factoring
// budget are rejected here, because probing them costs seconds while
// remixing the basis and diagonalizing again costs milliseconds.
bool entry_easy(const FieldElement& x)
{
    const BigRat q = x.rational_value();
    for (BigInt part : {numerator(q), denominator(q)}) {
        BigInt c = rough_cofactor(part);
        if (c == 1) continue;
        if (is_probable_prime(c)) continue;
        if (msb(c) < 64) continue;
        if (auto pp = perfect_power(c)) {
            c = pp->first;
            if (is_probable_prime(c) || msb(c) < 64) continue;
        }
        return false;
    }
    return true;
}

// Last-resort acceptance: the square class only has to be reachable within
// the factoring budget, however long that probe takes.
bool entry_feasible(const FieldElement& x)
{
    const BigRat q = x.rational_value();
    return factorization_feasible(numerator(q)) &&
           factorization_feasible(denominator(q));
}

} // namespace

UnstableClass gram_to_class(const GramMatrix& m)
{
    const Field k = m.field();
    if (m.dimension() == 0) return gw_zero(k);

    if (k.kind() == Field::Kind::prime_field) {
        auto diag = congruent_diagonal(m.entries());
        return UnstableClass(DiagonalForm(k, std::move(diag)), m.det());
    }

    constexpr unsigned easy_attempts = 40;
    for (unsigned attempt = 0; attempt < easy_attempts; ++attempt) {
        Mat start = (attempt == 0) ? m.entries() : remix(m.entries(), attempt);
        auto diag = congruent_diagonal(std::move(start));
        if (std::all_of(diag.begin(), diag.end(), entry_easy))
            return UnstableClass(DiagonalForm(k, std::move(diag)), m.det());
    }
    // No basis gave an easy diagonal, so revisit the first few candidates
    // and let the factoring budget decide whether they are usable at all.
    constexpr unsigned budget_attempts = 8;
    for (unsigned attempt = 0; attempt < budget_attempts; ++attempt) {
        Mat start = (attempt == 0) ? m.entries() : remix(m.entries(), attempt);
        auto diag = congruent_diagonal(std::move(start));
        if (std::all_of(diag.begin(), diag.end(), entry_feasible))
            return UnstableClass(DiagonalForm(k, std::move(diag)), m.det());
    }
    throw DomainError("could not reach a diagonalization with factorable "
                      "entries; square classes are uncertifiable");
}

namespace {

// Stable comparison data: the two genuine forms whose isometry decides
// whether the virtual forms agree (first positives with second negatives,
// and vice versa).
struct PairedForms {
    std::vector<FieldElement> a, b;
};

PairedForms cross_pair(const UnstableClass& x, const UnstableClass& y)
{
    PairedForms p;
    p.a = x.form().positive_entries();
    const auto& yn = y.form().negative_entries();
    p.a.insert(p.a.end(), yn.begin(), yn.end());
    p.b = y.form().positive_entries();
    const auto& xn = x.form().negative_entries();
    p.b.insert(p.b.end(), xn.begin(), xn.end());
    return p;
}

} // namespace

bool gw_equal(const UnstableClass& a, const UnstableClass& b)
{
    if (a.field() != b.field())
        throw DomainError("cannot compare classes over different fields");
    const Field k = a.field();

    // The unit coordinate multiplies on the nose, so equality there is
    // exact equality of field elements.
    if (a.unit() != b.unit()) return false;

    PairedForms p = cross_pair(a, b);
    if (p.a.size() != p.b.size()) return false;
    if (p.a.empty()) return true;

    // Same multiset of entries: isometric without any further work.
    {
        std::vector<FieldElement> sa = p.a, sb = p.b;
        std::sort(sa.begin(), sa.end(), canonical_less);
        std::sort(sb.begin(), sb.end(), canonical_less);
        if (sa == sb) return true;
    }

    // Discriminants must agree; compare by squareness of the product so
    // neither product is ever reduced to a canonical representative.
    FieldElement prod = FieldElement::from_integer(k, 1);
    for (const auto& e : p.a) prod *= e;
    for (const auto& e : p.b) prod *= e;
    if (!is_square(prod)) return false;

    // Over a finite field rank and discriminant already classify.
    if (k.kind() == Field::Kind::prime_field) return true;

    const DiagonalForm fa(k, p.a), fb(k, p.b);
    if (fa.signature() != fb.signature()) return false;

    // Hasse invariants can only differ at 2 and at odd primes dividing
    // some entry; everywhere else every symbol involved is trivial.
    std::set<BigInt> odd_primes;
    for (const auto* side : {&p.a, &p.b}) {
        for (const auto& e : *side) {
            const BigRat q = e.rational_value();
            for (const BigInt& part : {numerator(q), denominator(q)}) {
                for (const auto& [prime, mult] : factor_integer(abs_int(part))) {
                    (void)mult;
                    if (prime > 2) odd_primes.insert(prime);
                }
            }
        }
    }
    if (hasse_invariant(fa, Place::finite(2)) !=
        hasse_invariant(fb, Place::finite(2)))
        return false;
    for (const BigInt& prime : odd_primes) {
        const Place v = Place::finite(prime);
        if (hasse_invariant(fa, v) != hasse_invariant(fb, v)) return false;
    }
    // Equal rank, discriminant, signature and Hasse invariants at every
    // place decide isometry over Q.
    return true;
}

} // namespace a1deg
