#include "a1deg/field.hpp"

#include <limits>

namespace a1deg {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1)
            r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0)
        throw DomainError("division by zero in F_" + std::to_string(p));
    // p is prime, so Fermat does it.
    return powmod_u64(a, p - 2, p);
}

std::uint64_t reduce_i64(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0)
        r += p;
    return r.convert_to<std::uint64_t>();
}

} // namespace

Field Field::prime_field(std::uint64_t p) {
    if (p == 2)
        throw DomainError("prime fields of characteristic 2 are not supported");
    if (p >= (std::uint64_t(1) << 62))
        throw DomainError("prime modulus too large");
    if (!is_probable_prime(BigInt(p)))
        throw DomainError("modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::prime_field, p);
}

std::uint64_t Field::modulus() const {
    if (kind_ != Kind::prime_field)
        throw DomainError("modulus() on the rationals");
    return p_;
}

std::string Field::to_string() const {
    return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

FieldElement FieldElement::from_rational(const Field& k, const BigRat& value) {
    if (k.is_rationals())
        return FieldElement(k, value, 0);
    std::uint64_t p = k.modulus();
    std::uint64_t num = reduce_i64(numerator(value), p);
    std::uint64_t den = reduce_i64(denominator(value), p);
    if (den == 0)
        throw DomainError("denominator of " + value.str() + " vanishes in " +
                          k.to_string());
    return FieldElement(k, 0, mulmod_u64(num, invmod_u64(den, p), p));
}

FieldElement FieldElement::from_integer(const Field& k, const BigInt& value) {
    if (k.is_rationals())
        return FieldElement(k, BigRat(value), 0);
    return FieldElement(k, 0, reduce_i64(value, k.modulus()));
}

bool FieldElement::is_zero() const {
    return field_.is_rationals() ? q_.is_zero() : r_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

const BigRat& FieldElement::rational_value() const {
    if (!field_.is_rationals())
        throw DomainError("rational_value() on an element of " +
                          field_.to_string());
    return q_;
}

int FieldElement::sign() const {
    const BigRat& v = rational_value();
    return v.is_zero() ? 0 : (v < 0 ? -1 : 1);
}

std::uint64_t FieldElement::residue() const {
    if (!field_.is_prime_field())
        throw DomainError("residue() on a rational element");
    return r_;
}

void FieldElement::require_same_field(const FieldElement& o) const {
    if (field_ != o.field_)
        throw DomainError("mixed-field arithmetic: " + field_.to_string() +
                          " vs " + o.field_.to_string());
}

FieldElement FieldElement::operator-() const {
    if (field_.is_rationals())
        return FieldElement(field_, -q_, 0);
    std::uint64_t p = field_.modulus();
    return FieldElement(field_, 0, r_ == 0 ? 0 : p - r_);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(o);
    if (field_.is_rationals())
        return FieldElement(field_, q_ + o.q_, 0);
    std::uint64_t p = field_.modulus();
    std::uint64_t s = r_ + o.r_; // p < 2^62, no overflow
    if (s >= p)
        s -= p;
    return FieldElement(field_, 0, s);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return *this + (-o);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(o);
    if (field_.is_rationals())
        return FieldElement(field_, q_ * o.q_, 0);
    return FieldElement(field_, 0, mulmod_u64(r_, o.r_, field_.modulus()));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
    return *this * o.inverse();
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw DomainError("inverse of zero");
    if (field_.is_rationals())
        return FieldElement(field_, 1 / q_, 0);
    return FieldElement(field_, 0, invmod_u64(r_, field_.modulus()));
}

FieldElement FieldElement::pow(long long e) const {
    if (e < 0)
        return inverse().pow(-e);
    FieldElement r = from_integer(field_, 1);
    FieldElement base = *this;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k) {
        if (k & 1)
            r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (field_ != o.field_)
        return false;
    return field_.is_rationals() ? q_ == o.q_ : r_ == o.r_;
}

std::string FieldElement::to_string() const {
    if (field_.is_prime_field())
        return std::to_string(r_);
    if (denominator(q_) == 1)
        return numerator(q_).str();
    return numerator(q_).str() + "/" + denominator(q_).str();
}

bool canonical_less(const FieldElement& a, const FieldElement& b) {
    if (a.field() != b.field())
        throw DomainError("canonical_less across fields");
    if (a.field().is_prime_field())
        return a.residue() < b.residue();
    const BigRat &x = a.rational_value(), &y = b.rational_value();
    if (numerator(x) != numerator(y))
        return numerator(x) < numerator(y);
    return denominator(x) < denominator(y);
}

Place Place::finite(const BigInt& p) {
    if (p < 2 || !is_probable_prime(p))
        throw DomainError("place " + p.str() + " is not prime");
    return Place(Kind::finite, p);
}

const BigInt& Place::prime() const {
    if (kind_ != Kind::finite)
        throw DomainError("prime() on the real place");
    return p_;
}

std::string Place::to_string() const {
    return kind_ == Kind::real ? "infinity" : p_.str();
}

int legendre_symbol(const BigInt& a, const BigInt& p) {
    if (p < 3 || !bit_test(p, 0))
        throw DomainError("legendre_symbol: modulus must be an odd prime");
    if (!is_probable_prime(p))
        throw DomainError("legendre_symbol: " + p.str() + " is composite");
    BigInt r = a % p;
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    BigInt e = power_mod(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

namespace {

// Valuation and unit part of a nonzero rational at p: a = p^v * u.
std::pair<long, BigRat> split_at(const BigRat& a, const BigInt& p) {
    long vn = padic_valuation(numerator(a), p);
    long vd = padic_valuation(denominator(a), p);
    BigRat u(numerator(a) / pow(p, vn), denominator(a) / pow(p, vd));
    return {vn - vd, u};
}

// Residue of a p-adic unit u modulo m (m = p or a power of 2), as a
// nonnegative integer.
BigInt unit_residue(const BigRat& u, const BigInt& m) {
    BigInt num = numerator(u) % m;
    if (num < 0)
        num += m;
    BigInt den = denominator(u) % m;
    // den is invertible mod m here; a crude scan suffices for tiny m,
    // and power_mod covers the prime case.
    if (m == 8 || m == 4) {
        for (BigInt i = 1; i < m; ++i)
            if (i * den % m == 1)
                return num * i % m;
        throw InternalError("unit_residue: denominator not invertible");
    }
    return num * power_mod(den, m - 2, m) % m;
}

int legendre_of_unit(const BigRat& u, const BigInt& p) {
    return legendre_symbol(unit_residue(u, p), p);
}

} // namespace

int hilbert_symbol(const FieldElement& a, const FieldElement& b,
                   const Place& v) {
    if (!a.field().is_rationals() || !b.field().is_rationals())
        throw DomainError("hilbert_symbol is defined over Q");
    if (a.is_zero() || b.is_zero())
        throw DomainError("hilbert_symbol: arguments must be nonzero");
    const BigRat& x = a.rational_value();
    const BigRat& y = b.rational_value();
    if (v.is_real())
        return (x < 0 && y < 0) ? -1 : 1;
    const BigInt& p = v.prime();
    auto [alpha, u] = split_at(x, p);
    auto [beta, w] = split_at(y, p);
    if (p == 2) {
        // (2^a u, 2^b w)_2 = (-1)^{eps(u)eps(w) + a*omega(w) + b*omega(u)}
        BigInt u8 = unit_residue(u, BigInt(8));
        BigInt w8 = unit_residue(w, BigInt(8));
        int eps_u = (u8 % 4 == 3) ? 1 : 0;
        int eps_w = (w8 % 4 == 3) ? 1 : 0;
        int om_u = (u8 == 3 || u8 == 5) ? 1 : 0;
        int om_w = (w8 == 3 || w8 == 5) ? 1 : 0;
        long e = long(eps_u) * eps_w + alpha * om_w + beta * om_u;
        return (e & 1) ? -1 : 1;
    }
    // (p^a u, p^b w)_p = (-1)^{ab(p-1)/2} (u/p)^b (w/p)^a
    int result = 1;
    if ((alpha & 1) && (beta & 1) && bit_test((p - 1) / 2, 0))
        result = -result;
    if (beta & 1)
        result *= legendre_of_unit(u, p);
    if (alpha & 1)
        result *= legendre_of_unit(w, p);
    return result;
}

FieldElement square_class_reduce(const FieldElement& a) {
    if (a.is_zero())
        throw DomainError("square_class_reduce: zero has no square class");
    const Field& k = a.field();
    if (k.is_rationals()) {
        const BigRat& q = a.rational_value();
        // n/d and n*d differ by the square d^2.
        BigInt nd = numerator(q) * denominator(q);
        return FieldElement::from_integer(k, squarefree_part(nd));
    }
    std::uint64_t p = k.modulus();
    if (powmod_u64(a.residue(), (p - 1) / 2, p) == 1)
        return FieldElement::from_integer(k, 1);
    for (std::uint64_t n = 2;; ++n) {
        if (powmod_u64(n, (p - 1) / 2, p) != 1)
            return FieldElement::from_integer(k, BigInt(n));
    }
}

bool is_square(const FieldElement& a) {
    if (a.is_zero())
        return true;
    if (a.field().is_rationals()) {
        const BigRat& q = a.rational_value();
        return q > 0 && is_perfect_square(numerator(q)) &&
               is_perfect_square(denominator(q));
    }
    std::uint64_t p = a.field().modulus();
    return powmod_u64(a.residue(), (p - 1) / 2, p) == 1;
}

} // namespace a1deg
