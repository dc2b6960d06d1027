#pragma once

#include "a1deg/arith.hpp"
#include "a1deg/errors.hpp"

#include <cstdint>
#include <string>

namespace a1deg {

// Ground field: the rationals, or a prime field F_p with p an odd prime.
// Characteristic 2 is rejected; symmetric bilinear forms and quadratic
// forms part ways there.
class Field {
  public:
    enum class Kind { rationals, prime_field };

    static Field rationals() { return Field(Kind::rationals, 0); }
    static Field prime_field(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::rationals; }
    bool is_prime_field() const { return kind_ == Kind::prime_field; }
    std::uint64_t modulus() const;

    std::string to_string() const;

    bool operator==(const Field& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

  private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

// A scalar tagged with its field.  Exact rational over Q, a residue over
// F_p.  Arithmetic between elements of different fields is rejected.
class FieldElement {
  public:
    FieldElement() : field_(Field::rationals()), q_(0), r_(0) {}

    static FieldElement from_rational(const Field& k, const BigRat& value);
    static FieldElement from_integer(const Field& k, const BigInt& value);
    static FieldElement from_integer(const Field& k, long long value) {
        return from_integer(k, BigInt(value));
    }

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    // Q accessors.
    const BigRat& rational_value() const;
    int sign() const; // over Q only
    // F_p accessor.
    std::uint64_t residue() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
    FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

    FieldElement inverse() const;
    // e may be negative; the base must then be nonzero.
    FieldElement pow(long long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    FieldElement(const Field& k, BigRat q, std::uint64_t r)
        : field_(k), q_(std::move(q)), r_(r) {}
    void require_same_field(const FieldElement& o) const;

    Field field_;
    BigRat q_;        // value over Q
    std::uint64_t r_; // value over F_p
};

// Fixed total order used wherever a reproducible enumeration of field
// elements is needed (root lists, block layouts).  Over Q it compares
// (numerator, denominator) lexicographically; over F_p, the residues.
bool canonical_less(const FieldElement& a, const FieldElement& b);

// A place of Q: the real place or a finite prime (2 allowed).
class Place {
  public:
    enum class Kind { real, finite };

    static Place real() { return Place(Kind::real, 0); }
    static Place finite(const BigInt& p);

    Kind kind() const { return kind_; }
    bool is_real() const { return kind_ == Kind::real; }
    const BigInt& prime() const;
    std::string to_string() const;

    bool operator==(const Place& o) const {
        return kind_ == o.kind_ && p_ == o.p_;
    }
    bool operator<(const Place& o) const {
        if (kind_ != o.kind_)
            return kind_ == Kind::real;
        return p_ < o.p_;
    }

  private:
    Place(Kind k, BigInt p) : kind_(k), p_(std::move(p)) {}
    Kind kind_;
    BigInt p_;
};

// (a/p) for an odd prime p, via Euler's criterion.  Returns -1, 0 or 1.
int legendre_symbol(const BigInt& a, const BigInt& p);

// Hilbert symbol (a, b)_v over Q: +1 iff z^2 = a x^2 + b y^2 has a
// nontrivial solution in the completion at v.  a, b nonzero.
int hilbert_symbol(const FieldElement& a, const FieldElement& b,
                   const Place& v);

// Canonical square-class representative: over Q a squarefree integer with
// the sign of the input, over F_p the unit 1 or the least quadratic
// nonresidue.  Zero is rejected.
FieldElement square_class_reduce(const FieldElement& a);

// Exact squareness test (zero counts as a square).
bool is_square(const FieldElement& a);

} // namespace a1deg
