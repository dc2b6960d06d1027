#pragma once

#include "a1deg/field.hpp"

#include <utility>
#include <vector>

namespace a1deg {

// Dense univariate polynomial over a fixed field.  Coefficients ascending;
// the zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    explicit Polynomial(const Field& k) : field_(k) {}
    Polynomial(const Field& k, std::vector<FieldElement> coeffs);

    static Polynomial zero(const Field& k) { return Polynomial(k); }
    static Polynomial constant(const FieldElement& c);
    static Polynomial x(const Field& k);
    // (x - r), handy for building split polynomials.
    static Polynomial linear_root(const FieldElement& r);

    const Field& field() const { return field_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const;

    // Coefficient of x^i; zero beyond the degree.
    FieldElement coeff(std::size_t i) const;
    const FieldElement& leading_coefficient() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const FieldElement& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    FieldElement evaluate(const FieldElement& x) const;
    Polynomial derivative() const;
    // p(x + r).
    Polynomial taylor_shift(const FieldElement& r) const;

    std::string to_string() const;

  private:
    void trim();
    void require_same_field(const Polynomial& o) const;

    Field field_;
    std::vector<FieldElement> coeffs_;
};

// Quotient and remainder with deg(rem) < deg(divisor).  Divisor nonzero.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                         const Polynomial& b);

// Monic gcd; gcd(0, 0) is rejected.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// A root with its multiplicity.
struct RootDatum {
    FieldElement root;
    int multiplicity = 1;
};

// prod (x - r_i)^{e_i}.
Polynomial product_from_roots(const Field& k,
                              const std::vector<RootDatum>& roots);

// A pointed rational self-map of the projective line: f/g with
// deg f > deg g >= 0 and gcd(f, g) = 1, stored monically normalized.
// The constructor performs the normalization; the scale it divided out is
// kept as original_leading_coefficient.
class RationalFunction {
  public:
    RationalFunction(const Polynomial& f, const Polynomial& g);

    const Field& field() const { return numerator_.field(); }
    const Polynomial& numerator() const { return numerator_; }
    const Polynomial& denominator() const { return denominator_; }
    const FieldElement& original_leading_coefficient() const { return lc_; }
    long degree() const { return numerator_.degree(); }

    FieldElement evaluate(const FieldElement& x) const;
    std::string to_string() const;

  private:
    Polynomial numerator_;
    Polynomial denominator_;
    FieldElement lc_;
};

// Same as the RationalFunction constructor; kept as a named entry point.
RationalFunction normalize_pointed(const Polynomial& f, const Polynomial& g);

// The unique pair (u, v) with f*u + g*v = 1, deg u <= deg f - 2 and
// deg v <= deg f - 1.  Requires f monic of degree >= 1, deg g < deg f,
// gcd(f, g) = 1.
std::pair<Polynomial, Polynomial> bezout_pair(const Polynomial& f,
                                              const Polynomial& g);

// All roots of a monic polynomial in its ground field, with
// multiplicities, sorted canonically, plus the monic rootless cofactor.
// Over Q this runs the rational root theorem on the primitive integer
// model; over F_p it evaluates exhaustively.
std::pair<std::vector<RootDatum>, Polynomial>
rational_roots(const Polynomial& f);

// Principal part of g/f at a zero r of f of multiplicity m:
// coefficients A_{r,m}, ..., A_{r,1} with
// g/f = sum_j A_{r,j}/(x-r)^j + (regular at r).
struct PrincipalPart {
    FieldElement point;
    int multiplicity = 0;
    std::vector<FieldElement> coefficients; // [A_m, A_{m-1}, ..., A_1]

    // A_{r,j} for 1 <= j <= multiplicity.
    const FieldElement& A(int j) const;
};

PrincipalPart laurent_principal_part(const RationalFunction& F,
                                     const FieldElement& r);

} // namespace a1deg
