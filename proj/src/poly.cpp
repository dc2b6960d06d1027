#include "a1deg/poly.hpp"

#include <algorithm>
#include <set>

namespace a1deg {

Polynomial::Polynomial(const Field& k, std::vector<FieldElement> coeffs)
    : field_(k), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field_)
            throw DomainError("polynomial coefficient from a different field");
    }
    trim();
}

Polynomial Polynomial::constant(const FieldElement& c) {
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x(const Field& k) {
    return Polynomial(
        k, {FieldElement::from_integer(k, 0), FieldElement::from_integer(k, 1)});
}

Polynomial Polynomial::linear_root(const FieldElement& r) {
    return Polynomial(r.field(),
                      {-r, FieldElement::from_integer(r.field(), 1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& o) const {
    if (field_ != o.field_)
        throw DomainError("mixed-field polynomial arithmetic");
}

bool Polynomial::is_monic() const {
    return !is_zero() && coeffs_.back().is_one();
}

FieldElement Polynomial::coeff(std::size_t i) const {
    if (i < coeffs_.size())
        return coeffs_[i];
    return FieldElement::from_integer(field_, 0);
}

const FieldElement& Polynomial::leading_coefficient() const {
    if (is_zero())
        throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        c.push_back(-a);
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    require_same_field(o);
    std::vector<FieldElement> c;
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    c.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        c.push_back(coeff(i) + o.coeff(i));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_field(o);
    if (is_zero() || o.is_zero())
        return Polynomial(field_);
    std::vector<FieldElement> c(coeffs_.size() + o.coeffs_.size() - 1,
                                FieldElement::from_integer(field_, 0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement& s) const {
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_)
        c.push_back(a * s);
    return Polynomial(field_, std::move(c));
}

bool Polynomial::operator==(const Polynomial& o) const {
    return field_ == o.field_ && coeffs_ == o.coeffs_;
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
    FieldElement acc = FieldElement::from_integer(field_, 0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return Polynomial(field_);
    std::vector<FieldElement> c;
    c.reserve(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * FieldElement::from_integer(field_, BigInt(i)));
    return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::taylor_shift(const FieldElement& r) const {
    // Horner in (x + r): acc <- acc*(x + r) + c_i from the top down.
    Polynomial acc(field_);
    Polynomial shift(field_, {r, FieldElement::from_integer(field_, 1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * shift + Polynomial::constant(*it);
    return acc;
}

std::string Polynomial::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        FieldElement c = coeff(static_cast<std::size_t>(i));
        if (c.is_zero())
            continue;
        std::string cs = c.to_string();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative)
            cs = cs.substr(1);
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit_coeff = (cs == "1");
        if (i == 0) {
            out += cs;
        } else {
            if (!unit_coeff)
                out += cs + "*";
            out += (i == 1) ? "x" : "x^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a,
                                         const Polynomial& b) {
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.field() != b.field())
        throw DomainError("mixed-field polynomial division");
    const Field& k = a.field();
    if (a.degree() < b.degree())
        return {Polynomial(k), a};
    std::vector<FieldElement> rem;
    for (long i = 0; i <= a.degree(); ++i)
        rem.push_back(a.coeff(static_cast<std::size_t>(i)));
    long qdeg = a.degree() - b.degree();
    std::vector<FieldElement> q(static_cast<std::size_t>(qdeg) + 1,
                                FieldElement::from_integer(k, 0));
    FieldElement lb = b.leading_coefficient();
    for (long i = qdeg; i >= 0; --i) {
        FieldElement c =
            rem[static_cast<std::size_t>(i + b.degree())] / lb;
        q[static_cast<std::size_t>(i)] = c;
        if (c.is_zero())
            continue;
        for (long j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -=
                c * b.coeff(static_cast<std::size_t>(j));
    }
    rem.resize(static_cast<std::size_t>(std::max<long>(b.degree(), 0)));
    return {Polynomial(k, std::move(q)), Polynomial(k, std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd(0, 0) is undefined");
    Polynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divrem(x, y);
        x = y;
        y = r;
    }
    return x * x.leading_coefficient().inverse();
}

Polynomial product_from_roots(const Field& k,
                              const std::vector<RootDatum>& roots) {
    Polynomial p =
        Polynomial::constant(FieldElement::from_integer(k, 1));
    for (const auto& rd : roots) {
        if (rd.multiplicity < 1)
            throw DomainError("root multiplicity must be positive");
        Polynomial lin = Polynomial::linear_root(rd.root);
        for (int i = 0; i < rd.multiplicity; ++i)
            p = p * lin;
    }
    return p;
}

RationalFunction::RationalFunction(const Polynomial& f, const Polynomial& g)
    : numerator_(f), denominator_(g),
      lc_(FieldElement::from_integer(f.field(), 1)) {
    if (f.field() != g.field())
        throw DomainError("numerator and denominator over different fields");
    if (f.is_zero())
        throw NotPointed("zero numerator");
    if (g.is_zero())
        throw NotPointed("zero denominator");
    if (f.degree() <= g.degree())
        throw NotPointed("deg(" + f.to_string() + ") <= deg(" +
                         g.to_string() + ")");
    Polynomial d = poly_gcd(f, g);
    if (d.degree() > 0)
        throw NotReduced("common factor " + d.to_string());
    lc_ = f.leading_coefficient();
    FieldElement inv = lc_.inverse();
    numerator_ = f * inv;
    denominator_ = g * inv;
}

FieldElement RationalFunction::evaluate(const FieldElement& x) const {
    FieldElement den = denominator_.evaluate(x);
    if (den.is_zero())
        throw DomainError("pole at " + x.to_string());
    return numerator_.evaluate(x) / den;
}

std::string RationalFunction::to_string() const {
    return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() +
           ")";
}

RationalFunction normalize_pointed(const Polynomial& f, const Polynomial& g) {
    return RationalFunction(f, g);
}

std::pair<Polynomial, Polynomial> bezout_pair(const Polynomial& f,
                                              const Polynomial& g) {
    if (!f.is_monic() || f.degree() < 1)
        throw DomainError("bezout_pair: f must be monic of degree >= 1");
    if (g.degree() >= f.degree())
        throw DomainError("bezout_pair: deg g must be below deg f");
    const Field& k = f.field();
    // Extended Euclid for f*u0 + g*v0 = gcd.
    Polynomial r0 = f, r1 = g;
    Polynomial u0 = Polynomial::constant(FieldElement::from_integer(k, 1));
    Polynomial u1 = Polynomial(k);
    Polynomial v0 = Polynomial(k);
    Polynomial v1 = Polynomial::constant(FieldElement::from_integer(k, 1));
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Polynomial u2 = u0 - q * u1;
        Polynomial v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.degree() != 0)
        throw DomainError("bezout_pair: f and g are not coprime (gcd " +
                          r0.to_string() + ")");
    FieldElement scale = r0.leading_coefficient().inverse();
    u0 = u0 * scale;
    v0 = v0 * scale;
    // Normalize to the unique representative: v = v0 mod f, then
    // u = (1 - g*v)/f.  The degree bounds follow.
    Polynomial v = divrem(v0, f).second;
    Polynomial one = Polynomial::constant(FieldElement::from_integer(k, 1));
    auto [u, rem] = divrem(one - g * v, f);
    if (!rem.is_zero())
        throw InternalError("bezout_pair: exact division failed");
    if (u.degree() > f.degree() - 2 || v.degree() > f.degree() - 1)
        throw InternalError("bezout_pair: degree bounds violated");
    return {u, v};
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> divs = {1};
    for (const auto& [p, e] : factor_integer(n)) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                divs.push_back(divs[j] * pk);
        }
    }
    return divs;
}

// Multiplicity of r as a root of f, deflating f in place.
int deflate_root(Polynomial& f, const FieldElement& r) {
    int mult = 0;
    Polynomial lin = Polynomial::linear_root(r);
    while (true) {
        auto [q, rem] = divrem(f, lin);
        if (!rem.is_zero())
            break;
        f = q;
        ++mult;
    }
    return mult;
}

std::pair<std::vector<RootDatum>, Polynomial>
rational_roots_over_q(const Polynomial& f) {
    const Field& k = f.field();
    Polynomial work = f;
    std::vector<RootDatum> roots;

    FieldElement zero = FieldElement::from_integer(k, 0);
    int m0 = deflate_root(work, zero);
    if (m0 > 0)
        roots.push_back({zero, m0});

    if (work.degree() >= 1) {
        // Primitive integer model: clear denominators, strip content.
        BigInt den_lcm = 1;
        for (long i = 0; i <= work.degree(); ++i) {
            const BigRat c =
                work.coeff(static_cast<std::size_t>(i)).rational_value();
            den_lcm = lcm(den_lcm, denominator(c));
        }
        std::vector<BigInt> c;
        BigInt content = 0;
        for (long i = 0; i <= work.degree(); ++i) {
            const BigRat q =
                work.coeff(static_cast<std::size_t>(i)).rational_value();
            BigInt v = numerator(q) * (den_lcm / denominator(q));
            c.push_back(v);
            content = gcd(content, v);
        }
        for (auto& v : c)
            v /= content;
        const BigInt& c0 = c.front();
        const BigInt& cn = c.back();
        BigInt f_at_1 = 0, f_at_m1 = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            f_at_1 += c[i];
            f_at_m1 += (i & 1) ? -c[i] : c[i];
        }
        std::size_t n = c.size() - 1;
        for (const BigInt& q : divisors_of(cn)) {
            std::vector<BigInt> qpow(n + 1);
            qpow[0] = 1;
            for (std::size_t i = 1; i <= n; ++i)
                qpow[i] = qpow[i - 1] * q;
            for (const BigInt& p_abs : divisors_of(c0)) {
                for (int s : {1, -1}) {
                    BigInt p = s * p_abs;
                    if (gcd(abs(p), q) != 1)
                        continue;
                    // Classical filters: (p - q*a) | f(a) for integer a.
                    if (p != q && f_at_1 % (p - q) != 0)
                        continue;
                    if (p != -q && f_at_m1 % (p + q) != 0)
                        continue;
                    // q^n f(p/q) via Horner in p with q-power weights.
                    BigInt acc = 0;
                    for (std::size_t i = n + 1; i-- > 0;)
                        acc = acc * p + c[i] * qpow[n - i];
                    if (acc != 0)
                        continue;
                    FieldElement r =
                        FieldElement::from_rational(k, BigRat(p, q));
                    int m = deflate_root(work, r);
                    if (m > 0)
                        roots.push_back({r, m});
                }
            }
            if (work.degree() < 1)
                break;
        }
    }
    return {std::move(roots), std::move(work)};
}

std::pair<std::vector<RootDatum>, Polynomial>
rational_roots_over_fp(const Polynomial& f) {
    const Field& k = f.field();
    std::uint64_t p = k.modulus();
    if (p > (1u << 20))
        throw DomainError(
            "rational_roots: exhaustive search over F_p needs a desk-scale p");
    Polynomial work = f;
    std::vector<RootDatum> roots;
    for (std::uint64_t a = 0; a < p && work.degree() >= 1; ++a) {
        FieldElement r = FieldElement::from_integer(k, BigInt(a));
        if (!work.evaluate(r).is_zero())
            continue;
        int m = deflate_root(work, r);
        roots.push_back({r, m});
    }
    return {std::move(roots), std::move(work)};
}

} // namespace

std::pair<std::vector<RootDatum>, Polynomial>
rational_roots(const Polynomial& f) {
    if (f.is_zero())
        throw DomainError("rational_roots of the zero polynomial");
    if (!f.is_monic())
        throw DomainError("rational_roots expects a monic polynomial");
    auto result = f.field().is_rationals() ? rational_roots_over_q(f)
                                           : rational_roots_over_fp(f);
    std::sort(result.first.begin(), result.first.end(),
              [](const RootDatum& a, const RootDatum& b) {
                  return canonical_less(a.root, b.root);
              });
    return result;
}

const FieldElement& PrincipalPart::A(int j) const {
    if (j < 1 || j > multiplicity)
        throw DomainError("principal part index out of range");
    return coefficients[static_cast<std::size_t>(multiplicity - j)];
}

PrincipalPart laurent_principal_part(const RationalFunction& F,
                                     const FieldElement& r) {
    if (F.field() != r.field())
        throw DomainError("laurent_principal_part: point from another field");
    const Field& k = F.field();
    Polynomial fs = F.numerator().taylor_shift(r);
    int m = 0;
    while (fs.coeff(static_cast<std::size_t>(m)).is_zero())
        ++m;
    if (m == 0)
        throw DomainError(r.to_string() + " is not a zero of the numerator");
    // f(x + r) = x^m * u(x) with u(0) != 0; the principal part of g/f at r
    // is read off the power series  g(x + r) * u(x)^{-1}  below order m.
    std::vector<FieldElement> u;
    for (long i = m; i <= fs.degree(); ++i)
        u.push_back(fs.coeff(static_cast<std::size_t>(i)));
    std::vector<FieldElement> inv(static_cast<std::size_t>(m),
                                  FieldElement::from_integer(k, 0));
    FieldElement u0inv = u[0].inverse();
    inv[0] = u0inv;
    for (int t = 1; t < m; ++t) {
        FieldElement s = FieldElement::from_integer(k, 0);
        for (int i = 1; i <= t; ++i) {
            if (static_cast<std::size_t>(i) < u.size())
                s += u[static_cast<std::size_t>(i)] *
                     inv[static_cast<std::size_t>(t - i)];
        }
        inv[static_cast<std::size_t>(t)] = -s * u0inv;
    }
    Polynomial gs = F.denominator().taylor_shift(r);
    std::vector<FieldElement> c(static_cast<std::size_t>(m),
                                FieldElement::from_integer(k, 0));
    for (int t = 0; t < m; ++t) {
        FieldElement s = FieldElement::from_integer(k, 0);
        for (int i = 0; i <= t; ++i)
            s += gs.coeff(static_cast<std::size_t>(i)) *
                 inv[static_cast<std::size_t>(t - i)];
        c[static_cast<std::size_t>(t)] = s;
    }
    // c[t] is the coefficient of x^{t-m}, i.e. A_{r, m-t}.
    if (c[0].is_zero())
        throw InternalError("principal part lost its leading coefficient");
    return PrincipalPart{r, m, std::move(c)};
}

} // namespace a1deg
