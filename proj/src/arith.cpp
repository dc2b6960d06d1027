#include "a1deg/arith.hpp"
#include "a1deg/errors.hpp"

#include <algorithm>
#include <array>

namespace a1deg {

namespace {

// Odd primes below 10^6, built once.  ~78k entries, trivial memory.
const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1000000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                out.push_back(i);
                for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
                    composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

} // namespace

BigInt power_mod(BigInt a, BigInt e, const BigInt& m) {
    if (m <= 1)
        throw DomainError("power_mod: modulus must exceed 1");
    if (e < 0)
        throw DomainError("power_mod: negative exponent");
    a %= m;
    if (a < 0)
        a += m;
    BigInt r = 1;
    while (e > 0) {
        if (bit_test(e, 0))
            r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

bool is_probable_prime(const BigInt& n) {
    if (n < 2)
        return false;
    static constexpr std::array<unsigned, 12> bases = {2,  3,  5,  7,  11, 13,
                                                       17, 19, 23, 29, 31, 37};
    for (unsigned b : bases) {
        if (n % b == 0)
            return n == b;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    // The base set is deterministic for n < 3.3*10^24; beyond that it is a
    // strong probable-prime test, which is what the callers expect.
    for (unsigned b : bases) {
        BigInt x = power_mod(b, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

namespace {

BigInt integer_nth_root(const BigInt& n, unsigned e) {
    // Newton iteration with a bit-length seed; exact floor root.
    if (n == 0)
        return 0;
    BigInt x = BigInt(1) << (msb(n) / e + 1);
    while (true) {
        BigInt xe = pow(x, e - 1);
        BigInt next = ((e - 1) * x * xe + n) / (e * xe);
        if (next >= x)
            break;
        x = next;
    }
    while (pow(x, e) > n)
        --x;
    return x;
}

} // namespace

std::optional<std::pair<BigInt, unsigned>> perfect_power(const BigInt& n) {
    if (n < 4)
        return std::nullopt;
    unsigned maxe = msb(n) + 1;
    for (unsigned e = maxe; e >= 2; --e) {
        BigInt b = integer_nth_root(n, e);
        if (b >= 2 && pow(b, e) == n)
            return std::make_pair(b, e);
    }
    return std::nullopt;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0)
        return false;
    if (n == 0)
        return true;
    // Cheap residue filter before the exact square root.
    static constexpr std::array<bool, 64> sq64 = [] {
        std::array<bool, 64> t{};
        for (int i = 0; i < 64; ++i)
            t[(i * i) & 63] = true;
        return t;
    }();
    if (!sq64[static_cast<std::size_t>(n & 63)])
        return false;
    BigInt r = sqrt(n);
    return r * r == n;
}

namespace {

// Pollard-Brent rho.  Returns a nontrivial factor or nullopt when the
// iteration budget runs out.  n must be odd, composite, not a prime power.
std::optional<BigInt> brent_rho(const BigInt& n, long budget) {
    for (unsigned c = 1; c <= 8; ++c) {
        BigInt y = 2, q = 1, g = 1, x = 0, ys = 0;
        long r = 1;
        long spent = 0;
        const long per_seed = budget / 8;
        while (g == 1 && spent < per_seed) {
            x = y;
            for (long i = 0; i < r; ++i)
                y = (y * y + c) % n;
            long k = 0;
            while (k < r && g == 1 && spent < per_seed) {
                ys = y;
                long chunk = std::min<long>(128, r - k);
                for (long i = 0; i < chunk; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                spent += chunk;
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            g = 1;
            long extra = 0;
            while (g == 1 && extra < per_seed) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                ++extra;
            }
        }
        if (g > 1 && g < n)
            return g;
    }
    return std::nullopt;
}

void factor_recurse(BigInt n, std::map<BigInt, unsigned>& out, unsigned mult) {
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        out[n] += mult;
        return;
    }
    if (auto pp = perfect_power(n)) {
        factor_recurse(pp->first, out, mult * pp->second);
        return;
    }
    auto d = brent_rho(n, 3000000);
    if (!d)
        throw DomainError("factor_integer: factorization budget exhausted for " +
                          n.str());
    factor_recurse(*d, out, mult);
    factor_recurse(n / *d, out, mult);
}

} // namespace

std::map<BigInt, unsigned> factor_integer(const BigInt& n) {
    if (n == 0)
        throw DomainError("factor_integer: zero has no factorization");
    BigInt m = abs(n);
    std::map<BigInt, unsigned> out;
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m)
            break;
        while (m % p == 0) {
            ++out[p];
            m /= p;
        }
    }
    if (m > 1)
        factor_recurse(m, out, 1);
    return out;
}

bool factorization_feasible(const BigInt& n) {
    if (n == 0)
        return false;
    try {
        factor_integer(n);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

BigInt squarefree_part(const BigInt& n) {
    if (n == 0)
        throw DomainError("squarefree_part: zero has no square class");
    BigInt m = abs(n);
    BigInt sf = 1;
    // Trial division strips every prime below 10^6.
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m)
            break;
        unsigned e = 0;
        while (m % p == 0) {
            ++e;
            m /= p;
        }
        if (e & 1)
            sf *= p;
    }
    // Remaining cofactor has only prime factors above 10^6: resolve it via
    // perfect-power / probable-prime tests, with rho as a last resort.
    unsigned exponent = 1;
    while (m > 1) {
        if (is_probable_prime(m)) {
            if (exponent & 1)
                sf *= m;
            break;
        }
        if (auto pp = perfect_power(m)) {
            exponent *= pp->second;
            m = pp->first;
            continue;
        }
        auto rest = factor_integer(m); // throws if the budget runs out
        for (const auto& [p, e] : rest) {
            if ((e * exponent) & 1)
                sf *= p;
        }
        break;
    }
    return n < 0 ? -sf : sf;
}

BigInt rough_cofactor(const BigInt& n) {
    if (n == 0)
        throw DomainError("rough_cofactor: zero has no cofactor");
    BigInt m = abs(n);
    for (std::uint32_t p : small_primes()) {
        if (BigInt(p) * p > m)
            break;
        while (m % p == 0)
            m /= p;
    }
    // An early break can leave a single prime standing; when it is still
    // sieve-sized it counts as stripped.
    if (m < 1000000)
        return BigInt(1);
    return m;
}

long padic_valuation(BigInt n, const BigInt& p) {
    if (n == 0)
        throw DomainError("padic_valuation: valuation of zero");
    if (p < 2)
        throw DomainError("padic_valuation: invalid prime");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

} // namespace a1deg
