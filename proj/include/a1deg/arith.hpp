#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace a1deg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Miller-Rabin, deterministic below 2^64, strong probable-prime beyond.
bool is_probable_prime(const BigInt& n);

// Largest (b, e) with e >= 2 and b^e == n, if any.  n >= 2.
std::optional<std::pair<BigInt, unsigned>> perfect_power(const BigInt& n);

// Complete factorization of |n| into prime powers.  Trial division up to
// 10^6, then perfect-power and Miller-Rabin tests, then Pollard-Brent rho
// with a bounded iteration budget.  Throws DomainError when the budget is
// exhausted before every factor is certified prime.  n != 0.
std::map<BigInt, unsigned> factor_integer(const BigInt& n);

// True iff factor_integer would succeed; never throws.
bool factorization_feasible(const BigInt& n);

// Squarefree part of n (same sign as n): the product of primes dividing n
// to an odd power.  n != 0.  Throws DomainError when the square class
// cannot be certified.
BigInt squarefree_part(const BigInt& n);

// Cofactor of |n| left after removing every prime factor below the trial
// division bound used in factor_integer: 1 when n is smooth over those
// primes, otherwise a number whose prime factors all clear the bound.
// n != 0.  This is a cheap smoothness probe: it never commits to the
// factoring budget.
BigInt rough_cofactor(const BigInt& n);

// Exact perfect-square test for a nonnegative integer.
bool is_perfect_square(const BigInt& n);

// p-adic valuation of n (n != 0) at a prime p >= 2.
long padic_valuation(BigInt n, const BigInt& p);

// a^e mod m with m > 1, e >= 0.
BigInt power_mod(BigInt a, BigInt e, const BigInt& m);

} // namespace a1deg
