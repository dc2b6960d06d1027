#pragma once

#include "a1deg/poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace a1deg {

// Deterministic generator for the randomized suites.  Draws go through
// next()/below() only, so documents for a fixed (command, seed) pair are
// identical across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, n); the modulo bias is irrelevant at the tiny ranges
    // used here and keeps the draw sequence platform-independent.
    std::uint64_t below(std::uint64_t n) { return gen_() % n; }

    long range(long lo, long hi)
    {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::mt19937_64 gen_;
};

// Coefficient-sized scalar: over Q a fraction with numerator in [-9, 9]
// and denominator in [1, 9]; over F_p a uniform residue.
FieldElement random_scalar(Rng& rng, const Field& k);
FieldElement random_nonzero_scalar(Rng& rng, const Field& k);

// Distinct roots with multiplicities in [1, max_mult], at most max_roots
// of them (capped by the field size), total multiplicity at most
// max_total.
std::vector<RootDatum> random_distinct_roots(Rng& rng, const Field& k,
                                             int max_roots, int max_mult,
                                             int max_total);

// A pointed reduced map whose numerator is a constant times a split monic
// polynomial built from random_distinct_roots; the denominator is a
// random coprime polynomial of lower degree.
RationalFunction random_split_function(Rng& rng, const Field& k, int max_roots,
                                       int max_mult, int max_total);

// A pointed reduced map with arbitrary (not necessarily split) numerator
// of degree in [1, max_degree].
RationalFunction random_pointed_function(Rng& rng, const Field& k,
                                         int max_degree);

} // namespace a1deg
