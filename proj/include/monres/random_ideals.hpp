#pragma once

#include <cstdint>

#include "monres/ideal.hpp"

namespace monres {

/// Deterministic splittable RNG (splitmix64); identical streams on every
/// platform, unlike the standard distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    long range(long lo, long hi);

private:
    std::uint64_t state_;
};

/// A random generic ideal with 2..max_gens generators in 2..max_vars
/// variables: per variable the non-zero exponents are sampled distinct.
MonomialIdeal random_generic_ideal(Rng& rng, int max_vars = 4, int max_gens = 8);

/// A random non-generic ideal: small dense exponents with at least one
/// forced collision of a non-zero exponent within a variable.
MonomialIdeal random_nongeneric_ideal(Rng& rng, int max_vars = 4, int max_gens = 8);

/// A random monomial within the box (componentwise <= bound).
Monomial random_monomial_in_box(Rng& rng, const Monomial& bound);

/// A random bivariate ideal in staircase order: x-exponents strictly
/// decreasing, y-exponents strictly increasing.
MonomialIdeal random_bivariate_ideal(Rng& rng, int max_gens = 8);

}  // namespace monres
