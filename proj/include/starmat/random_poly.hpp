#pragma once

#include <cstdint>
#include <random>

#include "starmat/expr.hpp"
#include "starmat/phase_poly.hpp"

namespace starmat {

/// Deterministic seeded random source. Draws go through hand-rolled rejection
/// sampling rather than std distributions so the stream is identical on every
/// platform.
class SeedStream {
public:
    explicit SeedStream(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Random observable: every monomial of total degree <= max_degree (the h
/// exponent counts unless hbar_free) is included independently with
/// probability 1/2, with a small rational coefficient (numerator in [-9,9]
/// excluding 0, denominator in [1,4]). Deterministic given the stream state.
PhasePoly random_poly(int max_degree, int n_pairs, bool hbar_free, SeedStream& rng);

/// Random expression AST of depth <= max_depth, for parser round-trip tests.
/// Variable indices are drawn in [1,3], exponents in [0,4].
ExprPtr random_expr(int max_depth, SeedStream& rng);

}  // namespace starmat
