#pragma once

#include <cstdint>
#include <string>

namespace starmat {

struct BenchConfig {
    int max_degree = 4;
    int trials = 50;
    int dense_n = 16;
    std::uint64_t seed = 0;
};

struct RouteTiming {
    double min_s = 0;
    double median_s = 0;
    double mean_s = 0;
};

struct BenchReport {
    BenchConfig config;
    bool consistent = false;
    std::string counterexample;  // set when consistent is false
    RouteTiming formula;         // moyal_product on polynomials
    RouteTiming ebasis;          // psi_inv(psi(f) psi(g)) through the structure constants
    RouteTiming dense;           // realize, multiply, read back the safe block
};

/// Compares three routes to the same Moyal product on seeded random pairs:
/// the bidifferential formula, the E-basis structure constants, and dense
/// truncated matrices. Every pair is checked for exact agreement first;
/// timings are only collected (single-threaded, after a warm-up pass) when
/// every comparison succeeded. Throws std::invalid_argument for unusable
/// parameters, including a dense_n too small for the safe-block guarantee to
/// cover the comparison.
BenchReport run_bench(const BenchConfig& cfg);

/// Human-readable table; everything above the timing columns is
/// deterministic for a fixed config.
std::string format_table(const BenchReport& report);

}  // namespace starmat
