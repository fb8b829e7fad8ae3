#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starmat/matrix_rep.hpp"

namespace starmat {

enum class Suite {
    All, Assoc, Unit, Semiclassical, Gauge, HomPhi, HomPsi, EqE, Membership, Parser
};

Suite suite_from_name(const std::string& name);  // throws std::invalid_argument
std::string suite_name(Suite s);
std::vector<Suite> all_suites();

struct VerifyConfig {
    Suite suite = Suite::All;
    int max_degree = 5;
    int trials = 100;
    std::uint64_t seed = 0;
    int n_pairs = 1;
};

struct SuiteResult {
    std::string name;
    long checks = 0;  // individual equalities tested
    bool passed = true;
    std::string counterexample;  // inputs and both sides, canonical text
};

/// Runs the named suite (or every suite for Suite::All) with fresh seeded
/// randomness per suite. Single-threaded and fully deterministic; the first
/// failure within a suite is the one reported.
std::vector<SuiteResult> run_suite(const VerifyConfig& cfg);

bool all_passed(const std::vector<SuiteResult>& results);

/// Deterministic text report (no timings), one line per suite plus the
/// counterexample block for any failure.
std::string format_report(const VerifyConfig& cfg, const std::vector<SuiteResult>& results);

/// Ground-truth check behind the eqE suite: compares a claimed expansion of
/// E_{a,b} E_{c,d} against the dense matrix product of the realized factors
/// on the safe block. Returns a description of the first disagreement, or
/// nullopt if the claim matches. Exposed so tests can feed it deliberately
/// corrupted products.
std::optional<std::string> eqE_check_against_dense(std::int64_t a, std::int64_t b, std::int64_t c,
                                                   std::int64_t d, int N,
                                                   const EBasisElement& claimed);

}  // namespace starmat
