#include "starmat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "starmat/matrix_rep.hpp"
#include "starmat/random_poly.hpp"
#include "starmat/star_product.hpp"

namespace starmat {

namespace {

using Clock = std::chrono::steady_clock;

RouteTiming summarize(std::vector<double> seconds) {
    std::sort(seconds.begin(), seconds.end());
    RouteTiming t;
    t.min_s = seconds.front();
    const std::size_t n = seconds.size();
    t.median_s = n % 2 == 1 ? seconds[n / 2] : (seconds[n / 2 - 1] + seconds[n / 2]) / 2.0;
    double sum = 0;
    for (double s : seconds) sum += s;
    t.mean_s = sum / static_cast<double>(n);
    return t;
}

// Rows and columns the element actually touches in a dense realization.
std::int64_t support_extent(const EBasisElement& e) {
    std::int64_t m = 1;
    for (const auto& [ab, c] : e.terms()) m = std::max({m, ab.first + 1, ab.second + 1});
    return m;
}

DenseMatrix read_back_block(const DenseMatrix& M, int size) {
    DenseMatrix out(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) out.at(i, j) = M.at(i, j);
    return out;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
    if (cfg.dense_n < 2) throw std::invalid_argument("dense_n must be >= 2");

    BenchReport report;
    report.config = cfg;

    SeedStream rng(cfg.seed);
    std::vector<PhasePoly> fs, gs;
    for (int t = 0; t < cfg.trials; ++t) {
        fs.push_back(random_poly(cfg.max_degree, 1, false, rng));
        gs.push_back(random_poly(cfg.max_degree, 1, false, rng));
    }

    const int N = cfg.dense_n;
    // Consistency pass: all three routes must agree exactly on every pair
    // before a single timing is taken.
    for (int t = 0; t < cfg.trials; ++t) {
        const PhasePoly direct = moyal_product(fs[t], gs[t]);
        const EBasisElement pf = psi(fs[t]), pg = psi(gs[t]);
        const EBasisElement prod = ebasis_product(pf, pg);
        const PhasePoly via_ebasis = psi_inv(prod);

        const int width = static_cast<int>(safe_block_width(pf));
        const int needed = width + static_cast<int>(support_extent(prod));
        if (N < needed)
            throw std::invalid_argument(
                "dense_n = " + std::to_string(N) + " is too small for the safe-block check; " +
                "this configuration needs dense_n >= " + std::to_string(needed));

        if (via_ebasis != direct) {
            report.consistent = false;
            report.counterexample =
                "trial " + std::to_string(t) + ":\n  f = " + fs[t].to_string() +
                "\n  g = " + gs[t].to_string() + "\n  formula route  = " + direct.to_string() +
                "\n  e-basis route  = " + via_ebasis.to_string() + "\n";
            return report;
        }
        const DenseMatrix truncated = dense_product(realize_dense(pf, N), realize_dense(pg, N));
        const DenseMatrix exact = realize_dense(prod, N);
        if (!top_left_block_equal(truncated, exact, N - width)) {
            report.consistent = false;
            report.counterexample = "trial " + std::to_string(t) + ":\n  f = " +
                                    fs[t].to_string() + "\n  g = " + gs[t].to_string() +
                                    "\n  dense route disagrees with the e-basis product on the " +
                                    std::to_string(N - width) + "x" + std::to_string(N - width) +
                                    " safe block (N = " + std::to_string(N) + ")\n";
            return report;
        }
    }
    report.consistent = true;

    // Keep results alive so the timed work cannot be elided.
    std::size_t sink = 0;

    // Warm-up, excluded from the statistics.
    sink += moyal_product(fs[0], gs[0]).terms().size();
    sink += psi_inv(ebasis_product(psi(fs[0]), psi(gs[0]))).terms().size();
    sink += dense_product(realize_dense(psi(fs[0]), N), realize_dense(psi(gs[0]), N)).size();

    std::vector<double> formula_s, ebasis_s, dense_s;
    formula_s.reserve(cfg.trials);
    ebasis_s.reserve(cfg.trials);
    dense_s.reserve(cfg.trials);
    for (int t = 0; t < cfg.trials; ++t) {
        auto t0 = Clock::now();
        sink += moyal_product(fs[t], gs[t]).terms().size();
        auto t1 = Clock::now();
        formula_s.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    for (int t = 0; t < cfg.trials; ++t) {
        auto t0 = Clock::now();
        sink += psi_inv(ebasis_product(psi(fs[t]), psi(gs[t]))).terms().size();
        auto t1 = Clock::now();
        ebasis_s.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    for (int t = 0; t < cfg.trials; ++t) {
        auto t0 = Clock::now();
        const EBasisElement pf = psi(fs[t]);
        const int width = static_cast<int>(safe_block_width(pf));
        const DenseMatrix product = dense_product(realize_dense(pf, N),
                                                  realize_dense(psi(gs[t]), N));
        sink += static_cast<std::size_t>(read_back_block(product, N - width).size());
        auto t1 = Clock::now();
        dense_s.push_back(std::chrono::duration<double>(t1 - t0).count());
    }
    if (sink == 0) std::fputs("", stderr);  // defeat dead-code elimination

    report.formula = summarize(std::move(formula_s));
    report.ebasis = summarize(std::move(ebasis_s));
    report.dense = summarize(std::move(dense_s));
    return report;
}

std::string format_table(const BenchReport& report) {
    const auto& cfg = report.config;
    std::string out = "bench: max degree " + std::to_string(cfg.max_degree) + ", trials " +
                      std::to_string(cfg.trials) + ", dense N " + std::to_string(cfg.dense_n) +
                      ", seed " + std::to_string(cfg.seed) + "\n";
    if (!report.consistent) {
        out += "route disagreement (correctness failure, no timings):\n";
        out += report.counterexample;
        return out;
    }
    out += "consistency: all three routes returned exactly equal results\n";
    char line[160];
    std::snprintf(line, sizeof line, "%-10s %12s %12s %12s\n", "route", "min [us]", "median [us]",
                  "mean [us]");
    out += line;
    auto row = [&](const char* name, const RouteTiming& t) {
        std::snprintf(line, sizeof line, "%-10s %12.2f %12.2f %12.2f\n", name, t.min_s * 1e6,
                      t.median_s * 1e6, t.mean_s * 1e6);
        out += line;
    };
    row("formula", report.formula);
    row("ebasis", report.ebasis);
    row("dense", report.dense);
    return out;
}

}  // namespace starmat
