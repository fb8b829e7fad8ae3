#include "starmat/random_poly.hpp"

#include <stdexcept>

namespace starmat {

std::int64_t SeedStream::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::domain_error("empty uniform range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return lo + static_cast<std::int64_t>(v % span);
}

namespace {

void enumerate_monomials(PhasePoly::ExponentVec& exps, std::size_t pos, std::size_t last_slot,
                         std::int64_t budget, SeedStream& rng, PhasePoly& out) {
    if (pos > last_slot) {
        if (!rng.coin()) return;
        std::int64_t num;
        do {
            num = rng.uniform(-9, 9);
        } while (num == 0);
        const std::int64_t den = rng.uniform(1, 4);
        out += PhasePoly::monomial(out.n_pairs(), exps,
                                   Rational(static_cast<long>(num), static_cast<long>(den)));
        return;
    }
    for (std::int64_t e = 0; e <= budget; ++e) {
        exps[pos] = e;
        enumerate_monomials(exps, pos + 1, last_slot, budget - e, rng, out);
    }
    exps[pos] = 0;
}

}  // namespace

PhasePoly random_poly(int max_degree, int n_pairs, bool hbar_free, SeedStream& rng) {
    if (max_degree < 0) throw std::domain_error("max_degree must be non-negative");
    PhasePoly out(n_pairs);
    PhasePoly::ExponentVec exps(static_cast<std::size_t>(2 * n_pairs + 1), 0);
    // Slots are visited in a fixed lexicographic order so the draw sequence,
    // and hence the polynomial, depends only on the stream state.
    const std::size_t last = hbar_free ? static_cast<std::size_t>(2 * n_pairs - 1)
                                       : static_cast<std::size_t>(2 * n_pairs);
    enumerate_monomials(exps, 0, last, max_degree, rng, out);
    return out;
}

ExprPtr random_expr(int max_depth, SeedStream& rng) {
    if (max_depth <= 0) {
        switch (rng.uniform(0, 2)) {
            case 0: {
                const std::int64_t num = rng.uniform(0, 9);
                const std::int64_t den = rng.uniform(1, 4);
                return Expr::number(Rational(static_cast<long>(num), static_cast<long>(den)));
            }
            case 1: return Expr::var(VarKind::X, rng.uniform(1, 3));
            default: return rng.coin() ? Expr::var(VarKind::P, rng.uniform(1, 3))
                                       : Expr::var(VarKind::H);
        }
    }
    switch (rng.uniform(0, 9)) {
        case 0: return random_expr(0, rng);
        case 1: return Expr::neg(random_expr(max_depth - 1, rng));
        case 2: return Expr::add(random_expr(max_depth - 1, rng), random_expr(max_depth - 1, rng));
        case 3: return Expr::sub(random_expr(max_depth - 1, rng), random_expr(max_depth - 1, rng));
        case 4:
            return Expr::pointwise(random_expr(max_depth - 1, rng),
                                   random_expr(max_depth - 1, rng));
        case 5:
            return Expr::moyal(random_expr(max_depth - 1, rng), random_expr(max_depth - 1, rng));
        case 6:
            return Expr::standard(random_expr(max_depth - 1, rng),
                                  random_expr(max_depth - 1, rng));
        case 7: return Expr::pow(random_expr(max_depth - 1, rng), rng.uniform(0, 4));
        case 8:
            return Expr::moyal_commutator(random_expr(max_depth - 1, rng),
                                          random_expr(max_depth - 1, rng));
        default:
            return Expr::poisson_bracket(random_expr(max_depth - 1, rng),
                                         random_expr(max_depth - 1, rng));
    }
}

}  // namespace starmat
