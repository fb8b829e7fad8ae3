#include "starmat/star_product.hpp"

#include <algorithm>
#include <functional>

#include "starmat/errors.hpp"

namespace starmat {

PhasePoly moyal_product(const PhasePoly& f, const PhasePoly& g) {
    if (f.n_pairs() != g.n_pairs())
        throw DimensionError("moyal product of polynomials with mismatched n_pairs");
    return f.n_pairs() == 1 ? moyal_product_plane(f, g) : moyal_product_general(f, g);
}

PhasePoly moyal_product_plane(const PhasePoly& f, const PhasePoly& g) {
    if (f.n_pairs() != 1 || g.n_pairs() != 1)
        throw DimensionError("plane Moyal product requires n_pairs = 1");
    const VarRef x = VarRef::x(), p = VarRef::p();
    // Each term differentiates f (and g) m times in total, so the sum stops
    // once m exceeds either total (x,p)-degree.
    const std::int64_t m_max = std::min(f.max_degree(x) + f.max_degree(p),
                                        g.max_degree(x) + g.max_degree(p));
    PhasePoly result(1);
    for (std::int64_t m = 0; m <= m_max; ++m) {
        PhasePoly level(1);
        for (std::int64_t k = 0; k <= m; ++k) {
            PhasePoly df = partial_derivative(partial_derivative(f, x, m - k), p, k);
            if (df.is_zero()) continue;
            PhasePoly dg = partial_derivative(partial_derivative(g, x, k), p, m - k);
            if (dg.is_zero()) continue;
            Rational c(binomial(m, k));
            if (k % 2 != 0) c = -c;
            level += (df * dg).scaled(c);
        }
        if (level.is_zero()) continue;
        // h^m / (2^m m!)
        result += (PhasePoly::hbar(1, m) * level).scaled(Rational(1, 1) / Rational(pow2(m) * factorial(m)));
    }
    return result;
}

namespace {

// Enumerates the operator monomials of the exponential: per pair a, m_a
// derivatives d_{x_a} on f paired with d_{p_a} on g, and l_a derivatives
// d_{p_a} on f paired with d_{x_a} on g (sign (-1)^(sum l)).
void expand_pairs(int a, const PhasePoly& df, const PhasePoly& dg, std::int64_t order,
                  std::int64_t sign_flips, PhasePoly& result) {
    const int n = df.n_pairs();
    if (a > n) {
        PhasePoly term = df * dg;
        if (term.is_zero()) return;
        Rational c(1, 1);
        if (sign_flips % 2 != 0) c = -c;
        result += (PhasePoly::hbar(n, order) * term).scaled(c / Rational(pow2(order)));
        return;
    }
    const VarRef xa = VarRef::x(a), pa = VarRef::p(a);
    const std::int64_t m_max = std::min(df.max_degree(xa), dg.max_degree(pa));
    for (std::int64_t m = 0; m <= m_max; ++m) {
        PhasePoly fm = partial_derivative(df, xa, m);
        PhasePoly gm = partial_derivative(dg, pa, m);
        if (fm.is_zero() || gm.is_zero()) continue;
        const Rational inv_m_fact = Rational(1, 1) / Rational(factorial(m));
        const std::int64_t l_max = std::min(fm.max_degree(pa), gm.max_degree(xa));
        for (std::int64_t l = 0; l <= l_max; ++l) {
            PhasePoly fml = partial_derivative(fm, pa, l);
            PhasePoly gml = partial_derivative(gm, xa, l);
            if (fml.is_zero() || gml.is_zero()) continue;
            expand_pairs(a + 1, fml.scaled(inv_m_fact / Rational(factorial(l))), gml,
                         order + m + l, sign_flips + l, result);
        }
    }
}

}  // namespace

PhasePoly moyal_product_general(const PhasePoly& f, const PhasePoly& g) {
    if (f.n_pairs() != g.n_pairs())
        throw DimensionError("moyal product of polynomials with mismatched n_pairs");
    PhasePoly result(f.n_pairs());
    expand_pairs(1, f, g, 0, 0, result);
    return result;
}

PhasePoly standard_product(const PhasePoly& f, const PhasePoly& g) {
    if (f.n_pairs() != 1 || g.n_pairs() != 1)
        throw UnsupportedDimensionError("standard-ordered product is defined on the plane only");
    const VarRef x = VarRef::x(), p = VarRef::p();
    const std::int64_t m_max = std::min(f.max_degree(x), g.max_degree(p));
    PhasePoly result(1);
    for (std::int64_t m = 0; m <= m_max; ++m) {
        PhasePoly df = partial_derivative(f, x, m);
        PhasePoly dg = partial_derivative(g, p, m);
        if (df.is_zero() || dg.is_zero()) continue;
        result += (PhasePoly::hbar(1, m) * df * dg).scaled(Rational(1, 1) / Rational(factorial(m)));
    }
    return result;
}

PhasePoly moyal_commutator(const PhasePoly& f, const PhasePoly& g) {
    return moyal_product(f, g) - moyal_product(g, f);
}

PhasePoly poisson_bracket(const PhasePoly& f, const PhasePoly& g) {
    if (f.n_pairs() != g.n_pairs())
        throw DimensionError("poisson bracket of polynomials with mismatched n_pairs");
    PhasePoly result(f.n_pairs());
    for (int a = 1; a <= f.n_pairs(); ++a) {
        const VarRef xa = VarRef::x(a), pa = VarRef::p(a);
        result += partial_derivative(f, xa) * partial_derivative(g, pa);
        result -= partial_derivative(f, pa) * partial_derivative(g, xa);
    }
    return result;
}

PhasePoly gauge_to_standard(const PhasePoly& f) {
    if (f.n_pairs() != 1)
        throw UnsupportedDimensionError("gauge transform is defined on the plane only");
    return apply_exp_mixed_diff(f, HbarPoly::term(1, Rational(1, 2)));
}

PhasePoly gauge_to_moyal(const PhasePoly& f) {
    if (f.n_pairs() != 1)
        throw UnsupportedDimensionError("gauge transform is defined on the plane only");
    return apply_exp_mixed_diff(f, HbarPoly::term(1, Rational(-1, 2)));
}

}  // namespace starmat
