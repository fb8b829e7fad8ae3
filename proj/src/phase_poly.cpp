#include "starmat/phase_poly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "starmat/errors.hpp"

namespace starmat {

PhasePoly::PhasePoly(int n_pairs) : n_pairs_(n_pairs) {
    if (n_pairs < 1) throw DimensionError("n_pairs must be positive");
}

PhasePoly PhasePoly::constant(int n_pairs, const Rational& c) {
    PhasePoly p(n_pairs);
    p.add_term(ExponentVec(static_cast<std::size_t>(2 * n_pairs + 1), 0), c);
    return p;
}

std::size_t PhasePoly::slot(VarRef v) const {
    if (v.index < 1 || v.index > n_pairs_)
        throw DimensionError("variable index " + std::to_string(v.index) + " out of range for " +
                             std::to_string(n_pairs_) + " (x,p) pair(s)");
    std::size_t base = v.kind == VarRef::Kind::X ? 0 : static_cast<std::size_t>(n_pairs_);
    return base + static_cast<std::size_t>(v.index - 1);
}

PhasePoly PhasePoly::variable(int n_pairs, VarRef v) {
    PhasePoly p(n_pairs);
    ExponentVec e(static_cast<std::size_t>(2 * n_pairs + 1), 0);
    e[p.slot(v)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

PhasePoly PhasePoly::hbar(int n_pairs, std::int64_t power) {
    PhasePoly p(n_pairs);
    ExponentVec e(static_cast<std::size_t>(2 * n_pairs + 1), 0);
    e[p.hbar_slot()] = power;
    p.add_term(e, Rational(1));
    return p;
}

PhasePoly PhasePoly::plane_monomial(std::int64_t ep, std::int64_t ex, std::int64_t eh,
                                    const Rational& c) {
    return monomial(1, {ex, ep, eh}, c);
}

PhasePoly PhasePoly::monomial(int n_pairs, const ExponentVec& exponents, const Rational& c) {
    PhasePoly p(n_pairs);
    p.add_term(exponents, c);
    return p;
}

PhasePoly PhasePoly::from_hbar_poly(int n_pairs, const HbarPoly& h) {
    PhasePoly p(n_pairs);
    ExponentVec e(static_cast<std::size_t>(2 * n_pairs + 1), 0);
    for (const auto& [d, c] : h.coeffs()) {
        e[p.hbar_slot()] = d;
        p.add_term(e, c);
    }
    return p;
}

bool PhasePoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c.is_one() && std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

Rational PhasePoly::coeff(const ExponentVec& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t PhasePoly::max_degree(VarRef v) const {
    std::size_t s = slot(v);
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[s]);
    return d;
}

std::int64_t PhasePoly::max_hbar_degree() const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[hbar_slot()]);
    return d;
}

std::int64_t PhasePoly::total_degree() const {
    std::int64_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), std::int64_t{0}));
    return d;
}

void PhasePoly::check_exponents(const ExponentVec& exponents) const {
    if (exponents.size() != static_cast<std::size_t>(2 * n_pairs_ + 1))
        throw DimensionError("exponent vector length does not match n_pairs");
    for (std::int64_t e : exponents) {
        if (e < 0) throw std::domain_error("negative exponent");
        if (e > kMaxExponent) throw ExponentOverflowError("exponent exceeds 2^31 - 1");
    }
}

void PhasePoly::add_term(const ExponentVec& exponents, const Rational& c) {
    check_exponents(exponents);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PhasePoly PhasePoly::operator-() const {
    PhasePoly r(n_pairs_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
    if (n_pairs_ != o.n_pairs_) throw DimensionError("adding polynomials with mismatched n_pairs");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
    if (n_pairs_ != o.n_pairs_)
        throw DimensionError("subtracting polynomials with mismatched n_pairs");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
    if (a.n_pairs_ != b.n_pairs_)
        throw DimensionError("multiplying polynomials with mismatched n_pairs");
    PhasePoly r(a.n_pairs_);
    PhasePoly::ExponentVec e(static_cast<std::size_t>(2 * a.n_pairs_ + 1), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > PhasePoly::kMaxExponent)
                    throw ExponentOverflowError("product exponent exceeds 2^31 - 1");
            }
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

PhasePoly PhasePoly::scaled(const Rational& c) const {
    PhasePoly r(n_pairs_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

PhasePoly PhasePoly::pow(std::int64_t e) const {
    if (e < 0) throw std::domain_error("negative power of PhasePoly");
    PhasePoly acc = constant(n_pairs_, Rational(1));
    for (std::int64_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

PhasePoly partial_derivative(const PhasePoly& f, VarRef var, std::int64_t order) {
    if (order < 0) throw std::domain_error("negative derivative order");
    std::size_t s = f.slot(var);
    PhasePoly r(f.n_pairs_);
    for (const auto& [e, c] : f.terms_) {
        if (e[s] < order) continue;
        PhasePoly::ExponentVec de = e;
        de[s] -= order;
        // d^k/dv^k v^e = e!/(e-k)! v^(e-k)
        r.add_term(de, c * Rational(falling_factorial(e[s], order)));
    }
    return r;
}

PhasePoly apply_exp_mixed_diff(const PhasePoly& f, const HbarPoly& lambda) {
    if (f.n_pairs() != 1)
        throw UnsupportedDimensionError("exp(lambda d^2/dxdp) is defined on the plane only");
    PhasePoly lam = PhasePoly::from_hbar_poly(1, lambda);
    PhasePoly result(1);
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t ex = e[0], ep = e[1], eh = e[2];
        PhasePoly lam_pow = PhasePoly::constant(1, Rational(1));
        for (std::int64_t m = 0; m <= std::min(ep, ex); ++m) {
            // (lambda^m / m!) (d^2/dxdp)^m (p^a x^b) with a = ep, b = ex:
            // coefficient C(a,m) * b!/(b-m)! on p^(a-m) x^(b-m).
            Rational coeff =
                c * Rational(binomial(ep, m) * falling_factorial(ex, m));
            result += lam_pow.scaled(coeff) *
                      PhasePoly::monomial(1, {ex - m, ep - m, eh}, Rational(1));
            if (m < std::min(ep, ex)) lam_pow = lam_pow * lam;
        }
    }
    return result;
}

PhasePoly coeff_of_hbar(const PhasePoly& f, std::int64_t m) {
    PhasePoly r(f.n_pairs_);
    const std::size_t hs = f.hbar_slot();
    for (const auto& [e, c] : f.terms_) {
        if (e[hs] != m) continue;
        PhasePoly::ExponentVec de = e;
        de[hs] = 0;
        r.terms_.emplace(de, c);
    }
    return r;
}

PhasePoly negate_hbar(const PhasePoly& f) {
    PhasePoly r(f.n_pairs_);
    const std::size_t hs = f.hbar_slot();
    for (const auto& [e, c] : f.terms_) r.terms_.emplace(e, e[hs] % 2 == 0 ? c : -c);
    return r;
}

namespace {

// Render order: total degree descending, then exponent vector descending.
bool render_before(const PhasePoly::ExponentVec& a, const PhasePoly::ExponentVec& b) {
    std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
    std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
    if (da != db) return da > db;
    return a > b;
}

void append_factor(std::string& out, const std::string& name, std::int64_t exp, bool& any) {
    if (exp == 0) return;
    if (any) out += "*";
    out += name;
    if (exp != 1) out += "^" + std::to_string(exp);
    any = true;
}

}  // namespace

std::string PhasePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return render_before(a->first, b->first); });

    const int n = n_pairs_;
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        std::string body;
        bool any = false;
        append_factor(body, "h", e[hbar_slot()], any);
        for (int i = 1; i <= n; ++i)
            append_factor(body, n == 1 ? "p" : "p" + std::to_string(i),
                          e[static_cast<std::size_t>(n + i - 1)], any);
        for (int i = 1; i <= n; ++i)
            append_factor(body, n == 1 ? "x" : "x" + std::to_string(i),
                          e[static_cast<std::size_t>(i - 1)], any);
        Rational mag = c.abs();
        if (!any) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += body;
        }
    }
    return out;
}

HbarPoly PhasePoly::to_hbar_poly() const {
    HbarPoly h;
    const std::size_t hs = hbar_slot();
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < hs; ++i)
            if (e[i] != 0)
                throw std::domain_error(
                    "polynomial depends on x or p; expected a polynomial in h only");
        h += HbarPoly::term(e[hs], c);
    }
    return h;
}

std::ostream& operator<<(std::ostream& os, const PhasePoly& p) { return os << p.to_string(); }

}  // namespace starmat
