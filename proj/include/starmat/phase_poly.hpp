#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "starmat/hbar_poly.hpp"
#include "starmat/rational.hpp"

namespace starmat {

/// A phase-space variable: x_i or p_i, 1-based index.
struct VarRef {
    enum class Kind { X, P };
    Kind kind;
    int index = 1;

    static VarRef x(int i = 1) { return {Kind::X, i}; }
    static VarRef p(int i = 1) { return {Kind::P, i}; }
};

/// Sparse polynomial observable in x_1..x_n, p_1..p_n and the central formal
/// variable h, with exact rational coefficients.
///
/// Each term is keyed by its exponent vector laid out as
/// (e_x[1..n], e_p[1..n], e_h); zero coefficients are never stored, so two
/// values are equal iff their term maps are equal.
///
/// Exponents are capped at 2^31 - 1; arithmetic that would exceed the cap
/// throws ExponentOverflowError instead of wrapping.
class PhasePoly {
public:
    using ExponentVec = std::vector<std::int64_t>;
    using TermMap = std::map<ExponentVec, Rational>;

    static constexpr std::int64_t kMaxExponent = (std::int64_t{1} << 31) - 1;

    /// The zero polynomial on n_pairs (x,p) pairs.
    explicit PhasePoly(int n_pairs);

    static PhasePoly constant(int n_pairs, const Rational& c);
    static PhasePoly variable(int n_pairs, VarRef v);
    static PhasePoly hbar(int n_pairs, std::int64_t power = 1);
    /// c * x^ex * p^ep * h^eh on the plane (n_pairs = 1).
    static PhasePoly plane_monomial(std::int64_t ep, std::int64_t ex, std::int64_t eh,
                                    const Rational& c);
    static PhasePoly monomial(int n_pairs, const ExponentVec& exponents, const Rational& c);
    static PhasePoly from_hbar_poly(int n_pairs, const HbarPoly& h);

    int n_pairs() const { return n_pairs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    Rational coeff(const ExponentVec& exponents) const;

    /// Largest exponent of the given variable over all terms (0 if zero poly).
    std::int64_t max_degree(VarRef v) const;
    std::int64_t max_hbar_degree() const;
    std::int64_t total_degree() const;  // includes the h exponent; 0 for zero

    PhasePoly operator-() const;
    PhasePoly& operator+=(const PhasePoly& o);
    PhasePoly& operator-=(const PhasePoly& o);
    friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
    friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
    friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);

    PhasePoly scaled(const Rational& c) const;
    PhasePoly pow(std::int64_t e) const;

    friend bool operator==(const PhasePoly& a, const PhasePoly& b) {
        return a.n_pairs_ == b.n_pairs_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PhasePoly& a, const PhasePoly& b) { return !(a == b); }

    /// Canonical text form: terms by total degree descending, ties broken by
    /// the exponent vector (e_x.., e_p.., e_h) descending lexicographically;
    /// each term prints its h-power first, then the p-part, then the x-part,
    /// with unit exponents and unit coefficients elided, e.g. "p*x^2 - h*x".
    std::string to_string() const;

    /// Throws if any x or p exponent is present; keeps the h-dependence.
    HbarPoly to_hbar_poly() const;

    // Exponent-vector helpers (layout: e_x[1..n], e_p[1..n], e_h).
    std::size_t slot(VarRef v) const;
    std::size_t hbar_slot() const { return static_cast<std::size_t>(2 * n_pairs_); }

private:
    void add_term(const ExponentVec& exponents, const Rational& c);
    void check_exponents(const ExponentVec& exponents) const;

    int n_pairs_;
    TermMap terms_;

    friend PhasePoly partial_derivative(const PhasePoly&, VarRef, std::int64_t);
    friend PhasePoly coeff_of_hbar(const PhasePoly&, std::int64_t);
    friend PhasePoly negate_hbar(const PhasePoly&);
};

/// Exact iterated partial derivative d^order/d(var)^order; h is a constant.
PhasePoly partial_derivative(const PhasePoly& f, VarRef var, std::int64_t order = 1);

/// exp(lambda * d^2/dxdp) applied to f (plane only), where lambda is the full
/// scalar multiplier as a polynomial in h. The series is finite: on a
/// monomial p^a x^b it is
///   sum_{m=0}^{min(a,b)} lambda^m * C(a,m) * b!/(b-m)! * p^(a-m) x^(b-m).
PhasePoly apply_exp_mixed_diff(const PhasePoly& f, const HbarPoly& lambda);

/// The h-free polynomial multiplying h^m in f.
PhasePoly coeff_of_hbar(const PhasePoly& f, std::int64_t m);

/// Substitutes -h for h (negates coefficients of odd h-degree terms).
PhasePoly negate_hbar(const PhasePoly& f);

std::ostream& operator<<(std::ostream& os, const PhasePoly& p);

}  // namespace starmat
