#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "starmat/rational.hpp"

namespace starmat {

/// Polynomial in the formal deformation variable h alone; the coefficient
/// ring for matrix entries and E-basis coordinates.
///
/// Stored sparsely as degree -> coefficient with no zero coefficients, so
/// equal values always have equal maps.
class HbarPoly {
public:
    HbarPoly() = default;

    static HbarPoly constant(const Rational& c);
    /// c * h^degree
    static HbarPoly term(std::int64_t degree, const Rational& c);
    static HbarPoly one() { return constant(Rational(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    /// h-adic valuation: the least degree with nonzero coefficient.
    /// The zero polynomial has no finite valuation (conventionally +infinity),
    /// reported as nullopt.
    std::optional<std::int64_t> valuation() const;

    std::int64_t degree() const;  // -1 for the zero polynomial
    Rational coeff(std::int64_t degree) const;

    const std::map<std::int64_t, Rational>& coeffs() const { return coeffs_; }

    HbarPoly operator-() const;
    HbarPoly& operator+=(const HbarPoly& o);
    HbarPoly& operator-=(const HbarPoly& o);
    friend HbarPoly operator+(HbarPoly a, const HbarPoly& b) { return a += b; }
    friend HbarPoly operator-(HbarPoly a, const HbarPoly& b) { return a -= b; }
    friend HbarPoly operator*(const HbarPoly& a, const HbarPoly& b);

    HbarPoly scaled(const Rational& c) const;
    HbarPoly pow(std::int64_t e) const;

    friend bool operator==(const HbarPoly& a, const HbarPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const HbarPoly& a, const HbarPoly& b) { return !(a == b); }

    /// Canonical rendering, ascending degree: "0", "1 + 2*h", "1/2*h^2".
    std::string to_string() const;

private:
    void add_term(std::int64_t degree, const Rational& c);

    std::map<std::int64_t, Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const HbarPoly& p);

}  // namespace starmat
