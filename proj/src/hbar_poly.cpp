#include "starmat/hbar_poly.hpp"

#include <ostream>
#include <stdexcept>

namespace starmat {

HbarPoly HbarPoly::constant(const Rational& c) { return term(0, c); }

HbarPoly HbarPoly::term(std::int64_t degree, const Rational& c) {
    if (degree < 0) throw std::domain_error("negative h-degree");
    HbarPoly p;
    if (!c.is_zero()) p.coeffs_.emplace(degree, c);
    return p;
}

bool HbarPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second.is_one();
}

std::optional<std::int64_t> HbarPoly::valuation() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first;
}

std::int64_t HbarPoly::degree() const {
    if (coeffs_.empty()) return -1;
    return coeffs_.rbegin()->first;
}

Rational HbarPoly::coeff(std::int64_t degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void HbarPoly::add_term(std::int64_t degree, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(degree, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

HbarPoly HbarPoly::operator-() const {
    HbarPoly r;
    for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
    return r;
}

HbarPoly& HbarPoly::operator+=(const HbarPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, c);
    return *this;
}

HbarPoly& HbarPoly::operator-=(const HbarPoly& o) {
    for (const auto& [d, c] : o.coeffs_) add_term(d, -c);
    return *this;
}

HbarPoly operator*(const HbarPoly& a, const HbarPoly& b) {
    HbarPoly r;
    for (const auto& [da, ca] : a.coeffs_)
        for (const auto& [db, cb] : b.coeffs_) r.add_term(da + db, ca * cb);
    return r;
}

HbarPoly HbarPoly::scaled(const Rational& c) const {
    HbarPoly r;
    if (c.is_zero()) return r;
    for (const auto& [d, v] : coeffs_) r.coeffs_.emplace(d, v * c);
    return r;
}

HbarPoly HbarPoly::pow(std::int64_t e) const {
    if (e < 0) throw std::domain_error("negative power of HbarPoly");
    HbarPoly acc = one();
    for (std::int64_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string HbarPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : coeffs_) {
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (d == 0) {
            out += mag.to_string();
        } else {
            if (!mag.is_one()) out += mag.to_string() + "*";
            out += "h";
            if (d != 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const HbarPoly& p) { return os << p.to_string(); }

}  // namespace starmat
