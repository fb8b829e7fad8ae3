#include "starmat/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace starmat {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::domain_error("bad rational literal: " + text);
    if (sgn(q.get_den()) == 0) throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

mpz_class factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial of negative integer");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw std::domain_error("binomial with negative argument");
    if (k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

mpz_class falling_factorial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw std::domain_error("falling factorial with negative argument");
    if (k > n) return 0;
    mpz_class p = 1;
    for (std::int64_t i = 0; i < k; ++i) p *= mpz_class(n - i);
    return p;
}

mpz_class pow2(std::int64_t n) {
    if (n < 0) throw std::domain_error("pow2 with negative exponent");
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
    return p;
}

}  // namespace starmat
