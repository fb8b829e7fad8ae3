#include "starmat/matrix_rep.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "starmat/errors.hpp"
#include "starmat/expr.hpp"
#include "starmat/star_product.hpp"

namespace starmat {

EBasisElement EBasisElement::unit(std::int64_t a, std::int64_t b, const HbarPoly& coeff) {
    EBasisElement e;
    e.add(a, b, coeff);
    return e;
}

HbarPoly EBasisElement::coeff(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? HbarPoly{} : it->second;
}

void EBasisElement::add(std::int64_t a, std::int64_t b, const HbarPoly& c) {
    if (a < 0 || b < 0) throw std::domain_error("E-basis indices must be non-negative");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Index{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EBasisElement EBasisElement::operator-() const {
    EBasisElement r;
    for (const auto& [ab, c] : terms_) r.terms_.emplace(ab, -c);
    return r;
}

EBasisElement& EBasisElement::operator+=(const EBasisElement& o) {
    for (const auto& [ab, c] : o.terms_) add(ab.first, ab.second, c);
    return *this;
}

EBasisElement& EBasisElement::operator-=(const EBasisElement& o) {
    for (const auto& [ab, c] : o.terms_) add(ab.first, ab.second, -c);
    return *this;
}

EBasisElement EBasisElement::scaled(const HbarPoly& c) const {
    EBasisElement r;
    if (c.is_zero()) return r;
    for (const auto& [ab, v] : terms_) r.add(ab.first, ab.second, v * c);
    return r;
}

std::string EBasisElement::to_text() const {
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* lhs, const auto* rhs) {
        const auto& [a1, b1] = lhs->first;
        const auto& [a2, b2] = rhs->first;
        if (a1 + b1 != a2 + b2) return a1 + b1 > a2 + b2;
        return lhs->first > rhs->first;
    });
    std::string out;
    for (const auto* t : order) {
        out += std::to_string(t->first.first) + " " + std::to_string(t->first.second) + " : " +
               t->second.to_string() + "\n";
    }
    return out;
}

EBasisElement ebasis_product(const EBasisElement& A, const EBasisElement& B) {
    EBasisElement r;
    for (const auto& [ab, ca] : A.terms()) {
        const auto [a, b] = ab;
        for (const auto& [cd, cb] : B.terms()) {
            const auto [c, d] = cd;
            const HbarPoly cc = ca * cb;
            for (std::int64_t n = 0; n <= std::min(b, c); ++n) {
                // h^n b! c! / (n! (b-n)! (c-n)!) = h^n n! C(b,n) C(c,n)
                mpz_class k = factorial(n) * binomial(b, n) * binomial(c, n);
                r.add(a + c - n, b + d - n, cc * HbarPoly::term(n, Rational(k)));
            }
        }
    }
    return r;
}

EBasisElement phi(const PhasePoly& f) {
    if (f.n_pairs() != 1) throw DimensionError("phi is defined on the plane only");
    EBasisElement r;
    for (const auto& [e, c] : f.terms()) {
        // c h^m p^a x^b contributes c h^m at slot (a, b).
        r.add(e[1], e[0], HbarPoly::term(e[2], c));
    }
    return r;
}

PhasePoly phi_inv(const EBasisElement& A) {
    PhasePoly f(1);
    for (const auto& [ab, c] : A.terms())
        for (const auto& [m, v] : c.coeffs())
            f += PhasePoly::plane_monomial(ab.first, ab.second, m, v);
    return f;
}

EBasisElement psi(const PhasePoly& f) {
    if (f.n_pairs() != 1) throw DimensionError("psi is defined on the plane only");
    EBasisElement r;
    for (const auto& [e, c] : f.terms()) {
        const std::int64_t b = e[0], a = e[1], m = e[2];
        for (std::int64_t n = 0; n <= std::min(a, b); ++n) {
            // h^n a! b! / (2^n n! (a-n)! (b-n)!) = h^n n! C(a,n) C(b,n) / 2^n
            Rational coeff(factorial(n) * binomial(a, n) * binomial(b, n), pow2(n));
            r.add(a - n, b - n, HbarPoly::term(m + n, c * coeff));
        }
    }
    return r;
}

PhasePoly psi_inv(const EBasisElement& A) { return gauge_to_moyal(phi_inv(A)); }

DenseMatrix::DenseMatrix(int size) : size_(size) {
    if (size < 1) throw std::domain_error("matrix size must be positive");
    cells_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size));
}

DenseMatrix DenseMatrix::identity(int size) {
    DenseMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = HbarPoly::one();
    return m;
}

const HbarPoly& DenseMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("matrix index");
    return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                  static_cast<std::size_t>(j)];
}

HbarPoly& DenseMatrix::at(int i, int j) {
    return const_cast<HbarPoly&>(static_cast<const DenseMatrix&>(*this).at(i, j));
}

std::string DenseMatrix::to_text() const {
    std::string out;
    for (int i = 0; i < size_; ++i) {
        for (int j = 0; j < size_; ++j) {
            if (j) out += "\t";
            out += at(i, j).to_string();
        }
        out += "\n";
    }
    return out;
}

DenseMatrix realize_dense(const EBasisElement& A, int N) {
    DenseMatrix m(N);
    for (const auto& [ab, c] : A.terms()) {
        const auto [a, b] = ab;
        // (E_{a,b})_{a+k, b+k} = ((b+k)!/k!) h^b
        for (std::int64_t k = 0; a + k < N && b + k < N; ++k) {
            m.at(static_cast<int>(a + k), static_cast<int>(b + k)) +=
                c * HbarPoly::term(b, Rational(falling_factorial(b + k, b)));
        }
    }
    return m;
}

DenseMatrix dense_product(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.size() != B.size()) throw DimensionError("matrix size mismatch in dense product");
    const int N = A.size();
    DenseMatrix C(N);
    for (int i = 0; i < N; ++i) {
        for (int k = 0; k < N; ++k) {
            const HbarPoly& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < N; ++j) {
                const HbarPoly& bkj = B.at(k, j);
                if (bkj.is_zero()) continue;
                C.at(i, j) += aik * bkj;
            }
        }
    }
    return C;
}

std::int64_t safe_block_width(const EBasisElement& A) {
    std::int64_t w = 0;
    for (const auto& [ab, c] : A.terms()) w = std::max(w, ab.second - ab.first);
    return w;
}

bool top_left_block_equal(const DenseMatrix& A, const DenseMatrix& B, int size) {
    if (size > A.size() || size > B.size())
        throw std::out_of_range("block size exceeds matrix size");
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (A.at(i, j) != B.at(i, j)) return false;
    return true;
}

std::optional<MembershipViolation> check_membership(const DenseMatrix& M) {
    for (int i = 0; i < M.size(); ++i) {
        for (int j = i + 1; j < M.size(); ++j) {
            auto val = M.at(i, j).valuation();
            if (!val) continue;  // zero entry: valuation +infinity
            if (*val < j - i) return MembershipViolation{i, j, *val};
        }
    }
    return std::nullopt;
}

EBasisElement ebasis_from_text(const std::string& text) {
    EBasisElement r;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        std::int64_t a = 0, b = 0;
        char colon = 0;
        if (!(ls >> a >> b >> colon) || colon != ':' || a < 0 || b < 0)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected \"a b : <h-polynomial>\"");
        std::string coeff_text;
        std::getline(ls, coeff_text);
        HbarPoly c;
        try {
            c = eval_expr(parse(tokenize(coeff_text)), 1).to_hbar_poly();
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": bad coefficient: " +
                                     e.what());
        }
        r.add(a, b, c);
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const EBasisElement& A) { return os << A.to_text(); }

}  // namespace starmat
