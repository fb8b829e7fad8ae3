#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starmat/hbar_poly.hpp"
#include "starmat/phase_poly.hpp"

namespace starmat {

/// Finite linear combination sum c_{a,b}(h) E_{a,b} of the generators of the
/// infinite matrix algebra, with coefficients polynomial in h.
///
/// E_{a,b} is the matrix with entries ((b+k)!/k!) h^b at (a+k, b+k), k >= 0,
/// and zero elsewhere. No zero coefficient is ever stored, so equality of
/// term maps is equality of elements.
class EBasisElement {
public:
    using Index = std::pair<std::int64_t, std::int64_t>;  // (a, b)
    using TermMap = std::map<Index, HbarPoly>;

    EBasisElement() = default;

    /// The single generator E_{a,b}, optionally scaled.
    static EBasisElement unit(std::int64_t a, std::int64_t b,
                              const HbarPoly& coeff = HbarPoly::one());

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    HbarPoly coeff(std::int64_t a, std::int64_t b) const;

    void add(std::int64_t a, std::int64_t b, const HbarPoly& c);

    EBasisElement operator-() const;
    EBasisElement& operator+=(const EBasisElement& o);
    EBasisElement& operator-=(const EBasisElement& o);
    friend EBasisElement operator+(EBasisElement a, const EBasisElement& b) { return a += b; }
    friend EBasisElement operator-(EBasisElement a, const EBasisElement& b) { return a -= b; }

    EBasisElement scaled(const HbarPoly& c) const;

    friend bool operator==(const EBasisElement& x, const EBasisElement& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const EBasisElement& x, const EBasisElement& y) { return !(x == y); }

    /// One term per line, "a b : <h-polynomial>", largest (a+b) first.
    std::string to_text() const;

private:
    TermMap terms_;
};

/// Product by the structure constants
///   E_{a,b} E_{c,d} = sum_{n=0}^{min(b,c)} h^n b! c! / (n! (b-n)! (c-n)!)
///                     E_{a+c-n, b+d-n},
/// extended bilinearly over the h-polynomial coefficients.
EBasisElement ebasis_product(const EBasisElement& A, const EBasisElement& B);

/// Isomorphism for the standard-ordered product: p^a x^b -> E_{a,b},
/// extended linearly (h^m coefficients land in the h-polynomial slot).
EBasisElement phi(const PhasePoly& f);
PhasePoly phi_inv(const EBasisElement& A);

/// Isomorphism for the Moyal product:
///   p^a x^b -> sum_{n=0}^{min(a,b)} h^n a! b! / (2^n n! (a-n)! (b-n)!)
///              E_{a-n, b-n}.
EBasisElement psi(const PhasePoly& f);
/// Inverse of psi, computed as gauge_to_moyal(phi_inv(A)).
PhasePoly psi_inv(const EBasisElement& A);

/// Dense N x N truncation of an infinite matrix, entries polynomial in h.
class DenseMatrix {
public:
    explicit DenseMatrix(int size);

    static DenseMatrix identity(int size);

    int size() const { return size_; }
    const HbarPoly& at(int i, int j) const;
    HbarPoly& at(int i, int j);

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.size_ == b.size_ && a.cells_ == b.cells_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

    /// Rows of h-polynomial strings, tab separated.
    std::string to_text() const;

private:
    int size_;
    std::vector<HbarPoly> cells_;
};

/// The top-left N x N corner of the infinite matrix A represents.
DenseMatrix realize_dense(const EBasisElement& A, int N);

/// Ordinary matrix product over the h-polynomial ring.
DenseMatrix dense_product(const DenseMatrix& A, const DenseMatrix& B);

/// W = max over the support of A of max(b - a, 0). For any B, the top-left
/// (N-W) x (N-W) block of realize(A,N) * realize(B,N) equals the same block
/// of realize(A*B, N): entries of A above offset W vanish, so truncating the
/// inner sum at N loses nothing in the first N-W rows.
std::int64_t safe_block_width(const EBasisElement& A);

/// True iff the two matrices agree on their top-left size x size block.
bool top_left_block_equal(const DenseMatrix& A, const DenseMatrix& B, int size);

struct MembershipViolation {
    int i;
    int j;
    std::int64_t valuation;  // h-adic valuation of the offending entry
};

/// Checks the defining band condition: every entry above the diagonal at
/// (i, j), i < j, must have h-adic valuation >= j - i. Returns the first
/// violation in row-major order, or nullopt if the matrix belongs to the
/// algebra.
std::optional<MembershipViolation> check_membership(const DenseMatrix& M);

/// Parses the E-basis text format: one "a b : <h-polynomial>" term per line,
/// blank lines and '#' comments ignored; duplicate indices accumulate.
EBasisElement ebasis_from_text(const std::string& text);

std::ostream& operator<<(std::ostream& os, const EBasisElement& A);

}  // namespace starmat
