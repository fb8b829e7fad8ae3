#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "starmat/phase_poly.hpp"
#include "starmat/rational.hpp"

namespace starmat {

// Star-expression language.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'<*>'|'<.>') factor)*
//   factor := atom ('^' nat)?
//   atom   := rational | var | '(' expr ')' | '-' atom
//           | '[' expr ',' expr ']'          (Moyal commutator)
//           | '{' expr ',' expr '}'          (Poisson bracket)
//
// '*' is the pointwise product, '<*>' the Moyal product, '<.>' the
// standard-ordered product. All three share one precedence level and
// associate left, so star expressions should be parenthesized explicitly.
// '^' binds tighter and means the commutative (pointwise) power. Variables
// are x, p (optional index suffix: x2, p3; plain x, p mean index 1) and the
// reserved h. Rational literals look like 7 or 3/2; '/' is legal only there.

struct Token {
    enum class Type {
        Number,       // 7, 3/2
        Var,          // x, p3, h
        Plus, Minus, Star, MoyalStar, StandardStar, Caret,
        LParen, RParen, LBracket, RBracket, LBrace, RBrace, Comma,
        End
    };
    Type type;
    std::size_t offset;        // byte position in the input
    Rational value;            // Number
    char var_kind = 0;         // Var: 'x', 'p' or 'h'
    std::int64_t var_index = 1;
    std::string text;
};

std::vector<Token> tokenize(const std::string& input);

enum class VarKind { X, P, H };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable AST node. Build through the factories, which keep two
/// invariants the printer relies on: Number holds a non-negative rational
/// (negative values normalize to Neg(Number)), and Pow exponents are
/// non-negative literals.
struct Expr {
    enum class Op {
        Number, Var, Neg, Add, Sub, Pointwise, Moyal, Standard, Pow,
        MoyalCommutator, PoissonBracket
    };

    Op op;
    Rational value;                 // Number
    VarKind var_kind = VarKind::X;  // Var
    std::int64_t var_index = 1;     // Var (>= 1)
    std::int64_t exponent = 0;      // Pow
    ExprPtr lhs, rhs;               // children; Neg and Pow use lhs only

    static ExprPtr number(const Rational& value);
    static ExprPtr var(VarKind kind, std::int64_t index = 1);
    static ExprPtr neg(ExprPtr e);
    static ExprPtr add(ExprPtr a, ExprPtr b);
    static ExprPtr sub(ExprPtr a, ExprPtr b);
    static ExprPtr pointwise(ExprPtr a, ExprPtr b);
    static ExprPtr moyal(ExprPtr a, ExprPtr b);
    static ExprPtr standard(ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr base, std::int64_t exponent);
    static ExprPtr moyal_commutator(ExprPtr a, ExprPtr b);
    static ExprPtr poisson_bracket(ExprPtr a, ExprPtr b);
};

bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

ExprPtr parse(const std::vector<Token>& tokens);
inline ExprPtr parse(const std::string& input) { return parse(tokenize(input)); }

/// Fully parenthesized canonical rendering; parse(print_expr(e)) == *e.
std::string print_expr(const ExprPtr& e);

PhasePoly eval_expr(const ExprPtr& e, int n_pairs);

}  // namespace starmat
