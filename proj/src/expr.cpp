#include "starmat/expr.hpp"

#include <cctype>
#include <utility>

#include "starmat/errors.hpp"
#include "starmat/star_product.hpp"

namespace starmat {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = input.size();
    auto simple = [&](Token::Type t, std::size_t at, std::size_t len) {
        out.push_back(Token{t, at, Rational(0), 0, 1, input.substr(at, len)});
    };
    while (i < n) {
        const char c = input[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        switch (c) {
            case '+': simple(Token::Type::Plus, i++, 1); continue;
            case '-': simple(Token::Type::Minus, i++, 1); continue;
            case '^': simple(Token::Type::Caret, i++, 1); continue;
            case '(': simple(Token::Type::LParen, i++, 1); continue;
            case ')': simple(Token::Type::RParen, i++, 1); continue;
            case '[': simple(Token::Type::LBracket, i++, 1); continue;
            case ']': simple(Token::Type::RBracket, i++, 1); continue;
            case '{': simple(Token::Type::LBrace, i++, 1); continue;
            case '}': simple(Token::Type::RBrace, i++, 1); continue;
            case ',': simple(Token::Type::Comma, i++, 1); continue;
            case '*': simple(Token::Type::Star, i++, 1); continue;
            case '<':
                if (i + 2 < n && input[i + 2] == '>' && (input[i + 1] == '*' || input[i + 1] == '.')) {
                    simple(input[i + 1] == '*' ? Token::Type::MoyalStar : Token::Type::StandardStar,
                           i, 3);
                    i += 3;
                    continue;
                }
                throw ParseError("expected '<*>' or '<.>'", i);
            case '/':
                throw ParseError("'/' is only allowed inside a rational literal", i);
            default: break;
        }
        if (is_digit(c)) {
            while (i < n && is_digit(input[i])) ++i;
            std::string num = input.substr(start, i - start);
            if (i < n && input[i] == '/') {
                if (i + 1 >= n || !is_digit(input[i + 1]))
                    throw ParseError("expected digits after '/' in rational literal", i);
                ++i;
                const std::size_t den_start = i;
                while (i < n && is_digit(input[i])) ++i;
                num += "/" + input.substr(den_start, i - den_start);
            }
            Token t{Token::Type::Number, start, Rational::from_string(num), 0, 1,
                    input.substr(start, i - start)};
            out.push_back(std::move(t));
            continue;
        }
        if (c == 'x' || c == 'p' || c == 'h') {
            ++i;
            std::int64_t index = 1;
            if (i < n && is_digit(input[i])) {
                const std::size_t idx_start = i;
                while (i < n && is_digit(input[i])) ++i;
                const std::string idx = input.substr(idx_start, i - idx_start);
                if (idx.size() > 9) throw ParseError("variable index too large", start);
                index = std::stoll(idx);
                if (index < 1) throw ParseError("variable index must be >= 1", start);
                if (c == 'h' && index != 1) throw ParseError("h takes no index", start);
            }
            if (i < n && std::isalpha(static_cast<unsigned char>(input[i])))
                throw ParseError("unknown identifier", start);
            out.push_back(Token{Token::Type::Var, start, Rational(0), c, index,
                                input.substr(start, i - start)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unknown identifier", i);
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back(Token{Token::Type::End, n, Rational(0), 0, 1, ""});
    return out;
}

ExprPtr Expr::number(const Rational& value) {
    if (value.sign() < 0) return neg(number(-value));
    auto e = std::make_shared<Expr>();
    e->op = Op::Number;
    e->value = value;
    return e;
}

ExprPtr Expr::var(VarKind kind, std::int64_t index) {
    if (index < 1) throw std::domain_error("variable index must be >= 1");
    auto e = std::make_shared<Expr>();
    e->op = Op::Var;
    e->var_kind = kind;
    e->var_index = index;
    return e;
}

namespace {

ExprPtr make_node(Expr::Op op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

}  // namespace

ExprPtr Expr::neg(ExprPtr e) { return make_node(Op::Neg, std::move(e), nullptr); }
ExprPtr Expr::add(ExprPtr a, ExprPtr b) { return make_node(Op::Add, std::move(a), std::move(b)); }
ExprPtr Expr::sub(ExprPtr a, ExprPtr b) { return make_node(Op::Sub, std::move(a), std::move(b)); }
ExprPtr Expr::pointwise(ExprPtr a, ExprPtr b) {
    return make_node(Op::Pointwise, std::move(a), std::move(b));
}
ExprPtr Expr::moyal(ExprPtr a, ExprPtr b) {
    return make_node(Op::Moyal, std::move(a), std::move(b));
}
ExprPtr Expr::standard(ExprPtr a, ExprPtr b) {
    return make_node(Op::Standard, std::move(a), std::move(b));
}
ExprPtr Expr::pow(ExprPtr base, std::int64_t exponent) {
    if (exponent < 0) throw std::domain_error("pow exponent must be non-negative");
    auto e = std::make_shared<Expr>();
    e->op = Op::Pow;
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}
ExprPtr Expr::moyal_commutator(ExprPtr a, ExprPtr b) {
    return make_node(Op::MoyalCommutator, std::move(a), std::move(b));
}
ExprPtr Expr::poisson_bracket(ExprPtr a, ExprPtr b) {
    return make_node(Op::PoissonBracket, std::move(a), std::move(b));
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.op != b.op) return false;
    switch (a.op) {
        case Expr::Op::Number: return a.value == b.value;
        case Expr::Op::Var: return a.var_kind == b.var_kind && a.var_index == b.var_index;
        case Expr::Op::Neg: return *a.lhs == *b.lhs;
        case Expr::Op::Pow: return a.exponent == b.exponent && *a.lhs == *b.lhs;
        default: return *a.lhs == *b.lhs && *a.rhs == *b.rhs;
    }
}

namespace {

class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    ExprPtr run() {
        ExprPtr e = expr();
        if (cur().type != Token::Type::End)
            throw ParseError("unexpected trailing input", cur().offset, "end of input");
        return e;
    }

private:
    const Token& cur() const { return tokens_[pos_]; }
    void advance() { ++pos_; }

    void expect(Token::Type t, const char* what) {
        if (cur().type != t)
            throw ParseError(std::string("expected ") + what, cur().offset, what);
        advance();
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (true) {
            if (cur().type == Token::Type::Plus) {
                advance();
                lhs = Expr::add(std::move(lhs), term());
            } else if (cur().type == Token::Type::Minus) {
                advance();
                lhs = Expr::sub(std::move(lhs), term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        while (true) {
            switch (cur().type) {
                case Token::Type::Star:
                    advance();
                    lhs = Expr::pointwise(std::move(lhs), factor());
                    break;
                case Token::Type::MoyalStar:
                    advance();
                    lhs = Expr::moyal(std::move(lhs), factor());
                    break;
                case Token::Type::StandardStar:
                    advance();
                    lhs = Expr::standard(std::move(lhs), factor());
                    break;
                default:
                    return lhs;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (cur().type != Token::Type::Caret) return base;
        advance();
        const Token& t = cur();
        if (t.type != Token::Type::Number || t.value.den() != 1 || t.value.sign() < 0)
            throw ParseError("exponent must be a non-negative integer literal", t.offset,
                             "non-negative integer");
        if (t.value.num() > PhasePoly::kMaxExponent)
            throw ParseError("exponent too large", t.offset);
        advance();
        return Expr::pow(std::move(base), t.value.num().get_si());
    }

    ExprPtr atom() {
        const Token& t = cur();
        switch (t.type) {
            case Token::Type::Number:
                advance();
                return Expr::number(t.value);
            case Token::Type::Var: {
                advance();
                VarKind k = t.var_kind == 'x' ? VarKind::X
                          : t.var_kind == 'p' ? VarKind::P
                                              : VarKind::H;
                return Expr::var(k, t.var_index);
            }
            case Token::Type::Minus:
                advance();
                return Expr::neg(atom());
            case Token::Type::LParen: {
                advance();
                ExprPtr e = expr();
                expect(Token::Type::RParen, "')'");
                return e;
            }
            case Token::Type::LBracket: {
                advance();
                ExprPtr a = expr();
                expect(Token::Type::Comma, "','");
                ExprPtr b = expr();
                expect(Token::Type::RBracket, "']'");
                return Expr::moyal_commutator(std::move(a), std::move(b));
            }
            case Token::Type::LBrace: {
                advance();
                ExprPtr a = expr();
                expect(Token::Type::Comma, "','");
                ExprPtr b = expr();
                expect(Token::Type::RBrace, "'}'");
                return Expr::poisson_bracket(std::move(a), std::move(b));
            }
            default:
                throw ParseError("expected a rational, a variable, '(', '-', '[' or '{'",
                                 t.offset, "rational | variable | '(' | '-' | '[' | '{'");
        }
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

std::string var_name(VarKind kind, std::int64_t index) {
    std::string name = kind == VarKind::X ? "x" : kind == VarKind::P ? "p" : "h";
    if (kind != VarKind::H && index != 1) name += std::to_string(index);
    return name;
}

}  // namespace

ExprPtr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

std::string print_expr(const ExprPtr& e) {
    switch (e->op) {
        case Expr::Op::Number: return e->value.to_string();
        case Expr::Op::Var: return var_name(e->var_kind, e->var_index);
        case Expr::Op::Neg: return "(-" + print_expr(e->lhs) + ")";
        case Expr::Op::Pow:
            return "(" + print_expr(e->lhs) + "^" + std::to_string(e->exponent) + ")";
        case Expr::Op::Add: return "(" + print_expr(e->lhs) + " + " + print_expr(e->rhs) + ")";
        case Expr::Op::Sub: return "(" + print_expr(e->lhs) + " - " + print_expr(e->rhs) + ")";
        case Expr::Op::Pointwise:
            return "(" + print_expr(e->lhs) + " * " + print_expr(e->rhs) + ")";
        case Expr::Op::Moyal: return "(" + print_expr(e->lhs) + " <*> " + print_expr(e->rhs) + ")";
        case Expr::Op::Standard:
            return "(" + print_expr(e->lhs) + " <.> " + print_expr(e->rhs) + ")";
        case Expr::Op::MoyalCommutator:
            return "[" + print_expr(e->lhs) + ", " + print_expr(e->rhs) + "]";
        case Expr::Op::PoissonBracket:
            return "{" + print_expr(e->lhs) + ", " + print_expr(e->rhs) + "}";
    }
    throw std::logic_error("unreachable");
}

PhasePoly eval_expr(const ExprPtr& e, int n_pairs) {
    switch (e->op) {
        case Expr::Op::Number: return PhasePoly::constant(n_pairs, e->value);
        case Expr::Op::Var:
            switch (e->var_kind) {
                case VarKind::X:
                    return PhasePoly::variable(n_pairs, VarRef::x(static_cast<int>(e->var_index)));
                case VarKind::P:
                    return PhasePoly::variable(n_pairs, VarRef::p(static_cast<int>(e->var_index)));
                case VarKind::H:
                    if (e->var_index != 1) throw DimensionError("h takes no index");
                    return PhasePoly::hbar(n_pairs);
            }
            throw std::logic_error("unreachable");
        case Expr::Op::Neg: return -eval_expr(e->lhs, n_pairs);
        case Expr::Op::Add: return eval_expr(e->lhs, n_pairs) + eval_expr(e->rhs, n_pairs);
        case Expr::Op::Sub: return eval_expr(e->lhs, n_pairs) - eval_expr(e->rhs, n_pairs);
        case Expr::Op::Pointwise: return eval_expr(e->lhs, n_pairs) * eval_expr(e->rhs, n_pairs);
        case Expr::Op::Moyal:
            return moyal_product(eval_expr(e->lhs, n_pairs), eval_expr(e->rhs, n_pairs));
        case Expr::Op::Standard:
            return standard_product(eval_expr(e->lhs, n_pairs), eval_expr(e->rhs, n_pairs));
        case Expr::Op::Pow: return eval_expr(e->lhs, n_pairs).pow(e->exponent);
        case Expr::Op::MoyalCommutator:
            return moyal_commutator(eval_expr(e->lhs, n_pairs), eval_expr(e->rhs, n_pairs));
        case Expr::Op::PoissonBracket:
            return poisson_bracket(eval_expr(e->lhs, n_pairs), eval_expr(e->rhs, n_pairs));
    }
    throw std::logic_error("unreachable");
}

}  // namespace starmat
