#include "flatfront/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace flatfront {

namespace {

constexpr long kMaxExponent = 64;

struct Token {
    enum class Type { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= s_.size()) return {Token::Type::End, "", start};
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            Token t{Token::Type::Number, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            Token t{Token::Type::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return t;
        }
        ++i_;
        switch (c) {
            case '+': return {Token::Type::Plus, "+", start};
            case '-': return {Token::Type::Minus, "-", start};
            case '*': return {Token::Type::Star, "*", start};
            case '/': return {Token::Type::Slash, "/", start};
            case '^': return {Token::Type::Caret, "^", start};
            case '(': return {Token::Type::LParen, "(", start};
            case ')': return {Token::Type::RParen, ")", start};
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

private:
    const std::string& s_;
    std::size_t i_ = 0;
};

ExprPtr make(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) { advance(); }

    ExprPtr parse()
    {
        ExprPtr e = expr();
        if (cur_.type != Token::Type::End) throw ParseError("trailing input", cur_.pos);
        return e;
    }

private:
    void advance() { cur_ = lex_.next(); }

    ExprPtr expr()
    {
        ExprPtr e = term();
        while (cur_.type == Token::Type::Plus || cur_.type == Token::Type::Minus) {
            bool plus = cur_.type == Token::Type::Plus;
            advance();
            ExprPtr r = term();
            ExprNode n;
            n.op = plus ? ExprNode::Op::Add : ExprNode::Op::Sub;
            n.lhs = e;
            n.rhs = r;
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr term()
    {
        ExprPtr e = unary();
        while (cur_.type == Token::Type::Star || cur_.type == Token::Type::Slash) {
            bool mul = cur_.type == Token::Type::Star;
            advance();
            ExprPtr r = unary();
            ExprNode n;
            n.op = mul ? ExprNode::Op::Mul : ExprNode::Op::Div;
            n.lhs = e;
            n.rhs = r;
            e = make(std::move(n));
        }
        return e;
    }

    ExprPtr unary()
    {
        if (cur_.type == Token::Type::Minus) {
            std::size_t pos = cur_.pos;
            advance();
            ExprPtr inner = unary();
            ExprNode n;
            n.op = ExprNode::Op::Neg;
            n.lhs = inner;
            (void)pos;
            return make(std::move(n));
        }
        if (cur_.type == Token::Type::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = atom();
        if (cur_.type != Token::Type::Caret) return base;
        std::size_t pos = cur_.pos;
        advance();
        long e = exponent(pos);
        ExprNode n;
        n.op = ExprNode::Op::Pow;
        n.lhs = base;
        n.exponent = e;
        return make(std::move(n));
    }

    long exponent(std::size_t caret_pos)
    {
        bool neg = false;
        bool parens = false;
        if (cur_.type == Token::Type::LParen) {
            parens = true;
            advance();
        }
        if (cur_.type == Token::Type::Minus) {
            neg = true;
            advance();
        } else if (cur_.type == Token::Type::Plus) {
            advance();
        }
        if (cur_.type != Token::Type::Number)
            throw ParseError("exponent must be an integer literal", cur_.pos);
        long v = std::strtol(cur_.text.c_str(), nullptr, 10);
        advance();
        if (parens) {
            if (cur_.type != Token::Type::RParen)
                throw ParseError("expected ')' after exponent", cur_.pos);
            advance();
        }
        if (v > kMaxExponent)
            throw ParseError("exponent exceeds the supported range |n| <= 64", caret_pos);
        return neg ? -v : v;
    }

    ExprPtr atom()
    {
        switch (cur_.type) {
            case Token::Type::Number: {
                ExprNode n;
                n.op = ExprNode::Op::Const;
                n.value = GaussianRational(rational_from_string(cur_.text));
                advance();
                return make(std::move(n));
            }
            case Token::Type::Ident: {
                ExprNode n;
                if (cur_.text == "z") {
                    n.op = ExprNode::Op::Var;
                } else if (cur_.text == "i") {
                    n.op = ExprNode::Op::Const;
                    n.value = GaussianRational(Rational(0), Rational(1));
                } else if (cur_.text == "wp") {
                    n.op = ExprNode::Op::Wp;
                } else if (cur_.text == "wpp") {
                    n.op = ExprNode::Op::Wpp;
                } else {
                    n.op = ExprNode::Op::Param;
                    n.name = cur_.text;
                }
                advance();
                return make(std::move(n));
            }
            case Token::Type::LParen: {
                advance();
                ExprPtr e = expr();
                if (cur_.type != Token::Type::RParen)
                    throw ParseError("expected ')'", cur_.pos);
                advance();
                return e;
            }
            default: throw ParseError("expected a value", cur_.pos);
        }
    }

    Lexer lex_;
    Token cur_{Token::Type::End, "", 0};
};

bool contains_elliptic(const ExprNode& n)
{
    if (n.op == ExprNode::Op::Wp || n.op == ExprNode::Op::Wpp) return true;
    if (n.lhs && contains_elliptic(*n.lhs)) return true;
    if (n.rhs && contains_elliptic(*n.rhs)) return true;
    return false;
}

RationalMap lower(const ExprNode& n, const ParamBindings& bindings)
{
    switch (n.op) {
        case ExprNode::Op::Const: return RationalMap::constant(n.value);
        case ExprNode::Op::Var: return RationalMap::identity();
        case ExprNode::Op::Param: {
            auto it = bindings.find(n.name);
            if (it == bindings.end())
                throw std::domain_error("unbound parameter '" + n.name + "'");
            return RationalMap::constant(it->second);
        }
        case ExprNode::Op::Add: return lower(*n.lhs, bindings) + lower(*n.rhs, bindings);
        case ExprNode::Op::Sub: return lower(*n.lhs, bindings) - lower(*n.rhs, bindings);
        case ExprNode::Op::Mul: return lower(*n.lhs, bindings) * lower(*n.rhs, bindings);
        case ExprNode::Op::Div: {
            RationalMap d = lower(*n.rhs, bindings);
            if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
            return lower(*n.lhs, bindings) / d;
        }
        case ExprNode::Op::Neg: return -lower(*n.lhs, bindings);
        case ExprNode::Op::Pow: {
            RationalMap b = lower(*n.lhs, bindings);
            if (n.exponent < 0 && b.is_zero())
                throw std::domain_error("zero raised to a negative power");
            return b.pow(n.exponent);
        }
        default: throw std::logic_error("elliptic symbol in rational lowering");
    }
}

std::complex<double> eval_node(const ExprNode& n, std::complex<double> wp,
                               std::complex<double> wpp, const ParamBindings& exact,
                               const std::map<std::string, std::complex<double>>& numeric)
{
    switch (n.op) {
        case ExprNode::Op::Const: return n.value.to_complex();
        case ExprNode::Op::Var:
            throw std::domain_error("z is not available in elliptic-symbolic evaluation");
        case ExprNode::Op::Wp: return wp;
        case ExprNode::Op::Wpp: return wpp;
        case ExprNode::Op::Param: {
            auto it = exact.find(n.name);
            if (it != exact.end()) return it->second.to_complex();
            auto jt = numeric.find(n.name);
            if (jt != numeric.end()) return jt->second;
            throw std::domain_error("unbound parameter '" + n.name + "'");
        }
        case ExprNode::Op::Add:
            return eval_node(*n.lhs, wp, wpp, exact, numeric) +
                   eval_node(*n.rhs, wp, wpp, exact, numeric);
        case ExprNode::Op::Sub:
            return eval_node(*n.lhs, wp, wpp, exact, numeric) -
                   eval_node(*n.rhs, wp, wpp, exact, numeric);
        case ExprNode::Op::Mul:
            return eval_node(*n.lhs, wp, wpp, exact, numeric) *
                   eval_node(*n.rhs, wp, wpp, exact, numeric);
        case ExprNode::Op::Div:
            return eval_node(*n.lhs, wp, wpp, exact, numeric) /
                   eval_node(*n.rhs, wp, wpp, exact, numeric);
        case ExprNode::Op::Neg: return -eval_node(*n.lhs, wp, wpp, exact, numeric);
        case ExprNode::Op::Pow:
            return std::pow(eval_node(*n.lhs, wp, wpp, exact, numeric),
                            std::complex<double>(double(n.exponent), 0.0));
    }
    throw std::logic_error("unreachable");
}

}  // namespace

FunctionExpr parse_function(const std::string& text, const ParamBindings& bindings)
{
    FunctionExpr f;
    f.source = text;
    f.bindings = bindings;
    f.ast = Parser(text).parse();
    if (contains_elliptic(*f.ast)) {
        f.kind = FunctionExpr::Kind::EllipticSymbolic;
    } else {
        f.kind = FunctionExpr::Kind::Rational;
        f.rational = lower(*f.ast, bindings);
    }
    return f;
}

GaussianRational parse_constant(const std::string& text)
{
    FunctionExpr f = parse_function(text, {});
    if (f.is_elliptic()) throw std::domain_error("constant expression contains wp/wpp");
    const RationalMap& r = *f.rational;
    if (!r.is_constant()) throw std::domain_error("expression is not constant: " + text);
    return r.is_zero() ? GaussianRational(0) : r.num().coeff(0) / r.den().coeff(0);
}

std::complex<double> eval_elliptic(const FunctionExpr& f, std::complex<double> wp,
                                   std::complex<double> wpp,
                                   const std::map<std::string, std::complex<double>>& numeric_bindings)
{
    return eval_node(*f.ast, wp, wpp, f.bindings, numeric_bindings);
}

}  // namespace flatfront
