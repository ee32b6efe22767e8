// Parser for textual Gauss-map specifications: arithmetic over z, named
// exact parameters, integer/rational literals, i, and (for the torus
// catalog entry) the symbols wp / wpp.
#pragma once

#include "flatfront/rational_map.hpp"

#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace flatfront {

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          pos(position)
    {
    }
    std::size_t pos;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    enum class Op { Const, Var, Wp, Wpp, Param, Add, Sub, Mul, Div, Neg, Pow };
    Op op = Op::Const;
    GaussianRational value;  // Const
    std::string name;        // Param
    ExprPtr lhs, rhs;
    long exponent = 0;  // Pow
};

using ParamBindings = std::map<std::string, GaussianRational>;

struct FunctionExpr {
    enum class Kind { Rational, EllipticSymbolic };
    std::string source;
    Kind kind = Kind::Rational;
    ParamBindings bindings;
    ExprPtr ast;
    std::optional<RationalMap> rational;  // set iff kind == Rational

    bool is_elliptic() const { return kind == Kind::EllipticSymbolic; }
};

// Parses and, for purely rational input, lowers to a reduced RationalMap
// with parameters substituted exactly. Expressions containing wp/wpp stay
// symbolic (parameters may remain unbound there; they bind at evaluation).
FunctionExpr parse_function(const std::string& text, const ParamBindings& bindings = {});

// Parses a constant expression (no z, no wp/wpp) to an exact scalar; used
// for parameter values on the command line.
GaussianRational parse_constant(const std::string& text);

// Numeric evaluation of an elliptic-symbolic expression at given (wp, wpp)
// values; numeric_bindings supply parameters that have no exact binding.
std::complex<double> eval_elliptic(const FunctionExpr& f, std::complex<double> wp,
                                   std::complex<double> wpp,
                                   const std::map<std::string, std::complex<double>>& numeric_bindings);

}  // namespace flatfront
