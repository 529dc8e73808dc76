#ifndef DIVSUM_AST_HPP
#define DIVSUM_AST_HPP

/**
 * @brief Expression syntax trees for the query language.
 *
 * Grammar (precedence low to high): + -, * /, unary -, ^ (right
 * associative, so 2^3^2 = 2^9 and -2^u = -(2^u)).  Atoms: integer and
 * decimal literals, the summation variable (u or n), pi, the imaginary
 * unit i, parentheses, and the calls cos, sin, cosh, sinh, exp.
 */

#include <complex>
#include <memory>
#include <string>

#include "divsum/rational.hpp"

namespace divsum {

enum class AstKind {
    Integer,
    Decimal,
    Var,
    Pi,
    ImagUnit,
    Neg,
    Add,
    Sub,
    Mul,
    Div,
    Pow,
    Call
};

enum class CallFn { Cos, Sin, Cosh, Sinh, Exp };

struct Ast;
using AstPtr = std::shared_ptr<const Ast>;

struct Ast {
    AstKind kind;
    std::size_t pos = 0;   // byte offset into the query text
    Rational int_value;    // Integer
    double dec_value = 0;  // Decimal
    std::string name;      // Var
    CallFn fn = CallFn::Cos;
    AstPtr lhs;  // unary operand / call argument / left operand
    AstPtr rhs;  // right operand
};

AstPtr make_leaf(AstKind k, std::size_t pos);
AstPtr make_int(Rational v, std::size_t pos);
AstPtr make_dec(double v, std::size_t pos);
AstPtr make_var(std::string name, std::size_t pos);
AstPtr make_unary(AstKind k, AstPtr a, std::size_t pos);
AstPtr make_bin(AstKind k, AstPtr a, AstPtr b, std::size_t pos);
AstPtr make_call(CallFn fn, AstPtr a, std::size_t pos);

// Numeric evaluation with the variable bound to `u`.  Integer powers of
// real bases are computed sign-exactly (no drift from complex logs).
std::complex<double> eval_ast(const AstPtr& e, double u);

// Minimal-parentheses rendering; re-parses to an equivalent tree.
std::string ast_str(const AstPtr& e);

}  // namespace divsum

#endif  // DIVSUM_AST_HPP
