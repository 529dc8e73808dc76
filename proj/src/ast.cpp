#include "divsum/ast.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace divsum {

namespace {

std::shared_ptr<Ast> blank(AstKind k, std::size_t pos) {
    auto n = std::make_shared<Ast>();
    n->kind = k;
    n->pos = pos;
    return n;
}

}  // namespace

AstPtr make_leaf(AstKind k, std::size_t pos) { return blank(k, pos); }

AstPtr make_int(Rational v, std::size_t pos) {
    auto n = blank(AstKind::Integer, pos);
    n->int_value = std::move(v);
    return n;
}

AstPtr make_dec(double v, std::size_t pos) {
    auto n = blank(AstKind::Decimal, pos);
    n->dec_value = v;
    return n;
}

AstPtr make_var(std::string name, std::size_t pos) {
    auto n = blank(AstKind::Var, pos);
    n->name = std::move(name);
    return n;
}

AstPtr make_unary(AstKind k, AstPtr a, std::size_t pos) {
    auto n = blank(k, pos);
    n->lhs = std::move(a);
    return n;
}

AstPtr make_bin(AstKind k, AstPtr a, AstPtr b, std::size_t pos) {
    auto n = blank(k, pos);
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

AstPtr make_call(CallFn fn, AstPtr a, std::size_t pos) {
    auto n = blank(AstKind::Call, pos);
    n->fn = fn;
    n->lhs = std::move(a);
    return n;
}

std::complex<double> eval_ast(const AstPtr& e, double u) {
    using C = std::complex<double>;
    switch (e->kind) {
        case AstKind::Integer:
            return C(e->int_value.to_double(), 0.0);
        case AstKind::Decimal:
            return C(e->dec_value, 0.0);
        case AstKind::Var:
            return C(u, 0.0);
        case AstKind::Pi:
            return C(3.14159265358979323846, 0.0);
        case AstKind::ImagUnit:
            return C(0.0, 1.0);
        case AstKind::Neg:
            return -eval_ast(e->lhs, u);
        case AstKind::Add:
            return eval_ast(e->lhs, u) + eval_ast(e->rhs, u);
        case AstKind::Sub:
            return eval_ast(e->lhs, u) - eval_ast(e->rhs, u);
        case AstKind::Mul:
            return eval_ast(e->lhs, u) * eval_ast(e->rhs, u);
        case AstKind::Div:
            return eval_ast(e->lhs, u) / eval_ast(e->rhs, u);
        case AstKind::Pow: {
            C b = eval_ast(e->lhs, u);
            C x = eval_ast(e->rhs, u);
            // Integer exponent of a real base: use repeated squaring so
            // (-1)^u stays exactly +-1 instead of drifting through the
            // complex logarithm.
            double xr = x.real();
            double k = std::round(xr);
            if (x.imag() == 0.0 && std::fabs(xr - k) < 1e-9 &&
                std::fabs(k) < 1e15) {
                long long n = static_cast<long long>(k);
                bool invert = n < 0;
                unsigned long long m =
                    invert ? static_cast<unsigned long long>(-(n + 1)) + 1ULL
                           : static_cast<unsigned long long>(n);
                C acc(1.0, 0.0);
                C base = b;
                while (m > 0) {
                    if (m & 1ULL) acc *= base;
                    base *= base;
                    m >>= 1ULL;
                }
                return invert ? C(1.0, 0.0) / acc : acc;
            }
            return std::pow(b, x);
        }
        case AstKind::Call: {
            C a = eval_ast(e->lhs, u);
            switch (e->fn) {
                case CallFn::Cos:
                    return std::cos(a);
                case CallFn::Sin:
                    return std::sin(a);
                case CallFn::Cosh:
                    return std::cosh(a);
                case CallFn::Sinh:
                    return std::sinh(a);
                case CallFn::Exp:
                    return std::exp(a);
            }
            return C(0.0, 0.0);
        }
    }
    return std::complex<double>(0.0, 0.0);
}

namespace {

// Precedence levels for printing: higher binds tighter.
int print_prec(const Ast& e) {
    switch (e.kind) {
        case AstKind::Add:
        case AstKind::Sub:
            return 10;
        case AstKind::Mul:
        case AstKind::Div:
            return 20;
        case AstKind::Neg:
            return 30;
        case AstKind::Pow:
            return 40;
        default:
            return 100;
    }
}

void print(std::ostringstream& out, const AstPtr& e, int parent_prec) {
    int prec = print_prec(*e);
    bool need_paren = prec < parent_prec;
    if (need_paren) out << '(';
    switch (e->kind) {
        case AstKind::Integer:
            out << e->int_value.str();
            break;
        case AstKind::Decimal: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", e->dec_value);
            out << buf;
            break;
        }
        case AstKind::Var:
            out << e->name;
            break;
        case AstKind::Pi:
            out << "pi";
            break;
        case AstKind::ImagUnit:
            out << "i";
            break;
        case AstKind::Neg:
            out << '-';
            print(out, e->lhs, prec + 1);
            break;
        case AstKind::Add:
            print(out, e->lhs, prec);
            out << " + ";
            print(out, e->rhs, prec + 1);
            break;
        case AstKind::Sub:
            print(out, e->lhs, prec);
            out << " - ";
            print(out, e->rhs, prec + 1);
            break;
        case AstKind::Mul:
            print(out, e->lhs, prec);
            out << "*";
            print(out, e->rhs, prec + 1);
            break;
        case AstKind::Div:
            print(out, e->lhs, prec);
            out << "/";
            print(out, e->rhs, prec + 1);
            break;
        case AstKind::Pow:
            // Right associative: parenthesize a left child of equal
            // precedence, and any unary minus below us.
            print(out, e->lhs, prec + 1);
            out << "^";
            print(out, e->rhs, prec);
            break;
        case AstKind::Call: {
            const char* name = "";
            switch (e->fn) {
                case CallFn::Cos:
                    name = "cos";
                    break;
                case CallFn::Sin:
                    name = "sin";
                    break;
                case CallFn::Cosh:
                    name = "cosh";
                    break;
                case CallFn::Sinh:
                    name = "sinh";
                    break;
                case CallFn::Exp:
                    name = "exp";
                    break;
            }
            out << name << '(';
            print(out, e->lhs, 0);
            out << ')';
            break;
        }
    }
    if (need_paren) out << ')';
}

}  // namespace

std::string ast_str(const AstPtr& e) {
    std::ostringstream out;
    print(out, e, 0);
    return out.str();
}

}  // namespace divsum
