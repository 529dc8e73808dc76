#include "divsum/lower.hpp"

#include <cmath>
#include <complex>
#include <optional>

#include "divsum/errors.hpp"
#include "divsum/gaussian.hpp"

namespace divsum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long long kMaxPolyPower = 64;

// Internal control-flow signal: the term is representable, but only with
// irrational (float) constants.  Never escapes this translation unit.
struct NeedsFloatSignal {};

// A folded constant.  Exact Gaussian rationals and rational multiples of
// pi keep symbolic identity (so trig phases like u*pi/2 stay exact);
// everything else collapses to a complex double.
struct Folded {
    enum class Kind { Exact, PiMult, Num } kind = Kind::Exact;
    GaussianRational g;  // Kind::Exact
    Rational pi_m;       // Kind::PiMult: value = pi_m * pi
    std::complex<double> z{0.0, 0.0};  // Kind::Num

    static Folded of_exact(GaussianRational v) {
        Folded f;
        f.kind = Kind::Exact;
        f.g = std::move(v);
        return f;
    }
    static Folded of_pi(Rational m) {
        // Normalize 0*pi to the exact zero so it never forces float mode.
        if (m.is_zero()) return of_exact(GaussianRational(0));
        Folded f;
        f.kind = Kind::PiMult;
        f.pi_m = std::move(m);
        return f;
    }
    static Folded of_num(std::complex<double> v) {
        Folded f;
        f.kind = Kind::Num;
        f.z = v;
        return f;
    }

    std::complex<double> value() const {
        switch (kind) {
            case Kind::Exact:
                return g.to_complex();
            case Kind::PiMult:
                return std::complex<double>(pi_m.to_double() * kPi, 0.0);
            case Kind::Num:
                return z;
        }
        return {0.0, 0.0};
    }

    bool is_zero() const {
        if (kind == Kind::Exact) return g.is_zero();
        if (kind == Kind::PiMult) return false;  // normalized away
        return z.real() == 0.0 && z.imag() == 0.0;
    }
    bool is_real() const {
        if (kind == Kind::Exact) return g.is_real();
        if (kind == Kind::PiMult) return true;
        return z.imag() == 0.0;
    }
};

Folded fold_neg(const Folded& a) {
    switch (a.kind) {
        case Folded::Kind::Exact:
            return Folded::of_exact(-a.g);
        case Folded::Kind::PiMult:
            return Folded::of_pi(-a.pi_m);
        case Folded::Kind::Num:
            return Folded::of_num(-a.z);
    }
    return a;
}

Folded fold_add(const Folded& a, const Folded& b) {
    if (a.kind == Folded::Kind::Exact && b.kind == Folded::Kind::Exact)
        return Folded::of_exact(a.g + b.g);
    if (a.kind == Folded::Kind::PiMult && b.kind == Folded::Kind::PiMult)
        return Folded::of_pi(a.pi_m + b.pi_m);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Folded::of_num(a.value() + b.value());
}

Folded fold_sub(const Folded& a, const Folded& b) {
    return fold_add(a, fold_neg(b));
}

Folded fold_mul(const Folded& a, const Folded& b) {
    if (a.kind == Folded::Kind::Exact && b.kind == Folded::Kind::Exact)
        return Folded::of_exact(a.g * b.g);
    if (a.kind == Folded::Kind::PiMult && b.kind == Folded::Kind::Exact &&
        b.g.is_real())
        return Folded::of_pi(a.pi_m * b.g.re());
    if (b.kind == Folded::Kind::PiMult && a.kind == Folded::Kind::Exact &&
        a.g.is_real())
        return Folded::of_pi(b.pi_m * a.g.re());
    return Folded::of_num(a.value() * b.value());
}

Folded fold_div(const Folded& a, const Folded& b, std::size_t pos) {
    (void)pos;
    if (b.is_zero()) throw DomainError("division by zero in a constant");
    if (a.kind == Folded::Kind::Exact && b.kind == Folded::Kind::Exact)
        return Folded::of_exact(a.g / b.g);
    if (a.kind == Folded::Kind::PiMult && b.kind == Folded::Kind::Exact &&
        b.g.is_real())
        return Folded::of_pi(a.pi_m / b.g.re());
    return Folded::of_num(a.value() / b.value());
}

// The exponent of a folded power must be constant; integer exponents of
// exact bases stay exact.
std::optional<long long> exact_integer(const Folded& f) {
    if (f.kind != Folded::Kind::Exact) return std::nullopt;
    if (!f.g.is_real() || !f.g.re().is_integer()) return std::nullopt;
    BigInt n = f.g.re().num();
    static const BigInt kMax = (BigInt(1) << 62);
    if (n > kMax || n < -kMax) return std::nullopt;
    return static_cast<long long>(n);
}

std::complex<double> complex_int_pow(std::complex<double> b, long long k) {
    bool invert = k < 0;
    unsigned long long m =
        invert ? static_cast<unsigned long long>(-(k + 1)) + 1ULL
               : static_cast<unsigned long long>(k);
    std::complex<double> acc(1.0, 0.0);
    while (m > 0) {
        if (m & 1ULL) acc *= b;
        b *= b;
        m >>= 1ULL;
    }
    return invert ? std::complex<double>(1.0, 0.0) / acc : acc;
}

Folded fold_pow(const Folded& a, const Folded& b) {
    if (auto k = exact_integer(b)) {
        if (a.kind == Folded::Kind::Exact) {
            if (a.g.is_zero() && *k < 0)
                throw DomainError("zero raised to a negative power");
            return Folded::of_exact(a.g.pow(*k));
        }
        return Folded::of_num(complex_int_pow(a.value(), *k));
    }
    std::complex<double> v = std::pow(a.value(), b.value());
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError("constant power is singular");
    return Folded::of_num(v);
}

// i^m for the quarter-turn table (m taken mod 4).
GaussianRational quarter_turn(long long m) {
    long long r = ((m % 4) + 4) % 4;
    switch (r) {
        case 0:
            return GaussianRational(1);
        case 1:
            return GaussianRational::i();
        case 2:
            return GaussianRational(-1);
        default:
            return -GaussianRational::i();
    }
}

// cos/sin/cosh/sinh/exp of a folded constant.  Exact zero arguments and
// half-integer multiples of pi (for cos/sin) keep exact values.
Folded fold_call(CallFn fn, const Folded& a) {
    if (a.is_zero()) {
        switch (fn) {
            case CallFn::Cos:
            case CallFn::Cosh:
            case CallFn::Exp:
                return Folded::of_exact(GaussianRational(1));
            case CallFn::Sin:
            case CallFn::Sinh:
                return Folded::of_exact(GaussianRational(0));
        }
    }
    if ((fn == CallFn::Cos || fn == CallFn::Sin) &&
        a.kind == Folded::Kind::PiMult) {
        Rational twice = a.pi_m * Rational(2);
        if (twice.is_integer()) {
            static const BigInt kMax = (BigInt(1) << 62);
            BigInt n = twice.num();
            if (n <= kMax && n >= -kMax) {
                // e^(i*pi*m/2) = i^m; cos/sin are its real/imaginary parts.
                GaussianRational w =
                    quarter_turn(static_cast<long long>(n));
                return Folded::of_exact(GaussianRational(
                    fn == CallFn::Cos ? w.re() : w.im()));
            }
        }
    }
    std::complex<double> v = a.value();
    switch (fn) {
        case CallFn::Cos:
            return Folded::of_num(std::cos(v));
        case CallFn::Sin:
            return Folded::of_num(std::sin(v));
        case CallFn::Cosh:
            return Folded::of_num(std::cosh(v));
        case CallFn::Sinh:
            return Folded::of_num(std::sinh(v));
        case CallFn::Exp:
            return Folded::of_num(std::exp(v));
    }
    return a;
}

// Fold a variable-free subtree to a constant; nullopt when the variable
// occurs anywhere inside.
std::optional<Folded> fold(const AstPtr& e) {
    switch (e->kind) {
        case AstKind::Integer:
            return Folded::of_exact(GaussianRational(e->int_value));
        case AstKind::Decimal:
            return Folded::of_num({e->dec_value, 0.0});
        case AstKind::Var:
            return std::nullopt;
        case AstKind::Pi:
            return Folded::of_pi(Rational(1));
        case AstKind::ImagUnit:
            return Folded::of_exact(GaussianRational::i());
        case AstKind::Neg: {
            auto a = fold(e->lhs);
            if (!a) return std::nullopt;
            return fold_neg(*a);
        }
        case AstKind::Add:
        case AstKind::Sub:
        case AstKind::Mul:
        case AstKind::Div:
        case AstKind::Pow: {
            auto a = fold(e->lhs);
            auto b = fold(e->rhs);
            if (!a || !b) return std::nullopt;
            switch (e->kind) {
                case AstKind::Add:
                    return fold_add(*a, *b);
                case AstKind::Sub:
                    return fold_sub(*a, *b);
                case AstKind::Mul:
                    return fold_mul(*a, *b);
                case AstKind::Div:
                    return fold_div(*a, *b, e->pos);
                default:
                    return fold_pow(*a, *b);
            }
        }
        case AstKind::Call: {
            auto a = fold(e->lhs);
            if (!a) return std::nullopt;
            return fold_call(e->fn, *a);
        }
    }
    return std::nullopt;
}

Scalar scalar_from(const Folded& f, Mode m) {
    if (m.tag == ModeTag::Exact) {
        if (f.kind != Folded::Kind::Exact) throw NeedsFloatSignal{};
        return Scalar::exact(f.g);
    }
    return Scalar::floating(f.value());
}

// Affine decomposition A*u + B of a subtree that is linear in the
// variable; nullopt when it is not (affine arguments are all that trig
// and exponential calls accept).
struct AffineParts {
    Folded slope;
    Folded offset;
};

std::optional<AffineParts> affine_in_var(const AstPtr& e) {
    if (auto c = fold(e))
        return AffineParts{Folded::of_exact(GaussianRational(0)), *c};
    switch (e->kind) {
        case AstKind::Var:
            return AffineParts{Folded::of_exact(GaussianRational(1)),
                               Folded::of_exact(GaussianRational(0))};
        case AstKind::Neg: {
            auto a = affine_in_var(e->lhs);
            if (!a) return std::nullopt;
            return AffineParts{fold_neg(a->slope), fold_neg(a->offset)};
        }
        case AstKind::Add:
        case AstKind::Sub: {
            auto a = affine_in_var(e->lhs);
            auto b = affine_in_var(e->rhs);
            if (!a || !b) return std::nullopt;
            if (e->kind == AstKind::Add)
                return AffineParts{fold_add(a->slope, b->slope),
                                   fold_add(a->offset, b->offset)};
            return AffineParts{fold_sub(a->slope, b->slope),
                               fold_sub(a->offset, b->offset)};
        }
        case AstKind::Mul: {
            if (auto c = fold(e->lhs)) {
                auto b = affine_in_var(e->rhs);
                if (!b) return std::nullopt;
                return AffineParts{fold_mul(*c, b->slope),
                                   fold_mul(*c, b->offset)};
            }
            if (auto c = fold(e->rhs)) {
                auto a = affine_in_var(e->lhs);
                if (!a) return std::nullopt;
                return AffineParts{fold_mul(a->slope, *c),
                                   fold_mul(a->offset, *c)};
            }
            return std::nullopt;
        }
        case AstKind::Div: {
            auto c = fold(e->rhs);
            if (!c) return std::nullopt;
            auto a = affine_in_var(e->lhs);
            if (!a) return std::nullopt;
            return AffineParts{fold_div(a->slope, *c, e->pos),
                               fold_div(a->offset, *c, e->pos)};
        }
        default:
            return std::nullopt;
    }
}

ExpPoly lower_impl(const AstPtr& e, Mode m);

// base^(A*u + B) with constant base and variable exponent.
ExpPoly lower_const_power(const Folded& base, const AstPtr& exponent, Mode m,
                          std::size_t pos) {
    (void)pos;
    auto aff = affine_in_var(exponent);
    if (!aff)
        throw UnsupportedTermError(
            "variable exponent must be an integer linear function of the "
            "variable");
    auto a = exact_integer(aff->slope);
    auto b = exact_integer(aff->offset);
    if (!a || !b)
        throw UnsupportedTermError(
            "variable exponent must have integer coefficients");
    if (*a == 0) {
        // Degenerate affine form: the exponent is constant after all.
        return ExpPoly::constant(
            m, scalar_from(fold_pow(base, Folded::of_exact(GaussianRational(
                                              Rational(*b)))),
                           m));
    }
    if (base.is_zero())
        throw UnsupportedTermError(
            "zero base with a variable exponent is outside the "
            "representable class");
    Scalar lam = scalar_from(base, m);
    Scalar new_base = lam.pow_int(*a);
    Scalar coeff = lam.pow_int(*b);
    return ExpPoly::term(m, new_base, Polynomial::constant(coeff));
}

// Conjugate of a scalar known to sit on the mode's field.
Scalar conj_scalar(const Scalar& s) {
    if (s.is_exact()) return Scalar::exact(s.exact_value().conj());
    return Scalar::floating(std::conj(s.to_complex()));
}

// cos/sin of (A*u + B): lowered to the conjugate exponential pair
//   cos x = (e^{ix} + e^{-ix})/2,  sin x = (e^{ix} - e^{-ix})/(2i),
// with lambda = e^{iA} exact exactly when A is a half-integer multiple
// of pi (so lambda is a power of i).
ExpPoly lower_trig(CallFn fn, const AffineParts& arg, Mode m,
                   std::size_t pos) {
    (void)pos;
    if (!arg.slope.is_real() || !arg.offset.is_real())
        throw UnsupportedTermError("trig phase must be real");

    auto half_turns = [](const Folded& f) -> std::optional<long long> {
        // Return 2*r when f = r*pi with 2*r an integer; exact zero counts
        // as r = 0.
        if (f.is_zero()) return 0;
        if (f.kind != Folded::Kind::PiMult) return std::nullopt;
        Rational twice = f.pi_m * Rational(2);
        if (!twice.is_integer()) return std::nullopt;
        static const BigInt kMax = (BigInt(1) << 62);
        BigInt n = twice.num();
        if (n > kMax || n < -kMax) return std::nullopt;
        return static_cast<long long>(n);
    };

    Scalar lam = Scalar::zero(m.tag);
    Scalar mu = Scalar::zero(m.tag);
    auto ha = half_turns(arg.slope);
    auto hb = half_turns(arg.offset);
    if (m.tag == ModeTag::Exact) {
        if (!ha || !hb) throw NeedsFloatSignal{};
        lam = Scalar::exact(quarter_turn(*ha));
        mu = Scalar::exact(quarter_turn(*hb));
    } else {
        lam = Scalar::floating(
            std::polar(1.0, arg.slope.value().real()));
        mu = Scalar::floating(
            std::polar(1.0, arg.offset.value().real()));
    }

    Scalar half = Scalar::of_rational(m.tag, Rational(1, 2));
    Scalar coeff = fn == CallFn::Cos
                       ? mu * half
                       : mu * (m.tag == ModeTag::Exact
                                   ? Scalar::exact(GaussianRational(
                                         Rational(0), Rational(-1, 2)))
                                   : Scalar::floating(
                                         std::complex<double>(0.0, -0.5)));
    ExpPoly out = ExpPoly::term(m, lam, Polynomial::constant(coeff));
    return out + ExpPoly::term(m, conj_scalar(lam),
                               Polynomial::constant(conj_scalar(coeff)));
}

// exp/cosh/sinh of (A*u + B): float-only bases e^A, e^{-A}.
ExpPoly lower_exp_family(CallFn fn, const AffineParts& arg, Mode m) {
    if (m.tag == ModeTag::Exact) throw NeedsFloatSignal{};
    std::complex<double> a = arg.slope.value();
    std::complex<double> b = arg.offset.value();
    Scalar lam = Scalar::floating(std::exp(a));
    Scalar coeff = Scalar::floating(std::exp(b));
    if (fn == CallFn::Exp)
        return ExpPoly::term(m, lam, Polynomial::constant(coeff));
    Scalar lam2 = Scalar::floating(std::exp(-a));
    Scalar coeff2 = Scalar::floating(std::exp(-b));
    Scalar half = Scalar::floating(0.5);
    ExpPoly pos_part =
        ExpPoly::term(m, lam, Polynomial::constant(coeff * half));
    ExpPoly neg_part =
        ExpPoly::term(m, lam2, Polynomial::constant(coeff2 * half));
    return fn == CallFn::Cosh ? pos_part + neg_part : pos_part - neg_part;
}

ExpPoly lower_impl(const AstPtr& e, Mode m) {
    if (auto c = fold(e)) return ExpPoly::constant(m, scalar_from(*c, m));
    switch (e->kind) {
        case AstKind::Var:
            return ExpPoly::variable(m);
        case AstKind::Neg:
            return lower_impl(e->lhs, m).scaled(
                Scalar::integer(m.tag, -1));
        case AstKind::Add:
            return lower_impl(e->lhs, m) + lower_impl(e->rhs, m);
        case AstKind::Sub:
            return lower_impl(e->lhs, m) - lower_impl(e->rhs, m);
        case AstKind::Mul:
            return lower_impl(e->lhs, m) * lower_impl(e->rhs, m);
        case AstKind::Div: {
            auto c = fold(e->rhs);
            if (!c)
                throw UnsupportedTermError(
                    "division is only supported by a constant "
                    "denominator");
            if (c->is_zero()) throw DomainError("division by zero");
            Scalar d = scalar_from(*c, m);
            return lower_impl(e->lhs, m).scaled(d.inverse());
        }
        case AstKind::Pow: {
            auto base_c = fold(e->lhs);
            auto exp_c = fold(e->rhs);
            if (base_c && !exp_c)
                return lower_const_power(*base_c, e->rhs, m, e->pos);
            if (!base_c && exp_c) {
                auto k = exact_integer(*exp_c);
                if (!k || *k < 0)
                    throw UnsupportedTermError(
                        "exponent on a variable base must be a "
                        "non-negative integer");
                if (*k > kMaxPolyPower)
                    throw UnsupportedTermError("polynomial exponent too "
                                               "large");
                return lower_impl(e->lhs, m).pow(
                    static_cast<unsigned>(*k));
            }
            throw UnsupportedTermError(
                "powers must have a constant base or a constant integer "
                "exponent");
        }
        case AstKind::Call: {
            auto arg = affine_in_var(e->lhs);
            if (!arg)
                throw UnsupportedTermError(
                    "function arguments must be linear in the variable");
            if (arg->slope.is_zero()) {
                // Constant argument reached through a non-foldable shape.
                return ExpPoly::constant(
                    m, scalar_from(fold_call(e->fn, arg->offset), m));
            }
            if (e->fn == CallFn::Cos || e->fn == CallFn::Sin)
                return lower_trig(e->fn, *arg, m, e->pos);
            return lower_exp_family(e->fn, *arg, m);
        }
        default:
            throw UnsupportedTermError("unsupported expression");
    }
}

}  // namespace

ExpPoly lower(const AstPtr& ast, Mode mode) {
    try {
        return lower_impl(ast, mode);
    } catch (const NeedsFloatSignal&) {
        throw UnsupportedTermError(
            "term requires float mode (irrational constants); rerun with "
            "--mode float");
    }
}

Lowered lower_term(const AstPtr& ast, RequestedMode req, double tolerance) {
    if (req == RequestedMode::Float) {
        return {lower_impl(ast, Mode::floating(tolerance)), ModeTag::Float};
    }
    try {
        return {lower_impl(ast, Mode{ModeTag::Exact, tolerance}),
                ModeTag::Exact};
    } catch (const NeedsFloatSignal&) {
        if (req == RequestedMode::Exact)
            throw UnsupportedTermError(
                "term requires float mode (irrational constants); rerun "
                "with --mode float");
        return {lower_impl(ast, Mode::floating(tolerance)), ModeTag::Float};
    }
}

}  // namespace divsum
