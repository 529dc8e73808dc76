#include "divsum/engine.hpp"

#include <cmath>
#include <cstdlib>

#include "divsum/errors.hpp"

namespace divsum {

bool precedes(long long a, long long b) {
    if (a == 0) return b != 0;
    if (a > 0 && b < 0) return true;
    if (a > 0 && b > 0) return a < b;
    if (a < 0 && b < 0) return std::llabs(b) < std::llabs(a);
    return false;  // a < 0, b >= 0
}

AssignedLimit assigned_limit(const ExpPoly& G) {
    return {G.limit_at_infinity()};
}

AssignedLimit seq_limit(const ExpPoly& F) {
    // F(1) + sum_{u>=2} (F(u) - F(u-1)), everything through the engine.
    ExpPoly g = F - F.shift(-1);
    return {F.evaluate(1) + sum_infinite(g, 2).value};
}

namespace {

SumClass classify(const ExpPoly& f) {
    return f.classify_convergence() == Convergence::SummableClassically
               ? SumClass::ConvergentClassical
               : SumClass::AssignedDivergent;
}

Scalar half_of(const Scalar& s) {
    return s * Scalar::of_rational(s.mode(), Rational(1, 2));
}

// (-1)^u * f(u) as a term: multiply by the base -1 exponential.
ExpPoly alternated(const ExpPoly& f) {
    ModeTag tag = f.mode().tag;
    ExpPoly sign = ExpPoly::term(
        f.mode(), Scalar::integer(tag, -1),
        Polynomial::constant(Scalar::one(tag)));
    return sign * f;
}

}  // namespace

SumValue sum_infinite(const ExpPoly& f, long long a) {
    Primitive prim = antidifference(f);
    Scalar value =
        prim.F.shift(1).limit_at_infinity() - prim.F.evaluate(a);
    return {value, classify(f), std::move(prim)};
}

SumValue sum_finite(const ExpPoly& f, long long a, long long b) {
    Primitive prim = antidifference(f);
    Scalar value = prim.F.evaluate(b + 1) - prim.F.evaluate(a);
    OrderedZRange range{a, b};
    SumClass cls = range.finite_literal() ? SumClass::ConvergentClassical
                                          : classify(f);
    return {value, cls, std::move(prim)};
}

Scalar sum_over_Z(const ExpPoly& f, long long anchor) {
    return sum_finite(f, anchor, anchor - 1).value;
}

SumValue rule_even(const ExpPoly& f) {
    if (f.parity() != Parity::Even)
        throw NotEvenError("rule_even: term is not even");
    return {-half_of(f.evaluate(0)), classify(f), std::nullopt};
}

SumValue rule_quasi_even(const ExpPoly& f, int eps, long long t) {
    if (eps != 1 && eps != -1)
        throw DomainError("rule_quasi_even: eps must be +1 or -1");
    if (t < 0) throw DomainError("rule_quasi_even: t must be >= 0");
    if (t == 0) return rule_even(f);
    if (!f.reflect().equals(f.shift(-eps * t)))
        throw NotQuasiEvenError(
            "rule_quasi_even: f(-x) = f(x - eps*t) does not hold");
    ModeTag tag = f.mode().tag;
    long long d = (1 - eps) / 2;
    Scalar acc = Scalar::zero(tag);
    for (long long u = d; u <= t - 1 + d; ++u)
        acc += f.shift(-eps * u).limit_at_infinity() - f.evaluate(-eps * u);
    Scalar value = acc * Scalar::of_rational(tag, Rational(eps, 2)) -
                   half_of(f.evaluate(0));
    return {value, classify(f), std::nullopt};
}

std::pair<Scalar, Scalar> rule_shift_identity(const ExpPoly& f, int eps,
                                              long long t) {
    if (eps != 1 && eps != -1)
        throw DomainError("rule_shift_identity: eps must be +1 or -1");
    if (t < 0) throw DomainError("rule_shift_identity: t must be >= 0");
    Scalar lhs = sum_infinite(f.shift(-eps * t), 1).value;
    ModeTag tag = f.mode().tag;
    long long d = (1 - eps) / 2;
    Scalar corr = Scalar::zero(tag);
    for (long long u = d; u <= t - 1 + d; ++u)
        corr += f.shift(-eps * u).limit_at_infinity() - f.evaluate(-eps * u);
    Scalar rhs = sum_infinite(f, 1).value -
                 Scalar::integer(tag, eps) * corr;
    return {lhs, rhs};
}

std::pair<Scalar, Scalar> rule_split(const ExpPoly& f) {
    Scalar a = sum_infinite(f, 1).value;
    Scalar b = sum_infinite(-alternated(f), 1).value;  // (-1)^(u-1) f(u)
    Scalar lim = (f - alternated(f)).limit_at_infinity();
    Scalar even_part = half_of(a - b);
    Scalar odd_part = half_of(a + b) - half_of(lim);
    return {even_part, odd_part};
}

Scalar rule_group(const ExpPoly& f) {
    ExpPoly grouped =
        f.substitute_affine(2, -1) + f.substitute_affine(2, 0);
    Scalar lim = (f - alternated(f)).limit_at_infinity();
    return sum_infinite(grouped, 1).value + half_of(lim);
}

Rational arith_series(const Rational& a1, const Rational& d) {
    return (Rational(5) * d - Rational(6) * a1) / Rational(12);
}

Rational alt_arith_series(const Rational& a1, const Rational& d) {
    return (Rational(2) * a1 - d) / Rational(4);
}

Scalar geom_series(const Scalar& g) {
    if (g.is_one()) throw PoleError("geometric series has a pole at ratio 1");
    ModeTag tag = g.mode();
    if (g.is_zero()) return Scalar::one(tag);  // 1 + 0 + 0 + ...
    if (tag == ModeTag::Float &&
        std::abs(g.to_complex() - std::complex<double>(1.0, 0.0)) < kNearOneTol)
        throw PoleError("geometric ratio within 1e-9 of 1");
    return (Scalar::one(tag) - g).inverse();
}

Rational zeta_neg(unsigned k) {
    return -bernoulli_number(k + 1) / Rational(k + 1);
}

Rational eta_neg(unsigned k) {
    Rational two_pow = Rational(2).pow(static_cast<long long>(k) + 1);
    return (two_pow - Rational(1)) * bernoulli_number(k + 1) / Rational(k + 1);
}

Angle Angle::pi_times(const Rational& m) {
    constexpr double kPi = 3.14159265358979323846;
    return Angle{m, m.to_double() * kPi};
}

SumValue trig_series(const Angle& theta, TrigVariant variant, unsigned k,
                     double tol) {
    if (k < 1) throw DomainError("trig_series: k must be >= 1");

    // The base e^(i*theta) is exact exactly when theta is a half-integer
    // multiple of pi: e^(i*pi*m/2) = i^m.
    bool exact = false;
    Scalar lambda = Scalar::floating(0.0);
    if (theta.pi_multiple) {
        Rational doubled = *theta.pi_multiple * Rational(2);
        if (doubled.is_integer()) {
            exact = true;
            long long m = doubled.num().convert_to<long long>();
            lambda = Scalar::exact(GaussianRational::i().pow(m));
        }
    }
    if (!exact)
        lambda = Scalar::floating(
            std::complex<double>(std::cos(theta.radians), std::sin(theta.radians)));

    Mode mode = exact ? Mode::exact() : Mode::floating();
    ModeTag tag = mode.tag;
    auto near_one = [&](const Scalar& s) {
        if (s.is_one()) return true;
        return !s.is_exact() &&
               std::abs(s.to_complex() - std::complex<double>(1.0, 0.0)) <
                   kNearOneTol;
    };

    ExpPoly f(mode);
    Scalar conj = exact ? Scalar::exact(lambda.exact_value().conj())
                        : Scalar::floating(std::conj(lambda.to_complex()));
    Scalar half = Scalar::of_rational(tag, Rational(1, 2));
    switch (variant) {
        case TrigVariant::Cos: {
            if (near_one(lambda))
                throw PoleError("cos series has a pole at theta = 2*pi*m");
            f.add_term(lambda, Polynomial::constant(half));
            f.add_term(conj, Polynomial::constant(half));
            break;
        }
        case TrigVariant::AltCos: {
            Scalar neg_l = -lambda, neg_c = -conj;
            if (near_one(neg_l))
                throw PoleError(
                    "alternating cos series has a pole at theta = (2m+1)*pi");
            f.add_term(neg_l, Polynomial::constant(-half));
            f.add_term(neg_c, Polynomial::constant(-half));
            break;
        }
        case TrigVariant::SinFamily: {
            Scalar neg_l = -lambda, neg_c = -conj;
            if (near_one(neg_l))
                throw PoleError(
                    "alternating sin series has a pole at theta = (2m+1)*pi");
            // (-1)^(u-1) u^(2k-1) sin(u*theta) =
            //   -((-L)^u - (-conj L)^u) * u^(2k-1) / (2i)
            std::vector<Scalar> mono(2 * k, Scalar::zero(tag));
            Scalar inv_2i =
                tag == ModeTag::Exact
                    ? Scalar::exact(GaussianRational(Rational(0), Rational(-1, 2)))
                    : Scalar::floating(std::complex<double>(0.0, -0.5));
            mono[2 * k - 1] = -inv_2i;
            f.add_term(neg_l, Polynomial(mono));
            mono[2 * k - 1] = inv_2i;
            f.add_term(neg_c, Polynomial(mono));
            break;
        }
    }

    SumValue s = sum_infinite(f, 1);
    std::complex<double> z = s.value.to_complex();
    if (std::abs(z.imag()) > tol * std::max(1.0, std::abs(z)))
        throw Error("trig_series: imaginary residue exceeds tolerance");
    if (tag == ModeTag::Float) s.value = Scalar::floating(z.real());
    return s;
}

bool check_extended_regularity(const ExpPoly& F) {
    ExpPoly f = F.shift(1) - F;
    Scalar lhs = F.shift(1).limit_at_infinity() - F.limit_at_infinity();
    Scalar rhs = f.limit_at_infinity();
    if (F.mode().tag == ModeTag::Exact) return lhs == rhs;
    return lhs.close_to(rhs, std::max(F.mode().tolerance, 1e-12));
}

std::variant<Rational, PoleReport> factorial_ext(long long a) {
    if (a >= 0) {
        BigInt acc = 1;
        for (long long j = 2; j <= a; ++j) acc *= j;
        return Rational(acc);
    }
    long long n = -a;
    BigInt fact = 1;
    for (long long j = 2; j <= n - 1; ++j) fact *= j;
    Rational residue = Rational((n - 1) % 2 == 0 ? 1 : -1) / Rational(fact);
    return PoleReport{1, residue};
}

}  // namespace divsum
