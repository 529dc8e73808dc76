#ifndef DIVSUM_SCALAR_HPP
#define DIVSUM_SCALAR_HPP

/**
 * @brief Mode-tagged scalars: exact Gaussian rationals or complex doubles.
 *
 * Every value in a term carries its mode.  Arithmetic between scalars of
 * different modes throws ModeError rather than silently promoting; callers
 * that want promotion say so explicitly via to_float().  Float-mode
 * equality used for canonical-form bookkeeping is bitwise; tolerance-aware
 * comparison is a separate helper (close_to) so that normalization never
 * depends on a tolerance.
 */

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <variant>

#include "divsum/gaussian.hpp"

namespace divsum {

enum class ModeTag { Exact, Float };

// Mode of a term: exact symbolic scalars, or doubles with a comparison
// tolerance used by equality checks, parity tests and result reporting.
struct Mode {
    ModeTag tag = ModeTag::Exact;
    double tolerance = 1e-12;

    static Mode exact() { return {ModeTag::Exact, 1e-12}; }
    static Mode floating(double tol = 1e-12) { return {ModeTag::Float, tol}; }
};

inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

class Scalar {
  public:
    Scalar() : v_(GaussianRational()) {}

    static Scalar exact(GaussianRational g) { return Scalar(std::move(g)); }
    static Scalar exact(Rational r) { return Scalar(GaussianRational(std::move(r))); }
    static Scalar floating(std::complex<double> z) { return Scalar(z); }
    static Scalar floating(double x) { return Scalar(std::complex<double>(x, 0.0)); }

    // The additive/multiplicative units and small integers of a given mode.
    static Scalar zero(ModeTag m) { return integer(m, 0); }
    static Scalar one(ModeTag m) { return integer(m, 1); }
    static Scalar integer(ModeTag m, long long n) {
        if (m == ModeTag::Exact) return exact(GaussianRational(n));
        return floating(static_cast<double>(n));
    }
    static Scalar of_rational(ModeTag m, const Rational& r) {
        if (m == ModeTag::Exact) return exact(r);
        return floating(r.to_double());
    }

    ModeTag mode() const {
        return std::holds_alternative<GaussianRational>(v_) ? ModeTag::Exact
                                                            : ModeTag::Float;
    }
    bool is_exact() const { return mode() == ModeTag::Exact; }

    const GaussianRational& exact_value() const {
        if (!is_exact()) throw ModeError("exact_value() on a float scalar");
        return std::get<GaussianRational>(v_);
    }

    std::complex<double> to_complex() const {
        if (is_exact()) return std::get<GaussianRational>(v_).to_complex();
        return std::get<std::complex<double>>(v_);
    }

    Scalar to_float() const { return floating(to_complex()); }

    bool is_zero() const {
        if (is_exact()) return std::get<GaussianRational>(v_).is_zero();
        auto z = std::get<std::complex<double>>(v_);
        return z.real() == 0.0 && z.imag() == 0.0;
    }
    bool is_one() const {
        if (is_exact()) return std::get<GaussianRational>(v_) == GaussianRational(1);
        auto z = std::get<std::complex<double>>(v_);
        return z.real() == 1.0 && z.imag() == 0.0;
    }
    bool is_real() const {
        if (is_exact()) return std::get<GaussianRational>(v_).is_real();
        return std::get<std::complex<double>>(v_).imag() == 0.0;
    }

    friend Scalar operator-(const Scalar& a) {
        if (a.is_exact()) return exact(-a.exact_value());
        return floating(-a.to_complex());
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "+");
        if (a.is_exact()) return exact(a.exact_value() + b.exact_value());
        return floating(a.to_complex() + b.to_complex());
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "-");
        if (a.is_exact()) return exact(a.exact_value() - b.exact_value());
        return floating(a.to_complex() - b.to_complex());
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "*");
        if (a.is_exact()) return exact(a.exact_value() * b.exact_value());
        return floating(a.to_complex() * b.to_complex());
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        check_modes(a, b, "/");
        if (a.is_exact()) return exact(a.exact_value() / b.exact_value());
        if (b.is_zero()) throw DomainError("float division by zero");
        return floating(a.to_complex() / b.to_complex());
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_exact()) return exact(exact_value().inverse());
        if (is_zero()) throw DomainError("inverse of zero");
        return floating(1.0 / to_complex());
    }

    Scalar pow_int(long long e) const {
        if (is_exact()) return exact(exact_value().pow(e));
        if (e < 0) return inverse().pow_int(-e);
        std::complex<double> base = to_complex(), acc(1.0, 0.0);
        for (unsigned long long k = static_cast<unsigned long long>(e); k != 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return floating(acc);
    }

    double abs() const { return std::abs(to_complex()); }

    // Canonical equality within one mode (exact, or bitwise for floats).
    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.mode() != b.mode()) return false;
        if (a.is_exact()) return a.exact_value() == b.exact_value();
        return a.to_complex() == b.to_complex();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // |a-b| <= tol * max(1, |a|, |b|); works across modes.
    bool close_to(const Scalar& b, double tol) const {
        double scale = std::max(1.0, std::max(abs(), b.abs()));
        return std::abs(to_complex() - b.to_complex()) <= tol * scale;
    }

    std::string str() const {
        if (is_exact()) return exact_value().str();
        auto z = std::get<std::complex<double>>(v_);
        if (z.imag() == 0.0) return format_double(z.real());
        std::string s = format_double(z.real());
        if (z.imag() >= 0.0 || std::isnan(z.imag())) s += "+";
        return s + format_double(z.imag()) + "*i";
    }

    // Strict total order for ordered-map keys; modes must match.
    friend bool key_less(const Scalar& a, const Scalar& b) {
        if (a.mode() != b.mode())
            throw ModeError("ordering scalars of different modes");
        if (a.is_exact()) return key_less(a.exact_value(), b.exact_value());
        auto x = a.to_complex(), y = b.to_complex();
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    }

  private:
    explicit Scalar(GaussianRational g) : v_(std::move(g)) {}
    explicit Scalar(std::complex<double> z) : v_(z) {}

    static void check_modes(const Scalar& a, const Scalar& b, const char* op) {
        if (a.mode() != b.mode())
            throw ModeError(std::string("mixed exact/float operands to '") + op + "'");
    }

    std::variant<GaussianRational, std::complex<double>> v_;
};

struct ScalarKeyLess {
    bool operator()(const Scalar& a, const Scalar& b) const { return key_less(a, b); }
};

}  // namespace divsum

#endif  // DIVSUM_SCALAR_HPP
