#ifndef DIVSUM_POLYNOMIAL_HPP
#define DIVSUM_POLYNOMIAL_HPP

/**
 * @brief Dense univariate polynomials with Scalar coefficients.
 *
 * coeffs[k] is the coefficient of x^k.  Canonical form: the zero polynomial
 * has an empty coefficient vector, otherwise the last coefficient is
 * nonzero.  operator[] reads as zero beyond the stored degree.  All
 * coefficients of one polynomial share a mode; binary operations inherit
 * the usual Scalar mode checks.
 */

#include <cstddef>
#include <vector>

#include "divsum/scalar.hpp"

namespace divsum {

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    static Polynomial constant(Scalar s) {
        return Polynomial(std::vector<Scalar>{std::move(s)});
    }
    // The monomial x, in the given mode.
    static Polynomial x(ModeTag m) {
        return Polynomial({Scalar::zero(m), Scalar::one(m)});
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1 for convenience.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }

    Scalar operator[](std::size_t k) const {
        return k < c_.size() ? c_[k] : Scalar::zero(mode_or(ModeTag::Exact));
    }
    const std::vector<Scalar>& coeffs() const { return c_; }

    // Mode of the coefficients; `fallback` answers for the zero polynomial.
    ModeTag mode_or(ModeTag fallback) const {
        return c_.empty() ? fallback : c_.front().mode();
    }

    friend Polynomial operator-(const Polynomial& p) {
        std::vector<Scalar> r;
        r.reserve(p.c_.size());
        for (const auto& a : p.c_) r.push_back(-a);
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        const auto& longer = a.c_.size() >= b.c_.size() ? a : b;
        const auto& shorter = a.c_.size() >= b.c_.size() ? b : a;
        std::vector<Scalar> r = longer.c_;
        for (std::size_t k = 0; k < shorter.c_.size(); ++k) r[k] += shorter.c_[k];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        ModeTag m = a.c_.front().mode();
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar::zero(m));
        for (std::size_t ii = 0; ii < a.c_.size(); ++ii)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[ii + j] += a.c_[ii] * b.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial scaled(const Scalar& s) const {
        if (s.is_zero()) return Polynomial();
        std::vector<Scalar> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(a * s);
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) {
        return !(a == b);
    }

    Scalar evaluate(const Scalar& v) const {
        if (c_.empty()) return Scalar::zero(v.mode());
        Scalar acc = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) acc = acc * v + c_[k];
        return acc;
    }
    Scalar evaluate_at(long long n) const {
        return evaluate(Scalar::integer(mode_or(ModeTag::Exact), n));
    }

    // P(m*x + t), exact in the coefficient mode (m, t small integers).
    Polynomial compose_affine(long long m, long long t) const {
        if (c_.empty()) return Polynomial();
        ModeTag md = c_.front().mode();
        Polynomial lin({Scalar::integer(md, t), Scalar::integer(md, m)});
        Polynomial power = Polynomial::constant(Scalar::one(md));
        Polynomial acc;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k > 0) power = power * lin;
            acc = acc + power.scaled(c_[k]);
        }
        return acc;
    }

    Polynomial shifted(long long t) const { return compose_affine(1, t); }
    Polynomial reflected() const { return compose_affine(-1, 0); }

    // Drop the coefficient of x^0.
    Polynomial without_constant_term() const {
        if (c_.empty()) return *this;
        std::vector<Scalar> r = c_;
        r[0] = Scalar::zero(r[0].mode());
        return Polynomial(std::move(r));
    }

    // Integral over [-1, 0]: sum_k c_k * (-1)^k / (k+1).
    Scalar integral_m1_0() const {
        ModeTag m = mode_or(ModeTag::Exact);
        Scalar acc = Scalar::zero(m);
        for (std::size_t k = 0; k < c_.size(); ++k) {
            Rational w(k % 2 == 0 ? 1 : -1, static_cast<long long>(k) + 1);
            acc += c_[k] * Scalar::of_rational(m, w);
        }
        return acc;
    }

    // Coefficient-wise conversion to the requested mode (exact -> float
    // only; float polynomials cannot be made exact).
    Polynomial to_mode(ModeTag m) const {
        if (mode_or(m) == m) return *this;
        if (m == ModeTag::Exact)
            throw ModeError("cannot convert a float polynomial to exact mode");
        std::vector<Scalar> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(a.to_float());
        return Polynomial(std::move(r));
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

}  // namespace divsum

#endif  // DIVSUM_POLYNOMIAL_HPP
