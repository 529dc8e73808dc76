#ifndef DIVSUM_GAUSSIAN_HPP
#define DIVSUM_GAUSSIAN_HPP

/**
 * @brief Gaussian rationals: numbers re + im*i with exact rational parts.
 *
 * This is the scalar field of the exact mode.  It is closed under the four
 * arithmetic operations and under integer powers, which is all the engine
 * needs: bases like -1, i, 2, 1/2 and their products stay in the field.
 */

#include <complex>
#include <string>

#include "divsum/rational.hpp"

namespace divsum {

class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(Rational real) : re_(std::move(real)) {}  // NOLINT
    GaussianRational(long long real) : re_(real) {}            // NOLINT
    GaussianRational(Rational real, Rational imag)
        : re_(std::move(real)), im_(std::move(imag)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }

    // |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator-(const GaussianRational& a) {
        return {-a.re_, -a.im_};
    }
    friend GaussianRational operator+(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a,
                                      const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a,
                                      const GaussianRational& b) {
        if (b.is_zero()) throw DomainError("gaussian rational division by zero");
        Rational n = b.norm2();
        GaussianRational num = a * b.conj();
        return {num.re_ / n, num.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    GaussianRational inverse() const { return GaussianRational(1) / *this; }

    GaussianRational pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        GaussianRational base = *this, acc(1);
        for (unsigned long long k = static_cast<unsigned long long>(e); k != 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    std::complex<double> to_complex() const {
        return {re_.to_double(), im_.to_double()};
    }

    // Canonical rendering: "p/q", "p/q*i", "i", "-i", "p/q+r/s*i", "p/q-r/s*i".
    // The output re-parses in the expression grammar.
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string imag;
        if (im_ == Rational(1)) {
            imag = "i";
        } else if (im_ == Rational(-1)) {
            imag = "-i";
        } else {
            imag = im_.str() + "*i";
        }
        if (re_.is_zero()) return imag;
        if (im_.sign() > 0) return re_.str() + "+" + imag;
        return re_.str() + imag;  // imag already carries the minus sign
    }

    // Strict total order for use as an ordered map key (lexicographic on
    // (re, im)); not a numeric order on the complex plane.
    friend bool key_less(const GaussianRational& a, const GaussianRational& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

  private:
    Rational re_;
    Rational im_;
};

}  // namespace divsum

#endif  // DIVSUM_GAUSSIAN_HPP
