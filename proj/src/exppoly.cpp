#include "divsum/exppoly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "divsum/errors.hpp"

namespace divsum {

void ExpPoly::check_scalar_mode(const Scalar& s) const {
    if (s.mode() != mode_.tag)
        throw ModeError("scalar mode does not match the term's mode");
}

void ExpPoly::add_term(const Scalar& base, const Polynomial& poly) {
    if (poly.is_zero()) return;
    if (base.is_zero()) throw DomainError("exponential base must be nonzero");
    check_scalar_mode(base);
    check_scalar_mode(poly.coeffs().front());
    auto it = terms_.find(base);
    if (it == terms_.end()) {
        terms_.emplace(base, poly);
        return;
    }
    Polynomial merged = it->second + poly;
    if (merged.is_zero())
        terms_.erase(it);
    else
        it->second = std::move(merged);
}

ExpPoly ExpPoly::constant(Mode m, const Scalar& c) {
    ExpPoly f(m);
    f.add_term(Scalar::one(m.tag), Polynomial::constant(c));
    return f;
}

ExpPoly ExpPoly::variable(Mode m) {
    ExpPoly f(m);
    f.add_term(Scalar::one(m.tag), Polynomial::x(m.tag));
    return f;
}

ExpPoly ExpPoly::term(Mode m, const Scalar& base, const Polynomial& poly) {
    ExpPoly f(m);
    f.add_term(base, poly);
    return f;
}

Polynomial ExpPoly::poly_for(const Scalar& base) const {
    auto it = terms_.find(base);
    return it == terms_.end() ? Polynomial() : it->second;
}

ExpPoly ExpPoly::operator-() const {
    ExpPoly r(mode_);
    for (const auto& [b, p] : terms_) r.add_term(b, -p);
    return r;
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
    if (a.mode_.tag != b.mode_.tag)
        throw ModeError("adding terms of different modes");
    ExpPoly r = a;
    for (const auto& [base, p] : b.terms_) r.add_term(base, p);
    return r;
}

ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) { return a + (-b); }

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    if (a.mode_.tag != b.mode_.tag)
        throw ModeError("multiplying terms of different modes");
    ExpPoly r(a.mode_);
    for (const auto& [b1, p1] : a.terms_)
        for (const auto& [b2, p2] : b.terms_) r.add_term(b1 * b2, p1 * p2);
    return r;
}

ExpPoly ExpPoly::scaled(const Scalar& s) const {
    check_scalar_mode(s);
    ExpPoly r(mode_);
    for (const auto& [b, p] : terms_) r.add_term(b, p.scaled(s));
    return r;
}

ExpPoly ExpPoly::pow(unsigned k) const {
    ExpPoly acc = ExpPoly::constant(mode_, Scalar::one(mode_.tag));
    for (unsigned j = 0; j < k; ++j) acc = acc * (*this);
    return acc;
}

ExpPoly ExpPoly::shift(long long t) const {
    ExpPoly r(mode_);
    for (const auto& [b, p] : terms_)
        r.add_term(b, p.shifted(t).scaled(b.pow_int(t)));
    return r;
}

ExpPoly ExpPoly::reflect() const {
    ExpPoly r(mode_);
    for (const auto& [b, p] : terms_) r.add_term(b.inverse(), p.reflected());
    return r;
}

ExpPoly ExpPoly::substitute_affine(long long m, long long c) const {
    if (m < 1) throw DomainError("substitute_affine requires stride m >= 1");
    ExpPoly r(mode_);
    for (const auto& [b, p] : terms_)
        r.add_term(b.pow_int(m), p.compose_affine(m, c).scaled(b.pow_int(c)));
    return r;
}

Scalar ExpPoly::evaluate(long long n) const {
    Scalar acc = Scalar::zero(mode_.tag);
    for (const auto& [b, p] : terms_) acc += b.pow_int(n) * p.evaluate_at(n);
    return acc;
}

bool ExpPoly::equals(const ExpPoly& o) const {
    if (mode_.tag != o.mode_.tag)
        throw ModeError("comparing terms of different modes");
    if (mode_.tag == ModeTag::Exact) return terms_ == o.terms_;

    // Float mode: match bases within tolerance, compare coefficients with
    // a mixed absolute/relative bound, and require leftovers to vanish.
    double tol = std::max(mode_.tolerance, o.mode_.tolerance);
    auto poly_close = [&](const Polynomial& p, const Polynomial& q) {
        std::size_t n = std::max(p.size(), q.size());
        for (std::size_t k = 0; k < n; ++k)
            if (!p[k].close_to(q[k], tol)) return false;
        return true;
    };
    auto negligible = [&](const Polynomial& p) {
        return poly_close(p, Polynomial());
    };

    std::vector<std::pair<Scalar, Polynomial>> rest(o.terms_.begin(),
                                                    o.terms_.end());
    std::vector<bool> used(rest.size(), false);
    for (const auto& [base, p] : terms_) {
        std::size_t best = rest.size();
        double best_d = tol;
        for (std::size_t j = 0; j < rest.size(); ++j) {
            if (used[j]) continue;
            double d = std::abs(base.to_complex() - rest[j].first.to_complex());
            if (d <= best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == rest.size()) {
            if (!negligible(p)) return false;
            continue;
        }
        used[best] = true;
        if (!poly_close(p, rest[best].second)) return false;
    }
    for (std::size_t j = 0; j < rest.size(); ++j)
        if (!used[j] && !negligible(rest[j].second)) return false;
    return true;
}

Scalar ExpPoly::limit_at_infinity() const {
    Polynomial p = poly_for(Scalar::one(mode_.tag));
    if (p.is_zero()) return Scalar::zero(mode_.tag);
    return p.integral_m1_0();
}

Parity ExpPoly::parity() const {
    ExpPoly r = reflect();
    Scalar lim_f = limit_at_infinity();
    Scalar lim_r = r.limit_at_infinity();
    auto limits_match = [&](const Scalar& a, const Scalar& b) {
        if (mode_.tag == ModeTag::Exact) return a == b;
        return a.close_to(b, std::max(mode_.tolerance, 1e-12));
    };
    if (r.equals(*this) && limits_match(lim_r, lim_f)) return Parity::Even;
    if (r.equals(-*this) && limits_match(lim_r, -lim_f)) return Parity::Odd;
    return Parity::Neither;
}

Convergence ExpPoly::classify_convergence() const {
    for (const auto& [b, p] : terms_) {
        (void)p;
        bool inside;
        if (b.is_exact())
            inside = b.exact_value().norm2() < Rational(1);
        else
            inside = b.abs() < 1.0 - kNearOneTol;
        if (!inside) return Convergence::Divergent;
    }
    return Convergence::SummableClassically;
}

ExpPoly ExpPoly::to_float() const {
    if (mode_.tag == ModeTag::Float) return *this;
    ExpPoly r(Mode::floating(mode_.tolerance));
    for (const auto& [b, p] : terms_)
        r.add_term(b.to_float(), p.to_mode(ModeTag::Float));
    return r;
}

namespace {

bool is_exact_one_coeff(const Scalar& c, int sign) {
    return c.is_exact() && c.exact_value() == GaussianRational(sign);
}

std::string monomial_str(const Scalar& c, std::size_t k, char var) {
    std::string v(1, var);
    std::string pow = k == 0 ? "" : (k == 1 ? v : v + "^" + std::to_string(k));
    if (k == 0) return c.is_real() ? c.str() : "(" + c.str() + ")";
    if (is_exact_one_coeff(c, 1)) return pow;
    if (is_exact_one_coeff(c, -1)) return "-" + pow;
    if (!c.is_real()) return "(" + c.str() + ")*" + pow;
    return c.str() + "*" + pow;
}

std::string poly_str(const Polynomial& p, char var) {
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k].is_zero()) continue;
        std::string piece = monomial_str(p[k], k, var);
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string ExpPoly::str(char var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [b, p] : terms_) {
        std::string piece;
        if (b.is_one()) {
            piece = poly_str(p, var);
            if (p.size() > 1 && !out.empty()) piece = "(" + piece + ")";
        } else {
            std::string base = "(" + b.str() + ")^" + std::string(1, var);
            bool poly_is_one = p.size() == 1 && is_exact_one_coeff(p[0], 1);
            if (b.is_exact() && poly_is_one)
                piece = base;
            else
                piece = base + "*(" + poly_str(p, var) + ")";
        }
        if (out.empty()) {
            out = piece;
        } else if (piece.front() == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace divsum
