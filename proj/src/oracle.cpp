#include "divsum/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <vector>

#include "divsum/errors.hpp"

namespace divsum {

namespace {

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

// Incremental ratio-2 Richardson (Romberg) table.  Samples arrive in
// order s_j = S(N0 * 2^j) and the model is S(N) = L + sum c_m / N^m; each
// column cancels one more power.  diag() is the best current extrapolant.
class Romberg {
   public:
    void push(std::complex<double> s) {
        std::vector<std::complex<double>> cur(prev_.size() + 1);
        cur[0] = s;
        for (std::size_t m = 1; m < cur.size(); ++m) {
            double denom = std::ldexp(1.0, static_cast<int>(m)) - 1.0;
            cur[m] = cur[m - 1] + (cur[m - 1] - prev_[m - 1]) / denom;
        }
        prev_diag_ = rows_ > 0 ? diag_ : s;
        diag_ = cur.back();
        prev_ = std::move(cur);
        ++rows_;
    }

    int rows() const { return rows_; }
    std::complex<double> diag() const { return diag_; }
    double diag_step() const { return std::abs(diag_ - prev_diag_); }

   private:
    std::vector<std::complex<double>> prev_;
    std::complex<double> diag_{0.0, 0.0};
    std::complex<double> prev_diag_{0.0, 0.0};
    int rows_ = 0;
};

struct PartialSumResult {
    double value;
    long long iterations;
};

PartialSumResult partial_sums_impl(const std::function<double(long long)>& f,
                                   long long a, double tol) {
    constexpr int kWindow = 16;
    constexpr long long kFirstSnap = 64;
    constexpr long long kBudget = 1LL << 21;

    double sum = 0.0;
    std::deque<double> window;
    double ratio_est = 1.0;
    double prev_abs = -1.0;
    double peak_abs = 0.0;
    Romberg table;
    long long next_snap = kFirstSnap;
    long long count = 0;

    for (long long u = a;; ++u) {
        double t = f(u);
        if (!std::isfinite(t))
            throw NonConvergentError(
                "partial sums: term is not finite at u=" + std::to_string(u));
        sum += t;
        ++count;
        double at = std::fabs(t);
        peak_abs = std::max(peak_abs, at);
        if (prev_abs > 0.0 && at > 0.0) {
            double r = std::min(at / prev_abs, 4.0);
            ratio_est = 0.7 * ratio_est + 0.3 * r;
        }
        if (at > 0.0) prev_abs = at;
        window.push_back(at);
        if (window.size() > kWindow) window.pop_front();

        if (count >= kWindow && ratio_est < 0.95) {
            // Geometric tail bound: remaining mass <= |t| r/(1-r).
            double bound = at * ratio_est / (1.0 - ratio_est);
            double wmax = *std::max_element(window.begin(), window.end());
            if (bound < 0.25 * tol && wmax < tol)
                return {sum, count};
        }

        if (count == next_snap) {
            table.push({sum, 0.0});
            next_snap *= 2;
            double wmax = *std::max_element(window.begin(), window.end());
            bool decayed = wmax < 1e-3 * std::max(1.0, peak_abs);
            if (decayed && table.rows() >= 3) {
                double scale =
                    std::max(1.0, std::abs(table.diag()));
                if (table.diag_step() < 0.5 * tol * scale)
                    return {table.diag().real(), count};
            }
        }

        if (count >= kBudget)
            throw NonConvergentError(
                "partial sums failed the Cauchy/extrapolation test within "
                "the evaluation budget");
    }
}

}  // namespace

void validate_pair(const PrimitivePair& pair, double tol) {
    int checked = 0;
    for (long long x = -50; x <= 50; ++x) {
        std::complex<double> f1 = eval_ast(pair.F, static_cast<double>(x + 1));
        std::complex<double> f0 = eval_ast(pair.F, static_cast<double>(x));
        std::complex<double> fv = eval_ast(pair.f, static_cast<double>(x));
        if (!std::isfinite(f1.real()) || !std::isfinite(f1.imag()) ||
            !std::isfinite(f0.real()) || !std::isfinite(f0.imag()) ||
            !std::isfinite(fv.real()) || !std::isfinite(fv.imag()))
            continue;  // over/underflow point; not checkable numerically
        double scale = std::max(
            {1.0, std::abs(f1), std::abs(f0), std::abs(fv)});
        if (std::abs(f1 - f0 - fv) > tol * scale)
            throw DeltaMismatchError(
                "primitive mismatch: F(x+1)-F(x) != f(x) at x=" +
                std::to_string(x));
        ++checked;
    }
    if (checked < 10)
        throw DeltaMismatchError(
            "primitive could not be validated: too few finite sample "
            "points");
}

double partial_sum_oracle(const std::function<double(long long)>& f,
                          long long a, double tol) {
    return partial_sums_impl(f, a, tol).value;
}

namespace {

// Eulerian number triangle row k (k >= 1), E(k, 0..k-1), as doubles.
std::vector<double> eulerian_row(unsigned k) {
    std::vector<double> row{1.0};  // k = 1
    for (unsigned n = 2; n <= k; ++n) {
        std::vector<double> next(n, 0.0);
        for (unsigned j = 0; j < n; ++j) {
            double left = j < row.size() ? row[j] : 0.0;
            double up = (j >= 1 && j - 1 < row.size()) ? row[j - 1] : 0.0;
            next[j] = (j + 1) * left + (n - j) * up;
        }
        row = std::move(next);
    }
    return row;
}

// sum_{u=0}^{inf} u^k y^u in closed form (0^0 = 1), |y| < 1.
std::complex<double> power_kernel(unsigned k, std::complex<double> y) {
    std::complex<double> one(1.0, 0.0);
    if (k == 0) return one / (one - y);
    std::vector<double> row = eulerian_row(k);
    std::complex<double> num(0.0, 0.0);
    for (std::size_t j = row.size(); j-- > 0;)
        num = num * y + std::complex<double>(row[j], 0.0);
    num *= y;
    return num / complex_int_pow(one - y, static_cast<long long>(k) + 1);
}

// sum_{u=a}^{inf} u^k y^u: closed-form whole-line kernel adjusted by the
// finitely many terms between 0 and a.
std::complex<double> power_kernel_from(unsigned k, std::complex<double> y,
                                       long long a) {
    std::complex<double> v = power_kernel(k, y);
    auto term = [&](long long u) {
        double uk = k == 0 ? 1.0 : std::pow(static_cast<double>(u),
                                            static_cast<double>(k));
        return uk * complex_int_pow(y, u);
    };
    if (a > 0)
        for (long long u = 0; u < a; ++u) v -= term(u);
    else
        for (long long u = a; u < 0; ++u) v += term(u);
    return v;
}

}  // namespace

namespace {

std::complex<double> abel_impl(const ExpPoly& f, long long a,
                               long long* iterations) {
    ExpPoly g = f.to_float();
    for (const auto& [base, poly] : g.terms()) {
        std::complex<double> lam = base.to_complex();
        if (std::abs(lam) > 1.0 + 1e-12)
            throw AbelInapplicableError(
                "a base lies outside the closed unit disk");
        if (std::abs(lam - std::complex<double>(1.0, 0.0)) < 1e-9)
            throw AbelInapplicableError(
                "base-1 (polynomial) part has no Abel limit");
    }
    if (iterations) *iterations = 0;
    if (g.is_zero()) return {0.0, 0.0};

    Romberg table;
    for (int j = 10; j <= 30; ++j) {
        double x = 1.0 - std::ldexp(1.0, -j);
        std::complex<double> gx(0.0, 0.0);
        for (const auto& [base, poly] : g.terms()) {
            std::complex<double> y = base.to_complex() * x;
            const auto& coeffs = poly.coeffs();
            for (std::size_t k = 0; k < coeffs.size(); ++k) {
                std::complex<double> c = coeffs[k].to_complex();
                if (c.real() == 0.0 && c.imag() == 0.0) continue;
                gx += c * power_kernel_from(static_cast<unsigned>(k), y, a);
            }
        }
        table.push(gx);
        if (iterations) *iterations = table.rows();
        if (table.rows() >= 4 &&
            table.diag_step() <
                1e-9 * std::max(1.0, std::abs(table.diag())))
            break;
    }
    return table.diag();
}

}  // namespace

double abel_oracle(const ExpPoly& f, long long a) {
    return abel_impl(f, a, nullptr).real();
}

double telescoping_sum(const PrimitivePair& pair, long long a,
                       std::optional<long long> b, double tol) {
    validate_pair(pair, tol);
    std::complex<double> fa = eval_ast(pair.F, static_cast<double>(a));
    if (b) {
        std::complex<double> fb1 =
            eval_ast(pair.F, static_cast<double>(*b) + 1.0);
        return (fb1 - fa).real();
    }

    // Numeric limit of F(n) along n = 2^j with an adjacent offset sample
    // to defeat parity aliasing; a sliding Cauchy window of 16 samples
    // must agree within tol/4.
    constexpr int kWindow = 16;
    std::deque<double> window;
    for (int j = 4; j <= 45; ++j) {
        double n = std::ldexp(1.0, j);
        for (double off : {0.0, 1.0}) {
            std::complex<double> s = eval_ast(pair.F, n + off);
            if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
                throw LimitUndetectableError(
                    "primitive is unbounded along the sample sequence");
            if (std::abs(s.imag()) > 1e-6 * std::max(1.0, std::abs(s)))
                throw LimitUndetectableError(
                    "primitive has a persistent imaginary part");
            window.push_back(s.real());
        }
        if (window.size() > kWindow) {
            window.pop_front();
            window.pop_front();
        }
        if (window.size() == kWindow) {
            auto [lo, hi] = std::minmax_element(window.begin(), window.end());
            double mid = 0.5 * (*lo + *hi);
            if (*hi - *lo < 0.25 * tol * std::max(1.0, std::fabs(mid)))
                return window.back() - fa.real();
        }
    }
    throw LimitUndetectableError(
        "primitive has no detectable numeric limit (oscillating or "
        "unbounded)");
}

const char* oracle_method_name(OracleReport::Method m) {
    switch (m) {
        case OracleReport::Method::None:
            return "none";
        case OracleReport::Method::PartialSums:
            return "partial_sums";
        case OracleReport::Method::Abel:
            return "abel";
        case OracleReport::Method::Telescoping:
            return "telescoping";
    }
    return "none";
}

OracleReport cross_check(const ExpPoly& f, long long a,
                         const Scalar& engine_value) {
    OracleReport rep;
    std::complex<double> val = engine_value.to_complex();

    if (f.is_zero() ||
        f.classify_convergence() == Convergence::SummableClassically) {
        ExpPoly ff = f.to_float();
        auto real_part = [&](long long u) {
            return ff.evaluate(u).to_complex().real();
        };
        auto imag_part = [&](long long u) {
            return ff.evaluate(u).to_complex().imag();
        };
        const double tol = 1e-12;
        PartialSumResult re = partial_sums_impl(real_part, a, tol);
        PartialSumResult im = partial_sums_impl(imag_part, a, tol);
        std::complex<double> est(re.value, im.value);
        rep.method = OracleReport::Method::PartialSums;
        rep.estimate = est.real();
        rep.discrepancy = std::abs(est - val);
        rep.iterations = re.iterations + im.iterations;
        rep.ok = rep.discrepancy <=
                 tol * std::max({1.0, std::abs(est), std::abs(val)});
        return rep;
    }

    try {
        long long iters = 0;
        std::complex<double> est = abel_impl(f, a, &iters);
        const double tol = 1e-6;
        rep.method = OracleReport::Method::Abel;
        rep.estimate = est.real();
        rep.discrepancy = std::abs(est - val);
        rep.iterations = iters;
        rep.ok = rep.discrepancy <=
                 tol * std::max({1.0, std::abs(est), std::abs(val)});
        return rep;
    } catch (const AbelInapplicableError&) {
        rep.method = OracleReport::Method::None;
        rep.ok = true;
        return rep;
    }
}

}  // namespace divsum
