#include "divsum/antidiff.hpp"

#include <vector>

#include "divsum/bernoulli.hpp"
#include "divsum/errors.hpp"

namespace divsum {

namespace {

// Primitive of the pure polynomial part sum_k c_k n^k.
Polynomial polynomial_primitive(const Polynomial& p, ModeTag tag) {
    Polynomial acc;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        Polynomial sk = faulhaber_sum_poly(static_cast<unsigned>(k))
                            .to_mode(tag)
                            .shifted(-1);
        acc = acc + sk.scaled(p[k]);
    }
    // Fix the free summation constant: zero constant term.
    return acc.without_constant_term();
}

// Solve b*q(n+1) - q(n) = p(n) for q, deg q = deg p, b != 1.
Polynomial geometric_primitive(const Scalar& b, const Polynomial& p,
                               ModeTag tag) {
    if (tag == ModeTag::Float && !b.is_one() &&
        std::abs(b.to_complex() - std::complex<double>(1.0, 0.0)) < kNearOneTol)
        throw PoleError("float base within 1e-9 of 1: difference solve is "
                        "ill-conditioned");
    Scalar bm1 = b - Scalar::one(tag);
    std::size_t d = p.size();  // number of coefficients
    std::vector<Scalar> q(d, Scalar::zero(tag));
    for (std::size_t i = d; i-- > 0;) {
        // coefficient of n^i in b*q(n+1): b * sum_{j>=i} C(j,i) q_j
        Scalar carry = Scalar::zero(tag);
        for (std::size_t j = i + 1; j < d; ++j)
            carry += Scalar::of_rational(tag, Rational(binomial(
                         static_cast<unsigned>(j), static_cast<unsigned>(i)))) *
                     q[j];
        q[i] = (p[i] - b * carry) / bm1;
    }
    return Polynomial(std::move(q));
}

void spot_check(const ExpPoly& F, const ExpPoly& f) {
    double tol = std::max(f.mode().tolerance, 1e-9);
    for (long long n = -10; n <= 10; ++n) {
        Scalar lhs = F.evaluate(n + 1) - F.evaluate(n);
        Scalar rhs = f.evaluate(n);
        bool ok = f.mode().tag == ModeTag::Exact ? lhs == rhs
                                                 : lhs.close_to(rhs, tol);
        if (!ok)
            throw Error("internal: antidifference failed its construction "
                        "spot check at n = " +
                        std::to_string(n));
    }
}

}  // namespace

Primitive antidifference(const ExpPoly& f) {
    ModeTag tag = f.mode().tag;
    ExpPoly F(f.mode());
    for (const auto& [base, poly] : f.terms()) {
        if (base.is_one())
            F.add_term(base, polynomial_primitive(poly, tag));
        else
            F.add_term(base, geometric_primitive(base, poly, tag));
    }
    Primitive result{std::move(F), f};
    spot_check(result.F, result.source);
    return result;
}

bool verify_delta(const ExpPoly& F, const ExpPoly& f) {
    return (F.shift(1) - F).equals(f);
}

}  // namespace divsum
