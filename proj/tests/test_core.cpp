#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <atomic>
#include <complex>
#include <thread>
#include <vector>

#include "divsum/bernoulli.hpp"
#include "divsum/gaussian.hpp"
#include "divsum/polynomial.hpp"
#include "divsum/rational.hpp"
#include "divsum/scalar.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace divsum;
using testutil::q;

TEST_CASE("rational arithmetic normalizes and compares") {
    Rational a(BigInt(6), BigInt(4));
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    Rational b(BigInt(-6), BigInt(-4));
    CHECK(a == b);
    Rational c(BigInt(1), BigInt(-3));
    CHECK(c.num() == -1);
    CHECK(c.den() == 3);
    CHECK(a + c == Rational(BigInt(7), BigInt(6)));
    CHECK(a - c == Rational(BigInt(11), BigInt(6)));
    CHECK(a * c == Rational(BigInt(-1), BigInt(2)));
    CHECK(a / c == Rational(BigInt(-9), BigInt(2)));
    CHECK(-a == Rational(BigInt(-3), BigInt(2)));
    CHECK(a.inverse() == Rational(BigInt(2), BigInt(3)));
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK(Rational(BigInt(1), BigInt(2)).pow(3) == Rational(BigInt(1), BigInt(8)));
    CHECK(Rational(0) < Rational(BigInt(1), BigInt(100)));
    CHECK(Rational(BigInt(-1), BigInt(2)) < Rational(0));
    CHECK(abs(Rational(BigInt(-3), BigInt(7))) == Rational(BigInt(3), BigInt(7)));
    CHECK(Rational(BigInt(10), BigInt(5)).is_integer());
    CHECK(Rational(BigInt(3), BigInt(2)).str() == "3/2");
    CHECK(Rational(5).str() == "5");
}

TEST_CASE("rational big values stay exact") {
    Rational big = Rational(2).pow(200) + Rational(1);
    Rational expect(BigInt("1606938044258990275541962092341162602522202993782792835301377"));
    CHECK(big == expect);
    CHECK((big - Rational(1)) * Rational(BigInt(1), BigInt(1024)) == Rational(2).pow(190));
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(Rational(-1)));
    GaussianRational z(Rational(3), Rational(4));
    CHECK(z.conj() == GaussianRational(Rational(3), Rational(-4)));
    CHECK(z * z.conj() == GaussianRational(Rational(25)));
    CHECK(z.inverse() == GaussianRational(Rational(BigInt(3), BigInt(25)),
                                          Rational(BigInt(-4), BigInt(25))));
    CHECK(z * z.inverse() == GaussianRational(Rational(1)));
    CHECK(i.pow(4) == GaussianRational(Rational(1)));
    CHECK(i.pow(-1) == GaussianRational(Rational(0), Rational(-1)));
    CHECK(i.pow(103) == GaussianRational(Rational(0), Rational(-1)));
    GaussianRational w(Rational(BigInt(3), BigInt(5)), Rational(BigInt(4), BigInt(5)));
    CHECK(w.pow(2) == GaussianRational(Rational(BigInt(-7), BigInt(25)),
                                       Rational(BigInt(24), BigInt(25))));
    auto c = w.to_complex();
    CHECK(std::abs(std::abs(c) - 1.0) < 1e-15);
    CHECK(GaussianRational(Rational(2)).is_real());
    CHECK(!i.is_real());
}

TEST_CASE("scalar exact and float modes") {
    Scalar a = q(1, 2);
    Scalar b = q(1, 3);
    CHECK((a + b) == q(5, 6));
    CHECK((a * b) == q(1, 6));
    CHECK((a - b) == q(1, 6));
    CHECK(a.inverse() == q(2));
    CHECK(a.pow_int(-2) == q(4));
    CHECK(a.is_exact());
    CHECK(a.is_real());
    CHECK(!a.is_zero());
    CHECK(Scalar::zero(ModeTag::Exact).is_zero());
    CHECK(Scalar::one(ModeTag::Exact).is_one());

    Scalar f = Scalar::floating(std::complex<double>(0.5, 0.0));
    CHECK(!f.is_exact());
    CHECK(f.close_to(a, 1e-12));
    CHECK(a.to_float().close_to(f, 0.0));
    Scalar g = Scalar::floating(std::complex<double>(0.5 + 1e-7, 0.0));
    CHECK(!g.close_to(f, 1e-9));
    CHECK(g.close_to(f, 1e-6));

    // Mixing modes in arithmetic is a programming error, never silent: the
    // caller must convert explicitly with to_float().
    CHECK_THROWS_AS(a + f, ModeError);
    CHECK_THROWS_AS(a * f, ModeError);
    Scalar mixed = a.to_float() + f;
    CHECK(!mixed.is_exact());
    CHECK(mixed.close_to(Scalar::floating(std::complex<double>(1.0, 0.0)), 1e-15));
}

TEST_CASE("scalar string forms") {
    CHECK(q(-1, 12).str() == "-1/12");
    Scalar z = Scalar::exact(GaussianRational(Rational(BigInt(1), BigInt(4)),
                                              Rational(BigInt(-1), BigInt(4))));
    CHECK(z.str() == "1/4-1/4*i");
}

TEST_CASE("polynomial arithmetic and composition") {
    // p(x) = 1 + 2x + 3x^2
    Polynomial p({q(1), q(2), q(3)});
    CHECK(p.degree() == 2);
    CHECK(p.evaluate_at(2) == q(17));
    CHECK(p.evaluate_at(-1) == q(2));
    Polynomial zero = Polynomial::constant(Scalar::zero(ModeTag::Exact));
    CHECK(zero.degree() == -1);

    Polynomial x = Polynomial::x(ModeTag::Exact);
    Polynomial sum = p + x;
    CHECK(sum.evaluate_at(5) == q(91));
    Polynomial prod = p * p;
    CHECK(prod.degree() == 4);
    CHECK(prod.evaluate_at(3) == q(34 * 34));

    // Compose p(2n + 3): check against direct evaluation at several points.
    Polynomial comp = p.compose_affine(2, 3);
    for (long long n = -5; n <= 5; ++n) {
        CHECK(comp.evaluate_at(n) == p.evaluate_at(2 * n + 3));
    }
    Polynomial sh = p.shifted(4);
    for (long long n = -5; n <= 5; ++n) CHECK(sh.evaluate_at(n) == p.evaluate_at(n + 4));
    Polynomial rf = p.reflected();
    for (long long n = -5; n <= 5; ++n) CHECK(rf.evaluate_at(n) == p.evaluate_at(-n));

    CHECK(p.without_constant_term().evaluate_at(0).is_zero());
    CHECK(p.scaled(q(2)).evaluate_at(2) == q(34));
}

TEST_CASE("polynomial integral over [-1, 0]") {
    // integral of x^k over [-1,0] is (-1)^k/(k+1).
    for (unsigned k = 0; k <= 8; ++k) {
        std::vector<Scalar> coeffs(k + 1, Scalar::zero(ModeTag::Exact));
        coeffs[k] = Scalar::one(ModeTag::Exact);
        Polynomial mono{coeffs};
        Scalar want = q(k % 2 == 0 ? 1 : -1, static_cast<long long>(k) + 1);
        CHECK(mono.integral_m1_0() == want);
    }
    // Linearity spot check: p(x) = 6x^2 - 4x + 1 integrates to 2 + 2 + 1 = 5.
    Polynomial p({q(1), q(-4), q(6)});
    CHECK(p.integral_m1_0() == q(5));
}

namespace {
// Independent brute-force Bernoulli values via the defining recurrence
// sum_{j=0}^{k} C(k+1, j) B_j = k + 1, written with no shared code with
// the library implementation.
Rational brute_bernoulli(unsigned k, std::vector<Rational>& cache) {
    if (k < cache.size()) return cache[k];
    for (unsigned m = static_cast<unsigned>(cache.size()); m <= k; ++m) {
        // C(m+1, j) computed incrementally.
        Rational acc(0);
        BigInt binom = 1;  // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc = acc + Rational(binom) * cache[j];
            binom = binom * BigInt(m + 1 - j) / BigInt(j + 1);
        }
        // binom now equals C(m+1, m); solve for B_m.
        Rational bm = (Rational(static_cast<long long>(m) + 1) - acc) / Rational(binom);
        cache.push_back(bm);
    }
    return cache[k];
}
}  // namespace

TEST_CASE("bernoulli numbers match the defining recurrence") {
    std::vector<Rational> cache{Rational(1)};
    for (unsigned k = 0; k <= 40; ++k) {
        CHECK(bernoulli_number(k) == brute_bernoulli(k, cache));
    }
    // Fixed well-known values under the B1 = +1/2 convention.
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(BigInt(1), BigInt(2)));
    CHECK(bernoulli_number(2) == Rational(BigInt(1), BigInt(6)));
    CHECK(bernoulli_number(3) == Rational(0));
    CHECK(bernoulli_number(4) == Rational(BigInt(-1), BigInt(30)));
    CHECK(bernoulli_number(12) == Rational(BigInt(-691), BigInt(2730)));
    for (unsigned k = 3; k <= 39; k += 2) CHECK(bernoulli_number(k) == Rational(0));
}

TEST_CASE("faulhaber polynomials reproduce literal power sums") {
    for (unsigned k = 0; k <= 10; ++k) {
        Polynomial s = faulhaber_sum_poly(k);
        for (long long m = 0; m <= 12; ++m) {
            Rational direct(0);
            for (long long u = 1; u <= m; ++u) direct = direct + Rational(u).pow(k);
            Scalar got = s.evaluate_at(m);
            CHECK(got == Scalar::exact(GaussianRational(direct)));
        }
    }
}

TEST_CASE("power-sum polynomials: S_k(m) - S_k(m-1) = m^k, S_k(0) = 0") {
    for (unsigned k = 0; k <= 10; ++k) {
        Polynomial sk = bernoulli_polynomial(k);
        CHECK(sk.degree() == static_cast<int>(k) + 1);
        CHECK(sk.evaluate_at(0).is_zero());
        for (long long m = -6; m <= 6; ++m) {
            Scalar delta = sk.evaluate_at(m) - sk.evaluate_at(m - 1);
            // pow_int(0) yields 1 even at m = 0, matching the empty product.
            Scalar expect = Scalar::integer(ModeTag::Exact, m).pow_int(k);
            CHECK(delta == expect);
        }
        // The two entry points expose the same polynomial.
        CHECK(sk == faulhaber_sum_poly(k));
    }
    // Spot values: S_1(m) = m(m+1)/2, S_2(4) = 30, S_3(3) = 36.
    CHECK(bernoulli_polynomial(1).evaluate_at(7) == q(28));
    CHECK(bernoulli_polynomial(2).evaluate_at(4) == q(30));
    CHECK(bernoulli_polynomial(3).evaluate_at(3) == q(36));
}

TEST_CASE("bernoulli table is safe under concurrent first access") {
    // Hammer the lazily grown table from several threads at once.
    std::atomic<bool> ok{true};
    std::vector<std::thread> pool;
    pool.reserve(8);
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&ok, t] {
            std::vector<Rational> cache{Rational(1)};
            for (unsigned k = 0; k <= 60; ++k) {
                unsigned idx = (k + static_cast<unsigned>(t) * 7) % 61;
                if (bernoulli_number(idx) != brute_bernoulli(idx, cache)) ok = false;
            }
        });
    }
    for (auto& th : pool) th.join();
    CHECK(ok.load());
}
