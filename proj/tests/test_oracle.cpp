#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "divsum/engine.hpp"
#include "divsum/errors.hpp"
#include "divsum/oracle.hpp"
#include "divsum/parser.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace divsum;
using testutil::q;

namespace {
ExpPoly exact_term(const GaussianRational& base, const Polynomial& p) {
    return ExpPoly::term(Mode::exact(), Scalar::exact(base), p);
}

PrimitivePair pair_of(const char* F, const char* f) {
    return PrimitivePair{parse_expression(F), parse_expression(f)};
}
}  // namespace

TEST_CASE("partial sums: telescoping rational series") {
    // sum 1/(4u^2-1) = 1/2.
    auto f = [](long long u) {
        double x = static_cast<double>(u);
        return 1.0 / (4.0 * x * x - 1.0);
    };
    double got = partial_sum_oracle(f, 1, 1e-9);
    CHECK(std::abs(got - 0.5) < 1e-8);
}

TEST_CASE("partial sums: geometric tail") {
    auto f = [](long long u) { return std::pow(0.5, static_cast<double>(u)); };
    double got = partial_sum_oracle(f, 1, 1e-12);
    CHECK(std::abs(got - 1.0) < 1e-11);
    // From a different anchor.
    double from3 = partial_sum_oracle(f, 3, 1e-12);
    CHECK(std::abs(from3 - 0.25) < 1e-11);
}

TEST_CASE("partial sums: divergent input is rejected") {
    auto ramp = [](long long u) { return static_cast<double>(u); };
    CHECK_THROWS_AS(partial_sum_oracle(ramp, 1, 1e-9), NonConvergentError);
    auto harmonic = [](long long u) { return 1.0 / static_cast<double>(u); };
    CHECK_THROWS_AS(partial_sum_oracle(harmonic, 1, 1e-9), NonConvergentError);
    auto alternating = [](long long u) { return u % 2 == 0 ? 1.0 : -1.0; };
    CHECK_THROWS_AS(partial_sum_oracle(alternating, 1, 1e-9), NonConvergentError);
}

TEST_CASE("abel limits of the classical alternating series") {
    ExpPoly alt = exact_term(GaussianRational(Rational(-1)), Polynomial::constant(q(-1)));
    // (-1)^(u-1): Abel limit 1/2.
    CHECK(std::abs(abel_oracle(alt, 1) - 0.5) < 1e-6);
    // (-1)^(u-1) u: Abel limit 1/4.
    ExpPoly alt_ramp = exact_term(GaussianRational(Rational(-1)),
                                  Polynomial({Scalar::zero(ModeTag::Exact), q(-1)}));
    CHECK(std::abs(abel_oracle(alt_ramp, 1) - 0.25) < 1e-6);
    // (-1)^(u-1) u^2: Abel limit 0 (eta(-2) = 0).
    ExpPoly alt_sq = exact_term(
        GaussianRational(Rational(-1)),
        Polynomial({Scalar::zero(ModeTag::Exact), Scalar::zero(ModeTag::Exact), q(-1)}));
    CHECK(std::abs(abel_oracle(alt_sq, 1)) < 1e-6);
}

TEST_CASE("abel oracle refuses series outside its hypothesis") {
    // Base 1 terms have no finite Abel limit.
    CHECK_THROWS_AS(abel_oracle(ExpPoly::variable(Mode::exact()), 1),
                    AbelInapplicableError);
    CHECK_THROWS_AS(abel_oracle(ExpPoly::constant(Mode::exact(), q(1)), 1),
                    AbelInapplicableError);
    // |base| > 1 diverges even Abel-summed.
    ExpPoly two = exact_term(GaussianRational(Rational(2)), Polynomial::constant(q(1)));
    CHECK_THROWS_AS(abel_oracle(two, 1), AbelInapplicableError);
    // A mixed term with a base-1 component is rejected as a whole.
    ExpPoly mixed = ExpPoly::variable(Mode::exact()) +
                    exact_term(GaussianRational(Rational(-1)), Polynomial::constant(q(1)));
    CHECK_THROWS_AS(abel_oracle(mixed, 1), AbelInapplicableError);
}

TEST_CASE("abel oracle handles unit-circle complex bases") {
    // f(u) = (-1)^(u-1) cos u*theta at theta = 1: engine value is 1/2.
    double c = std::cos(1.0), s = std::sin(1.0);
    ExpPoly f(Mode::floating());
    f.add_term(Scalar::floating(std::complex<double>(-c, -s)),
               Polynomial::constant(Scalar::floating(-0.5)));
    f.add_term(Scalar::floating(std::complex<double>(-c, s)),
               Polynomial::constant(Scalar::floating(-0.5)));
    CHECK(std::abs(abel_oracle(f, 1) - 0.5) < 1e-6);
}

TEST_CASE("telescoping oracle: finite and infinite ranges") {
    auto p = pair_of("-1/(2*(2*u-1))", "1/(4*u^2-1)");
    double inf = telescoping_sum(p, 1, std::nullopt);
    CHECK(std::abs(inf - 0.5) < 1e-9);

    // Finite range: sum_{u=1}^{3} f with F = u^2 means f = 2u+1 -> 15.
    auto sq = pair_of("u^2", "2*u+1");
    double fin = telescoping_sum(sq, 1, 3);
    CHECK(std::abs(fin - 15.0) < 1e-12);

    auto fast = pair_of("-(u-1/2)/2^(u^2-u+1)", "((4^u-1)*(u-1/2)-1)/2^(u^2+u+1)");
    CHECK(std::abs(telescoping_sum(fast, 1, std::nullopt) - 0.25) < 1e-9);
}

TEST_CASE("telescoping oracle rejects a wrong primitive") {
    auto bad = pair_of("u^2", "u");  // delta of u^2 is 2u+1, not u
    CHECK_THROWS_AS(telescoping_sum(bad, 1, 10), DeltaMismatchError);
}

TEST_CASE("telescoping oracle reports undetectable limits") {
    // F = (-1)^u has no numeric limit along the sampled lattice pair.
    auto osc = pair_of("(-1)^u", "(-1)^(u+1)-(-1)^u");
    CHECK_THROWS_AS(telescoping_sum(osc, 1, std::nullopt), LimitUndetectableError);
}

TEST_CASE("cross check picks the strongest applicable method") {
    // Classically convergent: partial sums, tight tolerance.
    ExpPoly half = exact_term(GaussianRational(Rational(BigInt(1), BigInt(2))),
                              Polynomial::constant(q(1)));
    OracleReport r1 = cross_check(half, 1, sum_infinite(half, 1).value);
    CHECK(r1.method == OracleReport::Method::PartialSums);
    CHECK(r1.ok);
    CHECK(r1.discrepancy < 1e-12);

    // Divergent but Abel-amenable.
    ExpPoly alt = exact_term(GaussianRational(Rational(-1)), Polynomial::constant(q(-1)));
    OracleReport r2 = cross_check(alt, 1, sum_infinite(alt, 1).value);
    CHECK(r2.method == OracleReport::Method::Abel);
    CHECK(r2.ok);
    CHECK(r2.discrepancy < 1e-6);

    // Polynomial (base 1): no oracle applies; engine stands alone.
    OracleReport r3 = cross_check(ExpPoly::variable(Mode::exact()).pow(2), 1,
                                  sum_infinite(ExpPoly::variable(Mode::exact()).pow(2), 1).value);
    CHECK(r3.method == OracleReport::Method::None);
    CHECK(r3.ok);

    // A mismatch is reported, never reconciled.
    OracleReport bad = cross_check(half, 1, q(7));
    CHECK(bad.method == OracleReport::Method::PartialSums);
    CHECK(!bad.ok);
    CHECK(bad.discrepancy > 1.0);
}

TEST_CASE("cross check validates random convergent series") {
    testutil::Rng rng(50001u);
    int done = 0;
    for (int iter = 0; done < 100 && iter < 2000; ++iter) {
        GaussianRational g = testutil::random_contracting_base(rng);
        if (g.is_zero()) continue;
        Polynomial p = testutil::random_nonzero_polynomial(rng, 3, false);
        ExpPoly f = exact_term(g, p);
        if (f.classify_convergence() != Convergence::SummableClassically) continue;
        OracleReport r = cross_check(f, 1, sum_infinite(f, 1).value);
        CHECK(r.method == OracleReport::Method::PartialSums);
        CHECK(r.ok);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("cross check validates random unit-circle divergent series via abel") {
    testutil::Rng rng(50002u);
    int done = 0;
    for (int iter = 0; done < 100 && iter < 4000; ++iter) {
        GaussianRational g = testutil::random_unit_base_not_one(rng);
        Polynomial p = testutil::random_nonzero_polynomial(rng, 3, false);
        ExpPoly f = exact_term(g, p);
        OracleReport r = cross_check(f, 1, sum_infinite(f, 1).value);
        if (r.method != OracleReport::Method::Abel) continue;
        CHECK(r.ok);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("validate pair accepts correct pairs regardless of overflow points") {
    // 2^(u^2) overflows to inf for |u| ~ 32; those points are skipped but
    // enough checkable ones remain.
    auto fast = pair_of("-(u-1/2)/2^(u^2-u+1)", "((4^u-1)*(u-1/2)-1)/2^(u^2+u+1)");
    CHECK_NOTHROW(validate_pair(fast));
    auto wrong = pair_of("-(u-1/2)/2^(u^2-u+1)", "1/(4*u^2-1)");
    CHECK_THROWS_AS(validate_pair(wrong), DeltaMismatchError);
}
