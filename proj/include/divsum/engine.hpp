#ifndef DIVSUM_ENGINE_HPP
#define DIVSUM_ENGINE_HPP

/**
 * @brief Summation over the re-ordered integer line and assigned limits.
 *
 * The integers are traversed in the order 0, 1, 2, ... , -2, -1: zero
 * first, then the positives ascending, then the negatives with the most
 * negative first.  Under that order every sum over a range [a, b] --
 * finite, wrapping past infinity, or with b at infinity -- is evaluated
 * through one formula: pick a primitive F of the summand (F(n+1) - F(n) =
 * f(n)) and take F(b+1) - F(a), reading F at infinity through the
 * assigned limit.  Classically convergent series keep their usual values;
 * divergent ones acquire finite assigned values (1 + 2 + 3 + ... = -1/12)
 * consistent with linearity, shift and grouping identities, all of which
 * are exposed here as independently computed closed-form rules.
 */

#include <optional>
#include <utility>
#include <variant>

#include "divsum/antidiff.hpp"
#include "divsum/bernoulli.hpp"

namespace divsum {

// Strict order of the re-ordered line: a comes before b.
bool precedes(long long a, long long b);
inline bool precedes_eq(long long a, long long b) {
    return a == b || precedes(a, b);
}

// Range Z_{a,b}: the closed interval [a, b] when a precedes-or-equals b,
// otherwise the wrap-around union [a, -1] plus [0, b].
struct OrderedZRange {
    long long a;
    long long b;

    bool wraps() const { return precedes(b, a); }
    // True iff the range is a finite set of integers; this coincides with
    // a <= b in the ordinary integer order (the walk from a to b passes
    // the point at infinity exactly when a > b).
    bool finite_literal() const { return a <= b; }
    bool contains(long long x) const {
        if (!wraps()) return precedes_eq(a, x) && precedes_eq(x, b);
        return (precedes_eq(a, x) && precedes_eq(x, -1)) ||
               (precedes_eq(0, x) && precedes_eq(x, b));
    }
};

struct AssignedLimit {
    Scalar value;
};

// Limit assignment for a term G(n) as n runs to infinity:
// the base-1 polynomial part P contributes the integral of P over [-1,0],
// all other bases contribute 0.
AssignedLimit assigned_limit(const ExpPoly& G);

// Public "limit of a sequence" entry point.  Computed through the
// telescoping series F(1) + sum_{u>=2} (F(u) - F(u-1)) rather than by the
// integral rule, and provably equal to assigned_limit(F).
AssignedLimit seq_limit(const ExpPoly& F);

enum class SumClass { ConvergentClassical, AssignedDivergent };

struct SumValue {
    Scalar value;
    SumClass classification;
    // Present when the value came through the primitive pipeline.
    std::optional<Primitive> primitive;
};

// sum_{u=a}^{infinity} f(u) = (lim F(n+1)) - F(a).
SumValue sum_infinite(const ExpPoly& f, long long a);

// sum over Z_{a,b} = F(b+1) - F(a); finite literal ranges are summed by
// the same formula (it telescopes exactly).
SumValue sum_finite(const ExpPoly& f, long long a, long long b);

// Sum over the whole line, anchored anywhere: sum over Z_{a, a-1}.
Scalar sum_over_Z(const ExpPoly& f, long long anchor = 0);

// Even f: sum_{u>=1} f(u) = -f(0)/2.  Throws NotEvenError otherwise.
SumValue rule_even(const ExpPoly& f);

// Quasi-even f with f(-x) = f(x - eps*t), eps in {+1,-1}, t >= 0:
//   sum_{u>=1} f(u) =
//     (eps/2) * sum_{u=d}^{t-1+d} (lim f(n - eps*u) - f(-eps*u)) - f(0)/2
// with d = (1-eps)/2.  t = 0 degenerates to rule_even.
SumValue rule_quasi_even(const ExpPoly& f, int eps, long long t);

// Re-indexing identity (both sides returned; they agree for every f):
//   sum_{u>=1} f(u - eps*t) =
//     sum_{u>=1} f(u) - eps * sum_{u=d}^{t-1+d} (lim f(n - eps*u) - f(-eps*u)).
std::pair<Scalar, Scalar> rule_shift_identity(const ExpPoly& f, int eps,
                                              long long t);

// Splitting into even- and odd-indexed subsequences.  With
// A = sum f(u), B = sum (-1)^(u-1) f(u), L = lim (f(n) - (-1)^n f(n)):
//   sum f(2u) = (A - B)/2,   sum f(2u-1) = (A + B)/2 - L/2.
// Returned as (even_part, odd_part).
std::pair<Scalar, Scalar> rule_split(const ExpPoly& f);

// Pairwise grouping:
//   sum f(u) = sum_{u>=1} (f(2u-1) + f(2u)) + (1/2) lim (f(n) - (-1)^n f(n)).
// Returns the right-hand side, computed through the grouped series.
Scalar rule_group(const ExpPoly& f);

// sum_{u>=1} (a1 + (u-1)d) = (5d - 6*a1)/12.  Negative or zero d is
// accepted (an extension of the usual positive-step statement; the
// pipeline proof never uses the sign of d).
Rational arith_series(const Rational& a1, const Rational& d);

// sum_{u>=1} (-1)^(u-1) (a1 + (u-1)d) = (2*a1 - d)/4.
Rational alt_arith_series(const Rational& a1, const Rational& d);

// sum_{u>=0} g^u = 1/(1-g) for g != 1 (PoleError at g = 1).  g = 0 gives
// 1: the series is 1 + 0 + 0 + ... even though 0 is not a valid base.
Scalar geom_series(const Scalar& g);

// zeta(-k) = -B_{k+1}/(k+1), eta(-k) = (2^{k+1}-1) B_{k+1}/(k+1),
// with B_1 = +1/2 (so zeta(0) = -1/2, eta(0) = +1/2).
Rational zeta_neg(unsigned k);
Rational eta_neg(unsigned k);

enum class TrigVariant { Cos, AltCos, SinFamily };

// Angle argument for the trig family; exact when it is a half-integer
// multiple of pi (the base is then a power of i), float otherwise.
struct Angle {
    std::optional<Rational> pi_multiple;
    double radians = 0.0;

    static Angle pi_times(const Rational& m);
    static Angle of_radians(double v) { return Angle{std::nullopt, v}; }
};

// Cos:       sum_{u>=1} cos(u*theta)                     = -1/2
// AltCos:    sum_{u>=1} (-1)^(u-1) cos(u*theta)          = +1/2
// SinFamily: sum_{u>=1} (-1)^(u-1) u^(2k-1) sin(u*theta) =  0
// Poles: theta = 2*pi*m for Cos, theta = (2m+1)*pi for the alternating
// variants.  `tol` bounds the imaginary residue accepted in float mode.
SumValue trig_series(const Angle& theta, TrigVariant variant, unsigned k = 1,
                     double tol = 1e-9);

// lim F(n+1) - lim F(n) = lim (F(n+1) - F(n)): the extended regularity
// identity; returns whether it holds for this F (it always should).
bool check_extended_regularity(const ExpPoly& F);

struct PoleReport {
    int order;
    Rational residue;
};

// Factorial extended leftward: a! for a >= 0; at a = -n (n >= 1) a simple
// pole with residue (-1)^(n-1)/(n-1)!.
std::variant<Rational, PoleReport> factorial_ext(long long a);

}  // namespace divsum

#endif  // DIVSUM_ENGINE_HPP
