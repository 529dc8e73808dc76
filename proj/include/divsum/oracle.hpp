#ifndef DIVSUM_ORACLE_HPP
#define DIVSUM_ORACLE_HPP

/**
 * @brief Independent numeric verification paths.
 *
 * Three oracles, none of which shares code with the symbolic engine:
 *  - partial_sum_oracle: literal partial sums with a Cauchy window, a
 *    geometric tail bound for fast-decaying terms, and dyadic Richardson
 *    extrapolation for slowly (rationally) decaying ones;
 *  - abel_oracle: lim_{x->1^-} sum f(u) x^u evaluated through exact
 *    rational closed forms of sum u^k y^u (no truncation error), sampled
 *    at x = 1 - 2^-j and Richardson-extrapolated;
 *  - telescoping_sum: the user-supplied-primitive path F(b+1) - F(a),
 *    with a numeric limit of F for b = infinity.
 *
 * The oracle never overrides the engine: a discrepancy is reported (and
 * fails tests); it is not reconciled.
 */

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "divsum/ast.hpp"
#include "divsum/exppoly.hpp"
#include "divsum/scalar.hpp"

namespace divsum {

// An explicitly supplied primitive F for a summand f, both as ASTs so the
// pair can cover non-exp-poly regular functions (e.g. f = 1/(4u^2-1)).
struct PrimitivePair {
    AstPtr F;
    AstPtr f;
};

/// Check |F(x+1) - F(x) - f(x)| at integer x in [-50, 50] (relative to
/// the local magnitudes); throws DeltaMismatchError on failure.
void validate_pair(const PrimitivePair& pair, double tol = 1e-9);

/// Classical partial sums of sum_{u>=a} f(u) to within tol.
/// Throws NonConvergentError when the series fails the Cauchy test.
double partial_sum_oracle(const std::function<double(long long)>& f,
                          long long a, double tol);

/// Abel limit lim_{x->1^-} sum_{u>=a} f(u) x^u for exp-poly f with all
/// bases on or inside the unit circle and no base-1 part.
/// Throws AbelInapplicableError otherwise.
double abel_oracle(const ExpPoly& f, long long a);

/// F(b+1) - F(a), numerically; b = nullopt means infinity and uses the
/// numeric limit of F (LimitUndetectableError when F has none).
double telescoping_sum(const PrimitivePair& pair, long long a,
                       std::optional<long long> b, double tol = 1e-9);

struct OracleReport {
    enum class Method { None, PartialSums, Abel, Telescoping };
    Method method = Method::None;
    double estimate = 0.0;
    double discrepancy = 0.0;  // |estimate - engine value|, unsigned
    long long iterations = 0;  // terms summed / extrapolation samples
    bool ok = true;            // discrepancy within the method tolerance
};

const char* oracle_method_name(OracleReport::Method m);

/// Strongest applicable oracle for sum_{u>=a} f(u): PartialSums when the
/// series converges classically, else Abel when applicable, else None.
OracleReport cross_check(const ExpPoly& f, long long a,
                         const Scalar& engine_value);

}  // namespace divsum

#endif  // DIVSUM_ORACLE_HPP
