#ifndef DIVSUM_ANTIDIFF_HPP
#define DIVSUM_ANTIDIFF_HPP

/**
 * @brief Discrete antidifferences: given f, find F with F(n+1) - F(n) = f(n).
 *
 * Within the exponential-polynomial class every f has a primitive in the
 * same class, unique up to an additive constant in the base-1 polynomial.
 * Construction is per base:
 *
 *   base 1:   sum_k c_k n^k  ->  sum_k c_k * S_k(n-1), where S_k is the
 *             power-sum polynomial (S_k(m) = 1^k + ... + m^k); afterwards
 *             the free constant is normalized to a zero constant term.
 *   base b != 1:  b^n p(n) -> b^n q(n) with b*q(n+1) - q(n) = p(n), a
 *             triangular linear system in the coefficients of q whose
 *             diagonal entries are all b - 1; solved exactly by
 *             back-substitution from the top degree.
 *
 * In float mode, bases within kNearOneTol of 1 (but not exactly 1) are
 * rejected with PoleError: the solve divides by b - 1 repeatedly and the
 * result would be numerically meaningless.
 */

#include "divsum/exppoly.hpp"

namespace divsum {

struct Primitive {
    ExpPoly F;       // the antidifference
    ExpPoly source;  // the f it was built from
};

// Builds the primitive and spot-checks F(n+1) - F(n) = f(n) on n in
// [-10, 10] before returning (a construction bug throws, never escapes).
Primitive antidifference(const ExpPoly& f);

// Symbolic check that shift(F, 1) - F and f are the same canonical term
// (tolerance-aware in float mode).  No sampling involved.
bool verify_delta(const ExpPoly& F, const ExpPoly& f);

}  // namespace divsum

#endif  // DIVSUM_ANTIDIFF_HPP
