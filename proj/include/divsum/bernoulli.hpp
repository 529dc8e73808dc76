#ifndef DIVSUM_BERNOULLI_HPP
#define DIVSUM_BERNOULLI_HPP

/**
 * @brief Bernoulli numbers and power-sum (Faulhaber) polynomials.
 *
 * Sign convention: B_1 = +1/2.  With it the numbers satisfy
 *     sum_{j=0}^{k} C(k+1, j) * B_j = k + 1        (k >= 1, B_0 = 1)
 * and the degree-(k+1) polynomial
 *     B_k(n) = (1/(k+1)) * sum_{u=0}^{k} C(k+1, u) * B_u * n^{k+1-u}
 * equals the power sum 1^k + 2^k + ... + n^k.  (The other common
 * convention has B_1 = -1/2; the two agree except for the sign of B_1,
 * i.e. B_k(+1/2 convention) = (-1)^k * B_k(-1/2 convention).)
 */

#include "divsum/polynomial.hpp"
#include "divsum/rational.hpp"

namespace divsum {

// C(n, k) over arbitrary-precision integers; zero when k > n.
BigInt binomial(unsigned n, unsigned k);

// Memoized table of B_0, B_1, ...  Safe for concurrent readers: the cache
// behaves like a linearizable pure function of k.
class BernoulliTable {
  public:
    static Rational get(unsigned k);
};

inline Rational bernoulli_number(unsigned k) { return BernoulliTable::get(k); }

// The power-sum polynomial B_k(n) = sum_{u=1}^{n} u^k described above,
// with exact coefficients and zero constant term.
Polynomial bernoulli_polynomial(unsigned k);

// Name used by the antidifference code; same polynomial as
// bernoulli_polynomial, kept as a separate entry point (and tested
// against brute-force power sums independently).
Polynomial faulhaber_sum_poly(unsigned k);

}  // namespace divsum

#endif  // DIVSUM_BERNOULLI_HPP
