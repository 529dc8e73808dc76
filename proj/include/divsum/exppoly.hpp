#ifndef DIVSUM_EXPPOLY_HPP
#define DIVSUM_EXPPOLY_HPP

/**
 * @brief Exponential polynomials f(n) = sum over bases b of b^n * P_b(n).
 *
 * This is the closed representation the whole engine works in: it is
 * stable under addition, multiplication, argument shift n -> n+t,
 * reflection n -> -n and affine substitution n -> m*u+c, and it has
 * computable antidifferences.  Canonical form: bases are nonzero and
 * pairwise distinct (ordered map), every stored polynomial is nonzero,
 * and all scalars share the term's mode.  The zero function is the empty
 * term.
 *
 * The assigned limit of f as n grows follows two rules: the base-1
 * (pure polynomial) part P contributes the integral of P over [-1, 0],
 * and every other base contributes 0.  For polynomials this gives
 * lim n^s = (-1)^s/(s+1), in particular lim n = -1/2; for bounded
 * oscillations it gives e.g. lim (-1)^n = 0.  The two rules are mutually
 * consistent: lim F(n+1) = lim F(-n) holds for every term (the shift by
 * one and the reflection move the integral window and the bases in
 * matching ways), which is the compatibility condition the summation
 * axioms need.
 */

#include <map>
#include <string>

#include "divsum/polynomial.hpp"

namespace divsum {

// Float bases this close to 1 make the difference-equation solve
// ill-conditioned; such terms are rejected with PoleError.
inline constexpr double kNearOneTol = 1e-9;

enum class Parity { Even, Odd, Neither };
enum class Convergence { SummableClassically, Divergent };

class ExpPoly {
  public:
    explicit ExpPoly(Mode m = Mode::exact()) : mode_(m) {}

    static ExpPoly zero(Mode m) { return ExpPoly(m); }
    static ExpPoly constant(Mode m, const Scalar& c);
    // The identity function n |-> n.
    static ExpPoly variable(Mode m);
    static ExpPoly term(Mode m, const Scalar& base, const Polynomial& poly);

    const Mode& mode() const { return mode_; }
    const std::map<Scalar, Polynomial, ScalarKeyLess>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    // Polynomial attached to `base`, or the zero polynomial.
    Polynomial poly_for(const Scalar& base) const;

    ExpPoly operator-() const;
    friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b);
    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
    ExpPoly scaled(const Scalar& s) const;
    ExpPoly pow(unsigned k) const;

    // f(n + t); bases are untouched, polynomials pick up b^t and a shift.
    ExpPoly shift(long long t) const;
    // f(-n); bases invert.
    ExpPoly reflect() const;
    // f(m*u + c) as a function of u; requires m >= 1.
    ExpPoly substitute_affine(long long m, long long c) const;

    Scalar evaluate(long long n) const;

    // Canonical equality: exact in exact mode, tolerance-aware (including
    // base matching) in float mode.  Throws ModeError across modes.
    bool equals(const ExpPoly& o) const;

    // The assigned limit described in the header comment.
    Scalar limit_at_infinity() const;

    // Evenness/oddness in the refined sense: the pointwise condition
    // f(-n) = +/- f(n) and the matching condition on assigned limits
    // lim f(-n) = +/- lim f(n) must both hold.
    Parity parity() const;

    // Classical summability of sum f(u): every base strictly inside the
    // unit circle.  (Float bases within kNearOneTol of the circle count
    // as on it.)  The zero function is summable.
    Convergence classify_convergence() const;

    ExpPoly to_float() const;

    // Canonical rendering in the expression grammar, e.g.
    // "(-1)^u*(u) + u^2 - 1/2".  Re-parses to the same term.
    std::string str(char var = 'u') const;

    // Normalizing insert: merges into an existing base, drops zeros.
    void add_term(const Scalar& base, const Polynomial& poly);

  private:
    void check_scalar_mode(const Scalar& s) const;

    Mode mode_;
    std::map<Scalar, Polynomial, ScalarKeyLess> terms_;
};

}  // namespace divsum

#endif  // DIVSUM_EXPPOLY_HPP
