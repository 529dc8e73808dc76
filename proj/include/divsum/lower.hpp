#ifndef DIVSUM_LOWER_HPP
#define DIVSUM_LOWER_HPP

/**
 * @brief Translate expression ASTs into canonical exponential polynomials.
 *
 * The representable fragment: polynomials in the variable, constant^
 * (integer-affine exponent), cos/sin/cosh/sinh/exp of arguments linear in
 * the variable, and sums/differences/products of those.  Division is
 * allowed only by constants.  Everything else raises UnsupportedTermError.
 *
 * In Exact mode every scalar must be a Gaussian rational; terms that need
 * irrational constants (decimal literals, generic trig phases, e-bases)
 * are rejected there.  `lower_term` provides the requested-mode policy:
 * Auto tries Exact first and transparently falls back to Float when (and
 * only when) the term needs irrational constants.
 */

#include "divsum/ast.hpp"
#include "divsum/exppoly.hpp"

namespace divsum {

enum class RequestedMode { Auto, Exact, Float };

struct Lowered {
    ExpPoly term;
    ModeTag used;
};

/// Strict lowering at a fixed mode (UnsupportedTermError when the term is
/// outside the fragment or needs float constants in Exact mode).
ExpPoly lower(const AstPtr& ast, Mode mode);

/// Mode-policy wrapper used by the CLI: Auto falls back Exact -> Float.
Lowered lower_term(const AstPtr& ast, RequestedMode req, double tolerance);

}  // namespace divsum

#endif  // DIVSUM_LOWER_HPP
