#ifndef DIVSUM_ERRORS_HPP
#define DIVSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace divsum {

// Base class for all errors raised by the library.  The CLI maps the
// concrete types onto process exit codes (see tools/divsum_main.cpp).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic precondition violated (division by zero, zero exponent base, ...).
struct DomainError : Error {
    using Error::Error;
};

// Exact and float values were mixed in one operation.
struct ModeError : Error {
    using Error::Error;
};

// Evaluation at or numerically too close to a pole (geometric ratio 1,
// trig phase with base 1, ill-conditioned float base near 1).
struct PoleError : Error {
    using Error::Error;
};

// rule_even applied to a term that is not even.
struct NotEvenError : Error {
    using Error::Error;
};

// rule_quasi_even applied to a term that fails the quasi-even symmetry.
struct NotQuasiEvenError : Error {
    using Error::Error;
};

// The input expression is outside the representable class.
struct UnsupportedTermError : Error {
    using Error::Error;
};

// Query text failed to parse; `pos` is the byte offset into the input.
struct SyntaxError : Error {
    std::size_t pos;
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what), pos(position) {}
};

// Partial-sum oracle gave up: partial sums fail the Cauchy/extrapolation test.
struct NonConvergentError : Error {
    using Error::Error;
};

// Abel oracle cannot be applied to this term (|base| > 1 or a base-1 part).
struct AbelInapplicableError : Error {
    using Error::Error;
};

// A user-supplied primitive does not difference back to the summand.
struct DeltaMismatchError : Error {
    using Error::Error;
};

// Numeric limit detection failed (unbounded or non-decaying oscillation).
struct LimitUndetectableError : Error {
    using Error::Error;
};

}  // namespace divsum

#endif  // DIVSUM_ERRORS_HPP
