#ifndef DIVSUM_PARSER_HPP
#define DIVSUM_PARSER_HPP

/**
 * @brief Lexer and recursive-descent (Pratt) parser for queries.
 *
 * Query forms:
 *   sum <expr>, <var>=<int>..<int|inf>
 *   verify <expr>, <var>=<int>..<int|inf>
 *   limit <expr>
 *   zeta <int>      eta <int>      factorial <int>
 *
 * The variable must be `u` or `n`.  Syntax errors carry the byte
 * position of the offending token.
 */

#include <optional>
#include <string>

#include "divsum/ast.hpp"
#include "divsum/errors.hpp"

namespace divsum {

struct Query {
    enum class Kind { Sum, Limit, Zeta, Eta, Factorial, Verify };
    Kind kind = Kind::Sum;
    std::string input;            // original text, whitespace-trimmed
    AstPtr term;                  // Sum / Verify / Limit
    std::string var = "u";        // Sum / Verify
    long long a = 0;              // lower bound
    std::optional<long long> b;   // upper bound; nullopt means infinity
    long long arg = 0;            // Zeta / Eta / Factorial argument
};

/// Parse a full query string ("sum u^2, u=1..inf").
Query parse_query(const std::string& text);

/// Parse a bare expression (used for user-supplied primitives).
AstPtr parse_expression(const std::string& text);

}  // namespace divsum

#endif  // DIVSUM_PARSER_HPP
