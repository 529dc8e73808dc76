#ifndef DIVSUM_REPORT_HPP
#define DIVSUM_REPORT_HPP

/**
 * @brief Query execution and report assembly.
 *
 * `run` executes a parsed query against the engine and produces both the
 * machine-readable JSON report and a human-readable text rendering.  The
 * JSON schema (documented in README.md):
 *
 *   {
 *     "input":          original query text,
 *     "term_canonical": canonical form of the summand / sequence,
 *     "range":          {"a": int, "b": int | "inf"}   (sum queries),
 *     "mode":           "exact" | "float",
 *     "classification": "ConvergentClassical" | "AssignedDivergent",
 *     "value":          {"exact": "p/q" | null, "float": number,
 *                        "float_imag"?: number},
 *     "primitive"?:     rendered antidifference   (--show-primitive),
 *     "oracle"?:        {"method", "estimate", "discrepancy",
 *                        "iterations", "ok", ...}   (--verify / verify),
 *     "pole"?:          {"order": int, "residue": {...}}  (factorial)
 *   }
 */

#include <optional>
#include <string>

#include "json.hpp"

#include "divsum/lower.hpp"
#include "divsum/parser.hpp"

namespace divsum {

struct RunOptions {
    RequestedMode mode = RequestedMode::Auto;
    double tolerance = 1e-12;
    bool show_primitive = false;
    bool verify = false;
    std::optional<std::string> primitive_expr;
};

struct RunResult {
    nlohmann::json report;
    std::string text;
    bool verify_ok = true;  // false iff a requested verification failed
};

RunResult run(const Query& query, const RunOptions& options);

}  // namespace divsum

#endif  // DIVSUM_REPORT_HPP
