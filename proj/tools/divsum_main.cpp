// divsum: exact summation of convergent and divergent series over the
// re-ordered integer line.
//
// Usage:
//   divsum sum "u, u=1..inf"             -> -1/12
//   divsum sum "(-1)^(u-1)*u, u=1..inf"  -> 1/4
//   divsum zeta -- -4                    -> 0
//   divsum limit "n^2"                   -> 1/3
//   divsum verify "(1/2)^u, u=1..inf"    -> engine vs oracle
//
// Flags: --mode exact|float, --tolerance, --json, --show-primitive,
//        --primitive <F expr>, --verify.  DIVSUM_MODE sets the default
//        mode.  Exit codes: 0 ok, 1 verification mismatch, 2 syntax
//        error, 3 unsupported term, 4 pole / precondition violation.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "divsum/errors.hpp"
#include "divsum/report.hpp"

namespace {

struct CliOptions {
    std::string mode;
    double tolerance = 1e-12;
    bool json = false;
    bool show_primitive = false;
    bool verify = false;
    std::string primitive;
};

divsum::RequestedMode requested_mode(const std::string& text) {
    if (text.empty() || text == "auto") return divsum::RequestedMode::Auto;
    if (text == "exact") return divsum::RequestedMode::Exact;
    if (text == "float") return divsum::RequestedMode::Float;
    throw CLI::ValidationError("--mode must be exact or float");
}

int dispatch(const std::string& query_text, const CliOptions& cli) {
    divsum::RunOptions opt;
    opt.mode = requested_mode(cli.mode);
    opt.tolerance = cli.tolerance;
    opt.show_primitive = cli.show_primitive;
    opt.verify = cli.verify;
    if (!cli.primitive.empty()) opt.primitive_expr = cli.primitive;

    divsum::Query q = divsum::parse_query(query_text);
    divsum::RunResult result = divsum::run(q, opt);
    if (cli.json)
        std::cout << result.report.dump(2) << "\n";
    else
        std::cout << result.text;
    return result.verify_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "divsum: exact values for convergent and divergent series over "
        "the re-ordered integer line"};
    app.require_subcommand(1);

    CliOptions cli;
    app.add_option("--mode", cli.mode, "arithmetic mode: exact or float")
        ->envname("DIVSUM_MODE");
    app.add_option("--tolerance", cli.tolerance,
                   "float-mode comparison tolerance (default 1e-12)");
    app.add_flag("--json", cli.json, "emit the JSON report");
    app.add_flag("--show-primitive", cli.show_primitive,
                 "include the antidifference used");
    app.add_option("--primitive", cli.primitive,
                   "explicit primitive F(u) for the telescoping path");
    app.add_flag("--verify", cli.verify,
                 "cross-check the value against a numeric oracle");

    struct Sub {
        const char* name;
        const char* help;
    };
    const std::vector<Sub> subs = {
        {"sum", "sum <term>, <var>=<a>..<b|inf>"},
        {"limit", "limit of a sequence term"},
        {"zeta", "Riemann zeta at a non-positive integer"},
        {"eta", "Dirichlet eta at a non-positive integer"},
        {"factorial", "extended factorial (poles at negative integers)"},
        {"verify", "like sum, with the oracle cross-check forced"},
    };
    std::vector<std::pair<CLI::App*, std::vector<std::string>*>> parsed;
    parsed.reserve(subs.size());
    std::vector<std::vector<std::string>> arg_stores(subs.size());
    std::size_t idx = 0;
    for (const auto& s : subs) {
        CLI::App* sc = app.add_subcommand(s.name, s.help);
        sc->fallthrough();
        sc->add_option("args", arg_stores[idx], "query text");
        parsed.emplace_back(sc, &arg_stores[idx]);
        ++idx;
    }

    CLI11_PARSE(app, argc, argv);

    std::string query_text;
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        if (parsed[i].first->parsed()) {
            query_text = subs[i].name;
            for (const std::string& piece : *parsed[i].second) {
                query_text += " ";
                query_text += piece;
            }
            break;
        }
    }

    try {
        return dispatch(query_text, cli);
    } catch (const divsum::SyntaxError& e) {
        std::cerr << "syntax error at position " << e.pos << ": "
                  << e.what() << "\n";
        return 2;
    } catch (const divsum::UnsupportedTermError& e) {
        std::cerr << "unsupported term: " << e.what() << "\n";
        return 3;
    } catch (const divsum::PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 4;
    } catch (const divsum::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 4;
    } catch (const divsum::NotEvenError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 4;
    } catch (const divsum::NotQuasiEvenError& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return 4;
    } catch (const divsum::DeltaMismatchError& e) {
        std::cerr << "primitive mismatch: " << e.what() << "\n";
        return 4;
    } catch (const divsum::LimitUndetectableError& e) {
        std::cerr << "limit undetectable: " << e.what() << "\n";
        return 4;
    } catch (const divsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
