// Command-line front end: sequence emission in OEIS b-file form,
// verification suites, and Cayley-graph export.  Talks to the library
// through the C API only.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "modgroup.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

int fail_usage(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int emit_sequence(const std::string& which, const std::string& method, std::uint32_t max,
                  std::uint32_t budget) {
    static const std::map<std::string, mg_sequence_kind> kinds = {
        {"t", MG_SEQ_IDENTITY_WORDS},
        {"tfrak", MG_SEQ_PRIMITIVE_WORDS},
        {"q", MG_SEQ_BIVARIATE},
        {"v", MG_SEQ_REDUCED_WORDS},
    };
    static const std::map<std::string, mg_count_method> methods = {
        {"brute", MG_METHOD_BRUTE},
        {"pda", MG_METHOD_PDA},
        {"series", MG_METHOD_SERIES},
    };
    auto kind = kinds.find(which);
    if (kind == kinds.end()) return fail_usage("unknown sequence '" + which + "'");
    auto m = methods.find(method);
    if (m == methods.end()) return fail_usage("unknown method '" + method + "'");

    mg_sequence* seq = nullptr;
    mg_status st = mg_sequence_compute(kind->second, m->second, max, budget, &seq);
    if (st != MG_OK)
        return fail_usage(std::string(mg_status_message(st)) + " (seq " + which + ", method " +
                          method + ", max " + std::to_string(max) + ")");

    size_t rows = mg_sequence_rows(seq);
    size_t idx_count = mg_sequence_index_count(seq);
    for (size_t row = 0; row < rows; ++row) {
        for (size_t k = 0; k < idx_count; ++k) {
            std::uint32_t idx = 0;
            mg_sequence_index(seq, row, k, &idx);
            std::printf("%u ", idx);
        }
        char* value = nullptr;
        if (mg_sequence_value(seq, row, &value) != MG_OK) {
            mg_sequence_free(seq);
            return fail_usage("sequence value unavailable");
        }
        std::printf("%s\n", value);
        mg_string_free(value);
    }
    mg_sequence_free(seq);
    return kExitOk;
}

int run_verify(const std::string& suite, const mg_verify_limits& limits) {
    static const std::map<std::string, mg_verify_suite> suites = {
        {"oracles", MG_VERIFY_ORACLES},
        {"cubic", MG_VERIFY_CUBIC},
        {"congruence", MG_VERIFY_CONGRUENCE},
        {"props", MG_VERIFY_PROPS},
    };
    auto s = suites.find(suite);
    if (s == suites.end()) return fail_usage("unknown suite '" + suite + "'");

    int all_passed = 0;
    char* report = nullptr;
    mg_status st = mg_verify_run(s->second, &limits, &all_passed, &report);
    if (st != MG_OK) return fail_usage(mg_status_message(st));
    std::printf("%s", report);
    mg_string_free(report);
    std::printf(all_passed ? "suite %s: pass\n" : "suite %s: FAIL\n", suite.c_str());
    return all_passed ? kExitOk : kExitCheckFailed;
}

int emit_graph(std::uint32_t depth) {
    if (depth > 8) return fail_usage("graph depth is limited to 8");
    char* dot = nullptr;
    mg_status st = mg_cayley_dot(depth, &dot);
    if (st != MG_OK) return fail_usage(mg_status_message(st));
    std::printf("%s", dot);
    mg_string_free(dot);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Counts words over {U,S} equal to the identity in the modular group"};
    app.require_subcommand(1);

    auto* seq = app.add_subcommand("seq", "emit a sequence as b-file lines on stdout");
    std::string which;
    std::string method = "series";
    std::uint32_t max = 19;
    std::uint32_t budget = 0;
    seq->add_option("sequence", which, "one of: t, tfrak, q, v")->required();
    seq->add_option("--max", max, "largest index (or total length for q)");
    seq->add_option("--method", method, "brute, pda, or series");
    seq->add_option("--budget", budget, "override the exhaustive-search budget");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    mg_verify_limits limits{};
    verify->add_option("suite", suite, "one of: oracles, cubic, congruence, props")->required();
    verify->add_option("--max-len", limits.max_len, "word length for oracle sweeps");
    verify->add_option("--t-order", limits.t_order, "T cubic residual order");
    verify->add_option("--q-order", limits.q_order, "Q cubic residual order");
    verify->add_option("--k-order", limits.k_order, "grammar cubic residual order");
    verify->add_option("--pmax", limits.prime_max, "largest prime for congruence sweeps");
    verify->add_option("--props-total", limits.props_total, "total length for counting checks");

    auto* graph = app.add_subcommand("graph", "emit the directed Cayley graph as DOT");
    std::uint32_t depth = 4;
    graph->add_option("--depth", depth, "reach of the vertex set (at most 8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (seq->parsed()) return emit_sequence(which, method, max, budget);
    if (verify->parsed()) return run_verify(suite, limits);
    if (graph->parsed()) return emit_graph(depth);
    return kExitUsage;
}
