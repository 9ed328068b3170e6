#pragma once

#include <string>
#include <vector>

namespace modgroup {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string text() const;  // one "ok"/"FAIL" line per check
};

struct VerifyLimits {
    unsigned max_len = 14;     // word length for the oracle sweeps
    unsigned t_order = 300;    // residual order for the T cubic
    unsigned q_order = 30;     // residual order for the Q cubic
    unsigned k_order = 24;     // residual order for the grammar cubic
    unsigned prime_max = 499;  // upper prime for the congruence sweep
    unsigned props_total = 18; // total length bound for the counting checks
};

// Automaton vs. matrix evaluation, prefix normal forms, stack shape, and
// brute-force counts against the series.
VerifyReport verify_oracles(const VerifyLimits& limits = {});

// Residuals of the three algebraic relations plus the cross-method
// equalities between the series pipelines.
VerifyReport verify_cubics(const VerifyLimits& limits = {});

// Prime-divisibility sweeps for the built-in sequences.
VerifyReport verify_congruences(const VerifyLimits& limits = {});

// Counting identities: the substitution identity between q and q-hat, the
// class recurrences, the classification partition, rotation orbits, and
// the class series against brute force.
VerifyReport verify_props(const VerifyLimits& limits = {});

}  // namespace modgroup
