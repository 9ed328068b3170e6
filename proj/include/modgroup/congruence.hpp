#pragma once

#include <span>
#include <vector>

#include "modgroup/series.hpp"

namespace modgroup {

// Deterministic trial division; enough for the prime ranges used here.
bool is_prime(unsigned n);

struct CongruenceFailure {
    unsigned prime;
    Integer residue;  // coefficient mod prime^power, nonzero
};

struct CongruenceReport {
    unsigned lo = 0;
    unsigned hi = 0;
    unsigned power = 1;  // 1 tests divisibility by p, 2 by p^2
    std::vector<CongruenceFailure> failures;

    bool clean() const { return failures.empty(); }
    const char* property() const { return power == 1 ? "Fermat" : "Wieferich"; }
};

// For each prime p in [lo, hi], tests whether p^power divides coeffs[p].
// power must be 1 or 2; the coefficient list must reach index hi
// (std::domain_error otherwise).  The report lists every failing prime with
// its residue; callers decide which small primes are genuine exceptions.
CongruenceReport fermat_check(std::span<const Integer> coeffs, unsigned lo, unsigned hi,
                              unsigned power);

// The three built-in coefficient sequences:
//   p: 2^(n-1) - 1 for n >= 2  (the series x^2 / ((1-2x)(1-x)))
//   j: binomial(2n, n) - 2     (the series 1/sqrt(1-4x) - 2/(1-x))
//   t: identity-word counts from the solver
struct BuiltinSequences {
    std::vector<Integer> p;
    std::vector<Integer> j;
    std::vector<Integer> t;
};

BuiltinSequences builtin_sequences(std::size_t order);

}  // namespace modgroup
