#include "modgroup/congruence.hpp"

#include <stdexcept>

#include "modgroup/solver.hpp"

namespace modgroup {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d <= n / d; ++d)
        if (n % d == 0) return false;
    return true;
}

CongruenceReport fermat_check(std::span<const Integer> coeffs, unsigned lo, unsigned hi,
                              unsigned power) {
    if (power != 1 && power != 2)
        throw std::invalid_argument("congruence power must be 1 (Fermat) or 2 (Wieferich)");
    if (hi >= coeffs.size())
        throw std::domain_error("congruence range exceeds the available coefficients");
    CongruenceReport report{lo, hi, power, {}};
    Integer modulus, residue;
    for (unsigned p = lo; p <= hi; ++p) {
        if (!is_prime(p)) continue;
        modulus = p;
        if (power == 2) modulus *= p;
        mpz_mod(residue.get_mpz_t(), coeffs[p].get_mpz_t(), modulus.get_mpz_t());
        if (residue != 0) report.failures.push_back({p, residue});
    }
    return report;
}

BuiltinSequences builtin_sequences(std::size_t order) {
    BuiltinSequences seqs;
    seqs.p.resize(order);
    seqs.j.resize(order);
    for (std::size_t n = 0; n < order; ++n) {
        if (n >= 2) {
            mpz_ui_pow_ui(seqs.p[n].get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
            seqs.p[n] -= 1;
        }
        mpz_bin_uiui(seqs.j[n].get_mpz_t(), static_cast<unsigned long>(2 * n),
                     static_cast<unsigned long>(n));
        seqs.j[n] -= 2;
    }
    seqs.t = assemble_T(order).integer_coefficients();
    return seqs;
}

}  // namespace modgroup
