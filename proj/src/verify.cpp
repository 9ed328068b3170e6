#include "modgroup/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "modgroup/congruence.hpp"
#include "modgroup/enumeration.hpp"
#include "modgroup/matrices.hpp"
#include "modgroup/pda.hpp"
#include "modgroup/solver.hpp"

namespace modgroup {

namespace {

void check(VerifyReport& report, std::string name, bool ok, std::string detail = "") {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Walks every word of length <= max_len with an incremental matrix product
// and an incremental automaton configuration.
template <typename Visit>
void walk_words(unsigned max_len, const Visit& visit) {
    std::vector<Letter> letters;
    ProjectiveMatrix m;
    PdaConfiguration c;
    auto rec = [&](auto&& self, const ProjectiveMatrix& cur) -> void {
        visit(letters, cur, c);
        if (letters.size() == max_len) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            auto undo = c.apply(l);
            self(self, multiply(cur, letter_matrix(l)));
            c.revert(undo);
            letters.pop_back();
        }
    };
    rec(rec, m);
}

// SS-free identity words of length <= max_len, visited as Word values.
template <typename Visit>
void walk_no_ss_identities(unsigned max_len, const Visit& visit) {
    std::vector<Letter> letters;
    auto rec = [&](auto&& self, const ProjectiveMatrix& cur) -> void {
        if (cur.is_identity()) visit(Word{letters});
        if (letters.size() == max_len) return;
        for (Letter l : {Letter::U, Letter::S}) {
            if (l == Letter::S && !letters.empty() && letters.back() == Letter::S) continue;
            letters.push_back(l);
            self(self, multiply(cur, letter_matrix(l)));
            letters.pop_back();
        }
    };
    rec(rec, ProjectiveMatrix::identity());
}

std::string first_mismatch(const std::vector<mpz_class>& got, const std::vector<Integer>& want,
                           std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
        if (got[i] != want[i])
            return "n=" + std::to_string(i) + ": " + got[i].get_str() + " vs " +
                   want[i].get_str();
    return "";
}

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::text() const {
    std::string out;
    for (const CheckResult& c : checks) {
        out += c.passed ? "ok   " : "FAIL ";
        out += c.name;
        if (!c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
    }
    return out;
}

VerifyReport verify_oracles(const VerifyLimits& limits) {
    VerifyReport report;

    std::size_t mismatches = 0;
    std::size_t words = 0;
    walk_words(limits.max_len, [&](const std::vector<Letter>&, const ProjectiveMatrix& m,
                                   const PdaConfiguration& c) {
        ++words;
        if (m.is_identity() != c.at_bottom()) ++mismatches;
    });
    check(report, "automaton accepts exactly the identity words, lengths 0.." +
                      std::to_string(limits.max_len),
          mismatches == 0, std::to_string(words) + " words");

    unsigned prefix_len = std::min(limits.max_len, 12u);
    std::size_t bad_prefixes = 0;
    walk_words(prefix_len, [&](const std::vector<Letter>& letters, const ProjectiveMatrix&,
                               const PdaConfiguration& c) {
        if (stack_to_normal_form(c) != normal_form(Word{letters})) ++bad_prefixes;
    });
    check(report, "stack decodes to the prefix normal form, lengths 0.." +
                      std::to_string(prefix_len),
          bad_prefixes == 0);

    std::size_t bad_stacks = 0;
    walk_words(prefix_len, [&](const std::vector<Letter>&, const ProjectiveMatrix&,
                               const PdaConfiguration& c) {
        const auto& syms = c.symbols();
        for (std::size_t i = 2; i < syms.size(); ++i) {
            bool prev_u = syms[i - 1] == StackSymbol::OneU || syms[i - 1] == StackSymbol::TwoU;
            bool cur_u = syms[i] == StackSymbol::OneU || syms[i] == StackSymbol::TwoU;
            if ((prev_u && cur_u) ||
                (syms[i - 1] == StackSymbol::OneS && syms[i] == StackSymbol::OneS))
                ++bad_stacks;
        }
    });
    check(report, "stack never codes an S^2 or U^3 factor", bad_stacks == 0);

    unsigned count_len = std::min(limits.max_len, 19u);
    auto brute_t = count_identity_upto(count_len);
    auto series_t = assemble_T(count_len + 1).integer_coefficients();
    std::string diff = first_mismatch(brute_t, series_t, count_len + 1);
    check(report, "brute-force identity counts match the series, n <= " +
                      std::to_string(count_len),
          diff.empty(), diff);

    auto brute_p = count_primitive_upto(count_len);
    auto series_p = primitive_series(assemble_T(count_len + 1)).integer_coefficients();
    diff = first_mismatch(brute_p, series_p, count_len + 1);
    check(report, "brute-force primitive counts match 1 - 1/T, n <= " +
                      std::to_string(count_len),
          diff.empty(), diff);

    return report;
}

VerifyReport verify_cubics(const VerifyLimits& limits) {
    VerifyReport report;

    UniSeries t = assemble_T(limits.t_order);
    auto rt = verify_cubic(t_cubic(limits.t_order), t);
    check(report, "T satisfies its cubic to order " + std::to_string(limits.t_order), !rt,
          rt ? "residual at degree " + std::to_string(*rt) : "clean");

    BiSeries q = assemble_Q(limits.q_order);
    auto rq = verify_cubic(q_cubic(limits.q_order), q);
    check(report, "Q satisfies its cubic to order " + std::to_string(limits.q_order), !rq,
          rq ? "residual at degree " + std::to_string(*rq) : "clean");

    GrammarSolution gs = solve_grammar(limits.k_order);
    auto rk = verify_cubic(k_cubic(limits.k_order), gs.f3);
    check(report, "grammar component f3 satisfies its cubic to order " +
                      std::to_string(limits.k_order),
          !rk, rk ? "residual at degree " + std::to_string(*rk) : "clean");

    UniSeries diag = diagonal(q);
    check(report, "diagonal of Q equals T", diag == t.truncated(diag.order()));

    check(report, "grammar solution reproduces Q",
          gs.q == q.truncated(limits.k_order));

    return report;
}

VerifyReport verify_congruences(const VerifyLimits& limits) {
    VerifyReport report;

    BuiltinSequences seqs = builtin_sequences(limits.prime_max + 1);

    CongruenceReport t_report = fermat_check(seqs.t, 5, limits.prime_max, 1);
    check(report, "p divides t(p) for primes 5.." + std::to_string(limits.prime_max),
          t_report.clean(),
          t_report.clean() ? "" : std::to_string(t_report.failures.size()) + " failures");

    CongruenceReport t_small = fermat_check(seqs.t, 2, 3, 1);
    check(report, "primes 2 and 3 are genuine exceptions for t", t_small.failures.size() == 2);

    unsigned p_hi = std::min(limits.prime_max, 97u);
    CongruenceReport p_report = fermat_check(seqs.p, 3, p_hi, 1);
    check(report, "p divides 2^(p-1)-1 for primes 3.." + std::to_string(p_hi),
          p_report.clean());

    unsigned j_hi = std::min(limits.prime_max, 101u);
    CongruenceReport j_report = fermat_check(seqs.j, 2, j_hi, 2);
    check(report, "p^2 divides binomial(2p,p)-2 for primes 2.." + std::to_string(j_hi),
          j_report.clean());

    std::size_t n_check = std::min<std::size_t>(seqs.p.size(), 65);
    UniSeries p_series = UniSeries::monomial(2, 1, n_check) *
                         invert(UniSeries::polynomial({1, -2}, n_check)) *
                         invert(UniSeries::polynomial({1, -1}, n_check));
    bool p_match = true;
    for (std::size_t n = 0; n < n_check; ++n)
        if (p_series.coefficient(n) != Rational(seqs.p[n])) p_match = false;
    check(report, "x^2/((1-2x)(1-x)) expands to 2^(n-1)-1", p_match);

    UniSeries j_series = invert(sqrt_unit(UniSeries::polynomial({1, -4}, n_check))) -
                         Rational(2) * invert(UniSeries::polynomial({1, -1}, n_check));
    bool j_match = true;
    for (std::size_t n = 0; n < n_check; ++n)
        if (j_series.coefficient(n) != Rational(seqs.j[n])) j_match = false;
    check(report, "1/sqrt(1-4x) - 2/(1-x) expands to binomial(2n,n)-2", j_match);

    return report;
}

VerifyReport verify_props(const VerifyLimits& limits) {
    VerifyReport report;
    const unsigned total = limits.props_total;

    CountTable q_table = count_bivariate(std::min(total, 16u));
    CountTable qhat_table = count_no_ss(total);

    // Per-length sums against the direct per-length counts.
    auto t_list = count_identity_upto(std::min(total, 16u));
    bool sums_ok = true;
    for (unsigned len = 0; len <= std::min(total, 16u); ++len)
        if (q_table.length_count(len) != t_list[len]) sums_ok = false;
    check(report, "bivariate counts sum to the per-length counts", sums_ok);

    bool support_ok = true;
    for (const auto& [key, v] : q_table.by_pair())
        if (v != 0 && (key.first % 3 != 0 || key.second % 2 != 0)) support_ok = false;
    for (const auto& [key, v] : qhat_table.by_pair())
        if (v != 0 && (key.first % 3 != 0 || key.second % 2 != 0)) support_ok = false;
    check(report, "identity words need 3 | #U and 2 | #S", support_ok);

    // q(3n,2m) = sum_k qhat(3n,2m-2k) * binomial(3n+k, k).
    bool subst_ok = true;
    for (unsigned n3 = 0; n3 <= std::min(total, 16u); n3 += 3) {
        for (unsigned m2 = 0; n3 + m2 <= std::min(total, 16u); m2 += 2) {
            Integer sum = 0;
            for (unsigned k = 0; 2 * k <= m2; ++k)
                sum += qhat_table.pair_count(n3, m2 - 2 * k) * binomial(n3 + k, k);
            if (sum != q_table.pair_count(n3, m2)) subst_ok = false;
        }
    }
    check(report, "reinstating S^2 blocks turns qhat counts into q counts", subst_ok);

    // Classification: exhaustive, disjoint, and consistent with qhat.
    std::map<std::pair<unsigned, unsigned>, std::map<WordClass, Integer>> class_counts;
    bool labels_ok = true;
    walk_no_ss_identities(total, [&](const Word& w) {
        WordClass cls = classify(w);
        if (cls == WordClass::None) labels_ok = false;
        if (w.empty()) {
            labels_ok = labels_ok && cls == WordClass::Unit;
            return;
        }
        unsigned u = static_cast<unsigned>(w.count(Letter::U));
        class_counts[{u, static_cast<unsigned>(w.length() - u)}][cls] += 1;
    });
    bool partition_ok = labels_ok;
    for (const auto& [key, v] : qhat_table.by_pair()) {
        if (key.first == 0 && key.second == 0) continue;
        Integer sum = 0;
        for (const auto& [cls, cnt] : class_counts[key]) sum += cnt;
        if (sum != v) partition_ok = false;
    }
    check(report, "every SS-free identity word lands in exactly one class", partition_ok);

    // Class recurrences (arguments graded as 3n - 3k).
    BorderCounts borders = count_special(total);
    auto cls_count = [&](WordClass c, unsigned u, unsigned s) -> Integer {
        auto it = class_counts.find({u, s});
        if (it == class_counts.end()) return 0;
        auto jt = it->second.find(c);
        return jt == it->second.end() ? Integer(0) : jt->second;
    };
    bool rec_ok = true;
    for (unsigned n3 = 0; n3 <= total; n3 += 3) {
        for (unsigned m2 = 0; n3 + m2 <= total; m2 += 2) {
            if (m2 >= 2 &&
                cls_count(WordClass::A, n3, m2) != cls_count(WordClass::B, n3, m2 - 2) +
                                                       cls_count(WordClass::D, n3, m2 - 2) +
                                                       cls_count(WordClass::E, n3, m2 - 2))
                rec_ok = false;
            Integer b_expect = 0, c_expect = 0, d_expect = 0, e_expect = 0, f_expect = 0,
                    g_expect = 0;
            for (unsigned k = 1; 3 * k <= n3; ++k) {
                b_expect += Integer(3 * k - 1) * cls_count(WordClass::A, n3 - 3 * k, m2);
                c_expect += 2 * cls_count(WordClass::A, n3 - 3 * k, m2);
                e_expect += Integer(3 * k) * borders.sbsu.pair_count(n3 - 3 * k, m2);
            }
            for (unsigned k = 0; 3 * k <= n3; ++k) {
                d_expect += Integer(3 * k + 1) * borders.usbsu.pair_count(n3 - 3 * k, m2);
                f_expect += 2 * borders.sbsu.pair_count(n3 - 3 * k, m2);
                g_expect += 2 * borders.usbsu.pair_count(n3 - 3 * k, m2);
            }
            if (m2 >= 2 && cls_count(WordClass::B, n3, m2) != b_expect) rec_ok = false;
            if (m2 == 0 && n3 > 0 && cls_count(WordClass::B, n3, m2) != 1) rec_ok = false;
            if (cls_count(WordClass::C, n3, m2) != c_expect) rec_ok = false;
            if (cls_count(WordClass::D, n3, m2) != d_expect) rec_ok = false;
            if (cls_count(WordClass::E, n3, m2) != e_expect) rec_ok = false;
            if (cls_count(WordClass::F, n3, m2) != f_expect) rec_ok = false;
            if (cls_count(WordClass::G, n3, m2) != g_expect) rec_ok = false;
        }
    }
    check(report, "class counts satisfy their recurrences, total <= " + std::to_string(total),
          rec_ok);

    // Splitting off primitive S-bordered words: at (9,4) exactly one of the
    // seven S-bordered words is composite.
    bool split_ok = borders.primitive_a.pair_count(9, 4) == 6 &&
                    cls_count(WordClass::A, 9, 4) == 7;
    check(report, "at (9,4): 7 S-bordered words, 6 primitive", split_ok);

    // Identity words of prime length split into rotation orbits of full size.
    bool orbits_ok = true;
    for (unsigned p : {5u, 7u, 11u, 13u}) {
        if (p > total) continue;
        std::set<std::string> remaining;
        std::vector<Letter> letters;
        auto rec = [&](auto&& self, const ProjectiveMatrix& m) -> void {
            if (letters.size() == p) {
                if (m.is_identity()) remaining.insert(Word{letters}.str());
                return;
            }
            for (Letter l : {Letter::U, Letter::S}) {
                letters.push_back(l);
                self(self, multiply(m, letter_matrix(l)));
                letters.pop_back();
            }
        };
        rec(rec, ProjectiveMatrix::identity());
        while (!remaining.empty()) {
            Word w = Word::parse(*remaining.begin());
            std::set<std::string> orbit;
            for (const Word& r : rotations(w)) {
                if (!is_identity(r)) orbits_ok = false;
                orbit.insert(r.str());
            }
            if (orbit.size() != p) orbits_ok = false;
            for (const std::string& s : orbit) remaining.erase(s);
        }
    }
    check(report, "identity words of prime length form full rotation orbits", orbits_ok);

    // Series against brute force.
    ClassSeries cs = class_series(total + 1);
    BiSeries w_series = solve_W(total + 1);
    BiSeries qhat_series = assemble_Q_hat(total + 1);
    BiSeries q_series = assemble_Q(std::min(total, 16u) + 1);
    bool series_ok = true;
    for (unsigned u = 0; u <= total; u += 3) {
        for (unsigned s = 0; u + s <= total; s += 2) {
            if (Rational(borders.primitive_a.pair_count(u, s)) != w_series.coefficient(u, s))
                series_ok = false;
            if (Rational(borders.usbsu.pair_count(u, s)) != cs.usbsu.coefficient(u, s))
                series_ok = false;
            if (Rational(borders.sbsu.pair_count(u, s)) != cs.sbsu.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::A, u, s)) != cs.a.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::B, u, s)) != cs.b.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::C, u, s)) != cs.c.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::D, u, s)) != cs.d.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::E, u, s)) != cs.e.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::F, u, s)) != cs.f.coefficient(u, s))
                series_ok = false;
            if (Rational(cls_count(WordClass::G, u, s)) != cs.g.coefficient(u, s))
                series_ok = false;
            if (Rational(qhat_table.pair_count(u, s)) != qhat_series.coefficient(u, s))
                series_ok = false;
            if (u + s <= std::min(total, 16u) &&
                Rational(q_table.pair_count(u, s)) != q_series.coefficient(u, s))
                series_ok = false;
        }
    }
    check(report, "class and count series match brute force, total <= " + std::to_string(total),
          series_ok);

    // The two solution paths for Z agree, and Z matches W under the
    // substitution x -> x/(1-x^2), y -> x.
    UniSeries z_newton = solve_Z(200);
    UniSeries z_steps = solve_Z_stepwise(200);
    check(report, "both Z iterations agree to order 200", z_newton == z_steps);

    BiSeries w60 = solve_W(60);
    check(report, "Z equals W after the diagonal substitution, order 60",
          solve_Z(60) == w_to_z(w60));

    BiSeries w_sub = solve_W_by_substitution(21);
    check(report, "both W iterations agree to order 21", w_sub == solve_W(21));

    UniSeries t100 = assemble_T(100);
    UniSeries tfrak = primitive_series(t100);
    check(report, "1/(1 - tfrak series) reproduces T",
          invert(UniSeries::one(100) - tfrak) == t100);

    return report;
}

}  // namespace modgroup
