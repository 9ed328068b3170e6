#include "modgroup/enumeration.hpp"

#include <cstdint>
#include <thread>

#include "modgroup/matrices.hpp"

namespace modgroup {

namespace {

// Small fixed-width matrix for tree walks.  Entries of letter-matrix
// products grow slower than 1.62^length, so int64 is safe for every length
// the budgets allow.
struct Mat64 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    Mat64 times_u() const { return {-b, a + b, -d, c + d}; }
    Mat64 times_s() const { return {-b, a, -d, c}; }
    Mat64 times_u_inv() const { return {a + b, -a, c + d, -c}; }
    Mat64 times_s_inv() const { return {b, -a, d, -c}; }

    bool is_pm_identity() const { return b == 0 && c == 0 && a == d && (a == 1 || a == -1); }

    Mat64 normalized() const {
        for (std::int64_t e : {a, b, c, d}) {
            if (e > 0) return *this;
            if (e < 0) return {-a, -b, -c, -d};
        }
        return *this;
    }

    friend bool operator==(const Mat64&, const Mat64&) = default;
};

constexpr unsigned kHardBudgetCap = 62;

void check_budget(unsigned requested, unsigned budget, const char* what) {
    if (requested > budget || requested > kHardBudgetCap)
        throw budget_error(std::string(what) + ": length " + std::to_string(requested) +
                           " exceeds the enumeration budget of " +
                           std::to_string(std::min(budget, kHardBudgetCap)));
}

// Counts +-identity nodes per depth in the subtree below m.
void walk_all(const Mat64& m, unsigned depth, unsigned max, std::vector<std::uint64_t>& acc) {
    if (m.is_pm_identity()) ++acc[depth];
    if (depth == max) return;
    walk_all(m.times_u(), depth + 1, max, acc);
    walk_all(m.times_s(), depth + 1, max, acc);
}

// As walk_all, but prunes below the first identity on a path (counts only
// first returns, which is exactly primitivity).
void walk_primitive(const Mat64& m, unsigned depth, unsigned max,
                    std::vector<std::uint64_t>& acc) {
    if (depth > 0 && m.is_pm_identity()) {
        ++acc[depth];
        return;
    }
    if (depth == max) return;
    walk_primitive(m.times_u(), depth + 1, max, acc);
    walk_primitive(m.times_s(), depth + 1, max, acc);
}

// Collects the depth-d frontier (prefix products) instead of descending.
// Frontier nodes are counted by the block walks, not here.  With prune set,
// identity prefixes above the frontier are counted and not extended,
// mirroring walk_primitive.
void collect_frontier(const Mat64& m, unsigned depth, unsigned split, bool prune,
                      std::vector<std::uint64_t>& acc, std::vector<Mat64>& frontier) {
    if (depth == split) {
        frontier.push_back(m);
        return;
    }
    if (m.is_pm_identity() && (!prune || depth > 0)) {
        ++acc[depth];
        if (prune) return;
    }
    collect_frontier(m.times_u(), depth + 1, split, prune, acc, frontier);
    collect_frontier(m.times_s(), depth + 1, split, prune, acc, frontier);
}

std::vector<std::uint64_t> counts_per_length(unsigned max, const EnumerationOptions& opts,
                                             bool prune) {
    std::vector<std::uint64_t> acc(max + 1, 0);
    auto walk = prune ? walk_primitive : walk_all;
    if (opts.threads <= 1 || max <= opts.split_depth + 1) {
        walk(Mat64{}, 0, max, acc);
        return acc;
    }

    unsigned split = std::min(opts.split_depth, max - 1);
    std::vector<Mat64> frontier;
    frontier.reserve(1u << split);
    collect_frontier(Mat64{}, 0, split, prune, acc, frontier);
    // Frontier nodes themselves are at depth `split` and have not been
    // counted yet; the block walks below start there.
    std::vector<std::vector<std::uint64_t>> partial(
        opts.threads, std::vector<std::uint64_t>(max + 1, 0));
    std::vector<std::thread> workers;
    workers.reserve(opts.threads);
    for (unsigned t = 0; t < opts.threads; ++t) {
        workers.emplace_back([&, t] {
            for (std::size_t i = t; i < frontier.size(); i += opts.threads)
                walk(frontier[i], split, max, partial[t]);
        });
    }
    for (auto& th : workers) th.join();
    for (const auto& p : partial)
        for (unsigned i = 0; i <= max; ++i) acc[i] += p[i];
    return acc;
}

std::vector<mpz_class> to_mpz(const std::vector<std::uint64_t>& v) {
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (std::uint64_t x : v) out.emplace_back(static_cast<unsigned long>(x));
    return out;
}

unsigned leading_u_run(const Word& w) {
    unsigned n = 0;
    while (n < w.length() && w.at(n) == Letter::U) ++n;
    return n;
}

unsigned trailing_u_run(const Word& w) {
    unsigned n = 0;
    while (n < w.length() && w.at(w.length() - 1 - n) == Letter::U) ++n;
    return n;
}

}  // namespace

const mpz_class& CountTable::length_count(unsigned n) const {
    static const mpz_class zero = 0;
    auto it = by_length_.find(n);
    return it == by_length_.end() ? zero : it->second;
}

const mpz_class& CountTable::pair_count(unsigned u, unsigned s) const {
    static const mpz_class zero = 0;
    auto it = by_pair_.find({u, s});
    return it == by_pair_.end() ? zero : it->second;
}

void CountTable::add_length(unsigned n, const mpz_class& v) { by_length_[n] += v; }

void CountTable::add_pair(unsigned u, unsigned s, const mpz_class& v) {
    by_pair_[{u, s}] += v;
    by_length_[u + s] += v;
}

mpz_class count_identity(unsigned n, const EnumerationOptions& opts) {
    check_budget(n, opts.budget, "count_identity");
    return to_mpz(counts_per_length(n, opts, false)).back();
}

std::vector<mpz_class> count_identity_upto(unsigned max, const EnumerationOptions& opts) {
    check_budget(max, opts.budget, "count_identity_upto");
    return to_mpz(counts_per_length(max, opts, false));
}

mpz_class count_primitive(unsigned n, const EnumerationOptions& opts) {
    check_budget(n, opts.budget, "count_primitive");
    return to_mpz(counts_per_length(n, opts, true)).back();
}

std::vector<mpz_class> count_primitive_upto(unsigned max, const EnumerationOptions& opts) {
    check_budget(max, opts.budget, "count_primitive_upto");
    return to_mpz(counts_per_length(max, opts, true));
}

namespace {

void walk_pairs(const Mat64& m, unsigned u, unsigned s, unsigned left, bool forbid_ss,
                bool last_was_s, std::vector<std::vector<std::uint64_t>>& acc) {
    if (m.is_pm_identity()) ++acc[u][s];
    if (left == 0) return;
    walk_pairs(m.times_u(), u + 1, s, left - 1, forbid_ss, false, acc);
    if (!(forbid_ss && last_was_s))
        walk_pairs(m.times_s(), u, s + 1, left - 1, forbid_ss, true, acc);
}

CountTable pairs_to_table(const std::vector<std::vector<std::uint64_t>>& acc) {
    CountTable t;
    for (unsigned u = 0; u < acc.size(); ++u)
        for (unsigned s = 0; s < acc[u].size(); ++s)
            if (acc[u][s] != 0)
                t.add_pair(u, s, mpz_class(static_cast<unsigned long>(acc[u][s])));
    return t;
}

}  // namespace

CountTable count_bivariate(unsigned max_total, const EnumerationOptions& opts) {
    check_budget(max_total, opts.budget, "count_bivariate");
    std::vector<std::vector<std::uint64_t>> acc(max_total + 1,
                                                std::vector<std::uint64_t>(max_total + 1, 0));
    walk_pairs(Mat64{}, 0, 0, max_total, false, false, acc);
    return pairs_to_table(acc);
}

CountTable count_no_ss(unsigned max_total, const EnumerationOptions& opts) {
    check_budget(max_total, opts.budget, "count_no_ss");
    std::vector<std::vector<std::uint64_t>> acc(max_total + 1,
                                                std::vector<std::uint64_t>(max_total + 1, 0));
    walk_pairs(Mat64{}, 0, 0, max_total, true, false, acc);
    return pairs_to_table(acc);
}

WordClass classify(const Word& w) {
    if (w.empty()) return WordClass::Unit;
    if (w.contains_ss() || !is_identity(w)) return WordClass::None;
    unsigned alpha = leading_u_run(w);
    if (alpha == w.length()) return WordClass::B;
    unsigned beta = trailing_u_run(w);
    if (alpha == 0 && beta == 0) return WordClass::A;
    if (alpha > 0 && beta > 0) {
        switch ((alpha + beta) % 3) {
            case 0: return WordClass::B;
            case 2: return WordClass::D;
            default: return WordClass::E;
        }
    }
    switch ((alpha + beta) % 3) {
        case 0: return WordClass::C;
        case 1: return WordClass::F;
        default: return WordClass::G;
    }
}

bool splits_into_smaller_a_words(const Word& w) {
    const std::size_t len = w.length();
    if (len < 2) return false;

    // Normalized prefix products; the factor w[i..j) is an identity word
    // exactly when pre[i] == pre[j].
    std::vector<Mat64> pre(len + 1);
    for (std::size_t i = 0; i < len; ++i) {
        Mat64 raw = w.at(i) == Letter::U ? pre[i].times_u() : pre[i].times_s();
        pre[i + 1] = raw.normalized();
    }
    auto is_a_block = [&](std::size_t i, std::size_t j) {
        return j - i >= 2 && w.at(i) == Letter::S && w.at(j - 1) == Letter::S &&
               pre[i] == pre[j];
    };

    std::vector<unsigned> u_run(len + 1, 0);
    for (std::size_t i = len; i-- > 0;)
        u_run[i] = w.at(i) == Letter::U ? u_run[i + 1] + 1 : 0;

    // reach_multi[j]: prefix w[0..j) is A1 U^a1 ... Ak with k >= 2.
    std::vector<char> reach_multi(len + 1, 0);
    for (std::size_t i = 1; i < len; ++i) {
        if (!is_a_block(0, i) && !reach_multi[i]) continue;
        for (unsigned g = 1; g <= u_run[i]; ++g) {
            std::size_t k = i + g;
            for (std::size_t j = k + 2; j <= len; ++j)
                if (is_a_block(k, j)) reach_multi[j] = 1;
        }
    }
    return reach_multi[len] != 0;
}

namespace {

void walk_special(const Mat64& m, std::vector<Letter>& letters, unsigned left, BorderCounts& out) {
    if (m.is_pm_identity() && !letters.empty()) {
        Word w{letters};
        const std::size_t len = letters.size();
        unsigned u = static_cast<unsigned>(w.count(Letter::U));
        unsigned s = static_cast<unsigned>(len - u);
        if (len >= 5 && letters[0] == Letter::U && letters[1] == Letter::S &&
            letters[len - 2] == Letter::S && letters[len - 1] == Letter::U)
            out.usbsu.add_pair(u, s, 1);
        if (len >= 4 && letters[0] == Letter::S && letters[len - 1] == Letter::U &&
            letters[len - 2] == Letter::S)
            out.sbsu.add_pair(u, s, 1);
        if (letters.front() == Letter::S && letters.back() == Letter::S &&
            !splits_into_smaller_a_words(w))
            out.primitive_a.add_pair(u, s, 1);
    }
    if (left == 0) return;
    letters.push_back(Letter::U);
    walk_special(m.times_u(), letters, left - 1, out);
    letters.pop_back();
    if (letters.empty() || letters.back() != Letter::S) {
        letters.push_back(Letter::S);
        walk_special(m.times_s(), letters, left - 1, out);
        letters.pop_back();
    }
}

}  // namespace

BorderCounts count_special(unsigned max_total, const EnumerationOptions& opts) {
    check_budget(max_total, opts.budget, "count_special");
    BorderCounts out;
    std::vector<Letter> letters;
    letters.reserve(max_total);
    walk_special(Mat64{}, letters, max_total, out);
    return out;
}

namespace {

// Letters 0..3 = U, U^-1, S, S^-1; a reduced word never places a letter
// next to its formal inverse.
constexpr int kInverse[4] = {1, 0, 3, 2};

void walk_reduced(const Mat64& m, int last, unsigned left, unsigned depth,
                  std::vector<std::uint64_t>& acc) {
    if (m.is_pm_identity()) ++acc[depth];
    if (left == 0) return;
    for (int l = 0; l < 4; ++l) {
        if (last >= 0 && l == kInverse[last]) continue;
        Mat64 next = l == 0   ? m.times_u()
                     : l == 1 ? m.times_u_inv()
                     : l == 2 ? m.times_s()
                              : m.times_s_inv();
        walk_reduced(next, l, left - 1, depth + 1, acc);
    }
}

void check_reduced_budget(unsigned requested, unsigned budget) {
    if (requested > budget || requested > 38)
        throw budget_error("count_reduced_identity: length " + std::to_string(requested) +
                           " exceeds the reduced-word budget of " +
                           std::to_string(std::min(budget, 38u)));
}

}  // namespace

mpz_class count_reduced_identity(unsigned n, const EnumerationOptions& opts) {
    check_reduced_budget(n, opts.reduced_budget);
    std::vector<std::uint64_t> acc(n + 1, 0);
    walk_reduced(Mat64{}, -1, n, 0, acc);
    return mpz_class(static_cast<unsigned long>(acc[n]));
}

std::vector<mpz_class> count_reduced_identity_upto(unsigned max, const EnumerationOptions& opts) {
    check_reduced_budget(max, opts.reduced_budget);
    std::vector<std::uint64_t> acc(max + 1, 0);
    walk_reduced(Mat64{}, -1, max, 0, acc);
    return to_mpz(acc);
}

}  // namespace modgroup
