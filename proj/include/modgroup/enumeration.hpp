#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modgroup/words.hpp"

namespace modgroup {

// Thrown when an exhaustive search would exceed the configured budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    // Maximum word length for walks over the {U,S} binary tree (2^n leaves).
    unsigned budget = 24;
    // Maximum length for the reduced-word tree over four letters (4*3^(n-1)
    // leaves), which grows much faster.
    unsigned reduced_budget = 14;
    // Worker count; counts are summed over prefix blocks in a fixed order,
    // so results do not depend on the thread count.
    unsigned threads = 1;
    // Prefix depth for the parallel split (2^split_depth blocks).
    unsigned split_depth = 8;
};

// Exact counts indexed by word length and by (U-count, S-count) pairs.
class CountTable {
public:
    const mpz_class& length_count(unsigned n) const;
    const mpz_class& pair_count(unsigned u, unsigned s) const;

    void add_length(unsigned n, const mpz_class& v);
    void add_pair(unsigned u, unsigned s, const mpz_class& v);

    const std::map<unsigned, mpz_class>& by_length() const { return by_length_; }
    const std::map<std::pair<unsigned, unsigned>, mpz_class>& by_pair() const {
        return by_pair_;
    }

private:
    std::map<unsigned, mpz_class> by_length_;
    std::map<std::pair<unsigned, unsigned>, mpz_class> by_pair_;
};

// Number of length-n identity words, by depth-first traversal of the binary
// word tree with incremental running products.
mpz_class count_identity(unsigned n, const EnumerationOptions& opts = {});
std::vector<mpz_class> count_identity_upto(unsigned max, const EnumerationOptions& opts = {});

// Number of length-n primitive identity words (nonempty, no proper nonempty
// prefix equal to the identity).
mpz_class count_primitive(unsigned n, const EnumerationOptions& opts = {});
std::vector<mpz_class> count_primitive_upto(unsigned max, const EnumerationOptions& opts = {});

// Identity-word counts by (U-count, S-count) for all pairs with total
// length <= max_total; by_length holds the per-length sums.
CountTable count_bivariate(unsigned max_total, const EnumerationOptions& opts = {});

// Same restricted to words with no two consecutive S letters.
CountTable count_no_ss(unsigned max_total, const EnumerationOptions& opts = {});

// Disjoint classes of the SS-free identity words, decided by the border
// shape after stripping the maximal U-powers U^alpha (left) and U^beta
// (right):
//   - empty word                                  -> Unit
//   - pure U-power                                -> B
//   - alpha = beta = 0 (S on both borders)        -> A
//   - alpha, beta > 0, (alpha+beta) % 3 = 0/2/1   -> B/D/E
//   - exactly one of alpha, beta > 0, its value
//     mod 3 = 0/1/2                               -> C/F/G
// Words that are not SS-free identity words map to None.
enum class WordClass { A, B, C, D, E, F, G, Unit, None };

WordClass classify(const Word& w);

// Counts of three special families of SS-free identity words, by pair:
//   usbsu       - border shape U S ... S U (single U on each border)
//   sbsu        - border shape S ... S U (starts with S, single trailing U)
//   primitive_a - S-bordered words with no decomposition into two or more
//                 S-bordered identity words separated by nonempty U-powers
struct BorderCounts {
    CountTable usbsu;
    CountTable sbsu;
    CountTable primitive_a;
};

BorderCounts count_special(unsigned max_total, const EnumerationOptions& opts = {});

// Whether an S-bordered SS-free identity word splits as A1 U^a1 A2 ... As
// with s >= 2, every Ai an S-bordered identity word and every a_i >= 1.
bool splits_into_smaller_a_words(const Word& w);

// Number of reduced words of length n over {U, U^-1, S, S^-1} (no letter
// adjacent to its formal inverse) that equal the identity in the group.
mpz_class count_reduced_identity(unsigned n, const EnumerationOptions& opts = {});
std::vector<mpz_class> count_reduced_identity_upto(unsigned max,
                                                   const EnumerationOptions& opts = {});

}  // namespace modgroup
