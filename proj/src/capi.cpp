#include "modgroup.h"

#include <array>
#include <cstring>
#include <exception>
#include <functional>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "modgroup/cayley.hpp"
#include "modgroup/enumeration.hpp"
#include "modgroup/matrices.hpp"
#include "modgroup/pda.hpp"
#include "modgroup/solver.hpp"
#include "modgroup/verify.hpp"

using namespace modgroup;

// One row of a computed sequence: up to two indices plus an exact value.
struct mg_sequence {
    size_t index_count = 1;
    std::vector<std::array<uint32_t, 2>> indices;
    std::vector<mpz_class> values;
};

namespace {

constexpr uint32_t kSeriesMaxIndex = 4000;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mg_status run_guarded(const std::function<mg_status()>& body) {
    try {
        return body();
    } catch (const budget_error&) {
        return MG_ERROR_BUDGET;
    } catch (const std::invalid_argument&) {
        return MG_ERROR_ARGUMENT;
    } catch (const std::domain_error&) {
        return MG_ERROR_DOMAIN;
    } catch (const std::bad_alloc&) {
        return MG_ERROR_INTERNAL;
    } catch (const std::exception&) {
        return MG_ERROR_INTERNAL;
    }
}

mg_status parse_word(const char* word, Word& out) {
    if (!word) return MG_ERROR_ARGUMENT;
    out = Word::parse(word);
    return MG_OK;
}

EnumerationOptions options_with_budget(uint32_t budget) {
    EnumerationOptions opts;
    if (budget != 0) {
        opts.budget = budget;
        opts.reduced_budget = budget;
    }
    return opts;
}

void fill_lengths(mg_sequence& seq, const std::vector<mpz_class>& values) {
    seq.index_count = 1;
    for (uint32_t n = 0; n < values.size(); ++n) {
        seq.indices.push_back({n, 0});
        seq.values.push_back(values[n]);
    }
}

// Bivariate rows: the lattice pairs (3a, 2b) with total <= max, in graded
// order, matching the support of the counts.
void fill_pairs(mg_sequence& seq, uint32_t max,
                const std::function<mpz_class(unsigned, unsigned)>& value) {
    seq.index_count = 2;
    for (uint32_t total = 0; total <= max; ++total) {
        for (uint32_t u = 0; u <= total; u += 3) {
            uint32_t s = total - u;
            if (s % 2 != 0) continue;
            seq.indices.push_back({u, s});
            seq.values.push_back(value(u, s));
        }
    }
}

void ensure_walk_budget(uint32_t max_index, const EnumerationOptions& opts) {
    if (max_index > opts.budget || max_index > 62)
        throw budget_error("automaton count exceeds the enumeration budget");
}

// Per-length identity counts with the automaton as the oracle.  With
// prune_at_identity the walk counts only first returns to the bottom
// marker, which is exactly the primitive words.
std::vector<mpz_class> pda_counts_per_length(uint32_t max_index, bool prune_at_identity) {
    std::vector<mpz_class> counts(max_index + 1);
    std::vector<Letter> letters;
    PdaConfiguration c;
    auto rec = [&](auto&& self) -> void {
        if (c.at_bottom() && (!prune_at_identity || !letters.empty())) {
            counts[letters.size()] += 1;
            if (prune_at_identity) return;
        }
        if (letters.size() == max_index) return;
        for (Letter l : {Letter::U, Letter::S}) {
            letters.push_back(l);
            auto undo = c.apply(l);
            self(self);
            c.revert(undo);
            letters.pop_back();
        }
    };
    rec(rec);
    return counts;
}

mg_status compute_sequence(mg_sequence_kind kind, mg_count_method method, uint32_t max_index,
                           uint32_t budget, mg_sequence& seq) {
    EnumerationOptions opts = options_with_budget(budget);
    switch (kind) {
        case MG_SEQ_IDENTITY_WORDS:
            if (method == MG_METHOD_BRUTE) {
                fill_lengths(seq, count_identity_upto(max_index, opts));
            } else if (method == MG_METHOD_PDA) {
                ensure_walk_budget(max_index, opts);
                fill_lengths(seq, pda_counts_per_length(max_index, false));
            } else {
                if (max_index > kSeriesMaxIndex)
                    throw budget_error("series order beyond the supported range");
                fill_lengths(seq, assemble_T(max_index + 1).integer_coefficients());
            }
            return MG_OK;
        case MG_SEQ_PRIMITIVE_WORDS:
            if (method == MG_METHOD_BRUTE) {
                fill_lengths(seq, count_primitive_upto(max_index, opts));
            } else if (method == MG_METHOD_PDA) {
                ensure_walk_budget(max_index, opts);
                fill_lengths(seq, pda_counts_per_length(max_index, true));
            } else {
                if (max_index > kSeriesMaxIndex)
                    throw budget_error("series order beyond the supported range");
                fill_lengths(seq,
                             primitive_series(assemble_T(max_index + 1)).integer_coefficients());
            }
            return MG_OK;
        case MG_SEQ_BIVARIATE:
            if (method == MG_METHOD_BRUTE || method == MG_METHOD_PDA) {
                // Both exhaustive routes share the walk; the automaton route
                // swaps in stack emptiness as the identity test.
                CountTable table;
                if (method == MG_METHOD_BRUTE) {
                    table = count_bivariate(max_index, opts);
                } else {
                    ensure_walk_budget(max_index, opts);
                    std::vector<Letter> letters;
                    PdaConfiguration c;
                    unsigned u_count = 0;
                    auto rec = [&](auto&& self) -> void {
                        if (c.at_bottom())
                            table.add_pair(u_count,
                                           static_cast<unsigned>(letters.size()) - u_count, 1);
                        if (letters.size() == max_index) return;
                        for (Letter l : {Letter::U, Letter::S}) {
                            letters.push_back(l);
                            if (l == Letter::U) ++u_count;
                            auto undo = c.apply(l);
                            self(self);
                            c.revert(undo);
                            if (l == Letter::U) --u_count;
                            letters.pop_back();
                        }
                    };
                    rec(rec);
                }
                fill_pairs(seq, max_index,
                           [&](unsigned u, unsigned s) { return table.pair_count(u, s); });
            } else {
                if (max_index > kSeriesMaxIndex)
                    throw budget_error("series order beyond the supported range");
                BiSeries q = assemble_Q(std::max<uint32_t>(max_index + 1, 6));
                fill_pairs(seq, max_index, [&](unsigned u, unsigned s) {
                    return mpz_class(q.coefficient(u, s).get_num());
                });
            }
            return MG_OK;
        case MG_SEQ_REDUCED_WORDS:
            if (method == MG_METHOD_BRUTE) {
                fill_lengths(seq, count_reduced_identity_upto(max_index, opts));
            } else if (method == MG_METHOD_SERIES) {
                if (max_index > kSeriesMaxIndex)
                    throw budget_error("series order beyond the supported range");
                fill_lengths(seq, cogrowth_series(std::max<uint32_t>(max_index + 1, 2))
                                      .integer_coefficients());
            } else {
                return MG_ERROR_UNSUPPORTED;  // the automaton reads {U,S} only
            }
            if (seq.values.size() > max_index + 1) {
                seq.values.resize(max_index + 1);
                seq.indices.resize(max_index + 1);
            }
            return MG_OK;
    }
    return MG_ERROR_ARGUMENT;
}

}  // namespace

extern "C" {

const char* mg_status_message(mg_status status) {
    switch (status) {
        case MG_OK: return "ok";
        case MG_ERROR_ARGUMENT: return "malformed argument";
        case MG_ERROR_DOMAIN: return "value outside the operation's domain";
        case MG_ERROR_BUDGET: return "enumeration budget exceeded";
        case MG_ERROR_UNSUPPORTED: return "method not supported for this sequence";
        case MG_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* mg_version(void) { return "0.1.0"; }

void mg_string_free(char* s) { ::operator delete(s); }

mg_status mg_word_is_identity(const char* word, int* result) {
    if (!result) return MG_ERROR_ARGUMENT;
    return run_guarded([&] {
        Word w;
        if (mg_status st = parse_word(word, w); st != MG_OK) return st;
        *result = is_identity(w) ? 1 : 0;
        return MG_OK;
    });
}

mg_status mg_pda_accepts(const char* word, int* result) {
    if (!result) return MG_ERROR_ARGUMENT;
    return run_guarded([&] {
        Word w;
        if (mg_status st = parse_word(word, w); st != MG_OK) return st;
        *result = accepts(w) ? 1 : 0;
        return MG_OK;
    });
}

mg_status mg_word_is_primitive(const char* word, int* result) {
    if (!result) return MG_ERROR_ARGUMENT;
    return run_guarded([&] {
        Word w;
        if (mg_status st = parse_word(word, w); st != MG_OK) return st;
        *result = is_primitive_identity(w) ? 1 : 0;
        return MG_OK;
    });
}

mg_status mg_word_normal_form(const char* word, char** result) {
    if (!result) return MG_ERROR_ARGUMENT;
    return run_guarded([&] {
        Word w;
        if (mg_status st = parse_word(word, w); st != MG_OK) return st;
        *result = dup_string(normal_form(w).str());
        return *result ? MG_OK : MG_ERROR_INTERNAL;
    });
}

mg_status mg_sequence_compute(mg_sequence_kind kind, mg_count_method method, uint32_t max_index,
                              uint32_t budget, mg_sequence** out) {
    if (!out) return MG_ERROR_ARGUMENT;
    *out = nullptr;
    return run_guarded([&] {
        auto seq = std::make_unique<mg_sequence>();
        mg_status st = compute_sequence(kind, method, max_index, budget, *seq);
        if (st == MG_OK) *out = seq.release();
        return st;
    });
}

size_t mg_sequence_rows(const mg_sequence* seq) { return seq ? seq->values.size() : 0; }

size_t mg_sequence_index_count(const mg_sequence* seq) { return seq ? seq->index_count : 0; }

mg_status mg_sequence_index(const mg_sequence* seq, size_t row, size_t which, uint32_t* out) {
    if (!seq || !out || row >= seq->indices.size() || which >= seq->index_count)
        return MG_ERROR_ARGUMENT;
    *out = seq->indices[row][which];
    return MG_OK;
}

mg_status mg_sequence_value(const mg_sequence* seq, size_t row, char** out) {
    if (!seq || !out || row >= seq->values.size()) return MG_ERROR_ARGUMENT;
    *out = dup_string(seq->values[row].get_str());
    return *out ? MG_OK : MG_ERROR_INTERNAL;
}

void mg_sequence_free(mg_sequence* seq) { delete seq; }

mg_status mg_verify_run(mg_verify_suite suite, const mg_verify_limits* limits, int* all_passed,
                        char** report) {
    if (!all_passed) return MG_ERROR_ARGUMENT;
    return run_guarded([&] {
        VerifyLimits vl;
        if (limits) {
            if (limits->max_len) vl.max_len = limits->max_len;
            if (limits->t_order) vl.t_order = limits->t_order;
            if (limits->q_order) vl.q_order = limits->q_order;
            if (limits->k_order) vl.k_order = limits->k_order;
            if (limits->prime_max) vl.prime_max = limits->prime_max;
            if (limits->props_total) vl.props_total = limits->props_total;
        }
        VerifyReport r;
        switch (suite) {
            case MG_VERIFY_ORACLES: r = verify_oracles(vl); break;
            case MG_VERIFY_CUBIC: r = verify_cubics(vl); break;
            case MG_VERIFY_CONGRUENCE: r = verify_congruences(vl); break;
            case MG_VERIFY_PROPS: r = verify_props(vl); break;
            default: return MG_ERROR_ARGUMENT;
        }
        *all_passed = r.all_passed() ? 1 : 0;
        if (report) {
            *report = dup_string(r.text());
            if (!*report) return MG_ERROR_INTERNAL;
        }
        return MG_OK;
    });
}

mg_status mg_cayley_dot(uint32_t depth, char** out) {
    if (!out) return MG_ERROR_ARGUMENT;
    return run_guarded([&] {
        if (depth > 12) return MG_ERROR_DOMAIN;
        *out = dup_string(to_dot(cayley_graph(depth)));
        return *out ? MG_OK : MG_ERROR_INTERNAL;
    });
}

}  // extern "C"
