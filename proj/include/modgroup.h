/* C interface to the modular-group word-counting toolkit.
 *
 * All functions return mg_status; results come back through out
 * parameters.  Strings and sequence handles returned by the library are
 * owned by the caller and released with mg_string_free / mg_sequence_free.
 * Words are NUL-terminated strings over the characters 'U' and 'S'.
 */
#ifndef MODGROUP_H
#define MODGROUP_H

#include <stddef.h>
#include <stdint.h>

#if defined(MODGROUP_BUILD) && defined(__GNUC__)
#define MG_API __attribute__((visibility("default")))
#else
#define MG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
    MG_OK = 0,
    MG_ERROR_ARGUMENT = 1,    /* malformed input (bad letters, null pointers) */
    MG_ERROR_DOMAIN = 2,      /* value outside an operation's domain */
    MG_ERROR_BUDGET = 3,      /* exhaustive search would exceed its budget */
    MG_ERROR_UNSUPPORTED = 4, /* method not available for this sequence */
    MG_ERROR_INTERNAL = 5,
} mg_status;

MG_API const char* mg_status_message(mg_status status);
MG_API const char* mg_version(void);
MG_API void mg_string_free(char* s);

/* -------- word predicates -------- */

/* Matrix route: evaluates the word in the group. */
MG_API mg_status mg_word_is_identity(const char* word, int* result);
/* Pushdown-automaton route; always agrees with the matrix route. */
MG_API mg_status mg_pda_accepts(const char* word, int* result);
/* Nonempty identity word whose proper prefixes all avoid the identity. */
MG_API mg_status mg_word_is_primitive(const char* word, int* result);
/* Free-product normal form (factors SS and UUU removed). */
MG_API mg_status mg_word_normal_form(const char* word, char** result);

/* -------- sequences -------- */

typedef struct mg_sequence mg_sequence;

typedef enum mg_sequence_kind {
    MG_SEQ_IDENTITY_WORDS = 0,  /* t(n), one row per length */
    MG_SEQ_PRIMITIVE_WORDS = 1, /* primitive counts, one row per length */
    MG_SEQ_BIVARIATE = 2,       /* q(n,m), rows indexed by (#U, #S) */
    MG_SEQ_REDUCED_WORDS = 3,   /* reduced-word identity counts */
} mg_sequence_kind;

typedef enum mg_count_method {
    MG_METHOD_BRUTE = 0,  /* exhaustive matrix products */
    MG_METHOD_PDA = 1,    /* exhaustive automaton runs */
    MG_METHOD_SERIES = 2, /* exact power-series coefficients */
} mg_count_method;

/* Computes all rows with index (or total length) up to max_index.  budget
 * bounds the exhaustive methods; pass 0 for the defaults (24 letters, 14
 * for reduced words).  The series method ignores the budget and accepts
 * max_index up to 4000. */
MG_API mg_status mg_sequence_compute(mg_sequence_kind kind, mg_count_method method,
                                     uint32_t max_index, uint32_t budget, mg_sequence** out);
MG_API size_t mg_sequence_rows(const mg_sequence* seq);
/* 1 for per-length sequences, 2 for the bivariate table. */
MG_API size_t mg_sequence_index_count(const mg_sequence* seq);
MG_API mg_status mg_sequence_index(const mg_sequence* seq, size_t row, size_t which,
                                   uint32_t* out);
/* Decimal value of the row; exact at any size. */
MG_API mg_status mg_sequence_value(const mg_sequence* seq, size_t row, char** out);
MG_API void mg_sequence_free(mg_sequence* seq);

/* -------- verification suites -------- */

typedef enum mg_verify_suite {
    MG_VERIFY_ORACLES = 0,
    MG_VERIFY_CUBIC = 1,
    MG_VERIFY_CONGRUENCE = 2,
    MG_VERIFY_PROPS = 3,
} mg_verify_suite;

/* Any field left 0 uses the built-in default. */
typedef struct mg_verify_limits {
    uint32_t max_len;    /* word length for oracle sweeps (default 14) */
    uint32_t t_order;    /* T cubic residual order (default 300) */
    uint32_t q_order;    /* Q cubic residual order (default 30) */
    uint32_t k_order;    /* grammar cubic residual order (default 24) */
    uint32_t prime_max;  /* congruence sweep bound (default 499) */
    uint32_t props_total;/* counting-check total degree (default 18) */
} mg_verify_limits;

/* Runs a suite; *all_passed is 1 iff every check passed, and *report (if
 * non-null) receives the per-check text. */
MG_API mg_status mg_verify_run(mg_verify_suite suite, const mg_verify_limits* limits,
                               int* all_passed, char** report);

/* -------- Cayley graph -------- */

/* DOT digraph of the group elements reachable by words of length <= depth
 * (depth at most 12), edges labeled U/S. */
MG_API mg_status mg_cayley_dot(uint32_t depth, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MODGROUP_H */
