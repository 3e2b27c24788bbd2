/* palinpair.h - C API for the palinpair digit-arithmetic library.
 *
 * All functions return pp_status; PP_OK means success. On failure the
 * thread-local message from pp_last_error() describes the problem.
 * Objects are opaque handles released with their _free function; strings
 * returned through char** are released with pp_string_free().
 */
#ifndef PALINPAIR_H
#define PALINPAIR_H

#include <stdint.h>

#if defined(_WIN32)
#define PP_API __declspec(dllexport)
#else
#define PP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
    PP_OK = 0,
    PP_ERR_INVALID_ARGUMENT = 1,
    PP_ERR_INVALID_DIGIT = 2,
    PP_ERR_EMPTY_INPUT = 3,
    PP_ERR_BASE_MISMATCH = 4,
    PP_ERR_PRECONDITION = 5,
    PP_ERR_VERIFICATION = 6,
    PP_ERR_IO = 7,
    PP_ERR_DIGEST_MISMATCH = 8,
    PP_ERR_PARSE = 9,
    PP_ERR_UNKNOWN_KIND = 10,
    PP_ERR_INTERNAL = 11,
} pp_status;

typedef struct pp_numeral pp_numeral;

PP_API const char* pp_status_name(pp_status status);
PP_API const char* pp_last_error(void);
PP_API void pp_string_free(char* s);

/* ---- numerals ---- */

PP_API pp_status pp_numeral_parse(const char* text, uint32_t base, pp_numeral** out);
PP_API pp_status pp_numeral_from_u64(uint64_t value, uint32_t base, pp_numeral** out);
PP_API void pp_numeral_free(pp_numeral* n);
PP_API pp_status pp_numeral_render(const pp_numeral* n, char** out);
PP_API pp_status pp_numeral_reverse(const pp_numeral* n, pp_numeral** out);
PP_API pp_status pp_numeral_multiply(const pp_numeral* a, const pp_numeral* b, pp_numeral** out);
PP_API pp_status pp_numeral_add(const pp_numeral* a, const pp_numeral* b, pp_numeral** out);
PP_API pp_status pp_numeral_is_palindrome(const pp_numeral* n, int* out);
PP_API pp_status pp_numeral_max_digit(const pp_numeral* n, uint32_t* out);
PP_API pp_status pp_numeral_digit_sum(const pp_numeral* n, uint64_t* out);
PP_API pp_status pp_numeral_digit_square_sum(const pp_numeral* n, uint64_t* out);
/* -1 / 0 / 1 for value(a) < = > value(b); same base required. */
PP_API pp_status pp_numeral_compare(const pp_numeral* a, const pp_numeral* b, int* out);

/* ---- pair predicates ---- */

typedef struct pp_pair_verdict {
    int polynomial;
    int palindromic;
    int additive;
    /* valid only when polynomial == 0 */
    uint64_t first_carry_position;
    uint64_t witness_coefficient;
} pp_pair_verdict;

PP_API pp_status pp_pair_check(const pp_numeral* a, const pp_numeral* b, pp_pair_verdict* out);
/* Multi-line dump of the schoolbook carry recurrence for a*b. */
PP_API pp_status pp_carry_trace_text(const pp_numeral* a, const pp_numeral* b, char** out);

/* ---- scans ---- */

typedef enum pp_scan_kind {
    PP_SCAN_PALINDROMIC_NONPOLYNOMIAL = 0, /* Table 1 */
    PP_SCAN_POLYNOMIAL_NONPALINDROME = 1,  /* Table 2 */
    PP_SCAN_CONJECTURE_MAIN = 2,
    PP_SCAN_REVERSAL_MULT = 3,
} pp_scan_kind;

typedef enum pp_format { PP_FORMAT_CSV = 0, PP_FORMAT_JSONL = 1 } pp_format;

typedef struct pp_scan_config {
    pp_scan_kind kind;
    uint32_t base;
    uint64_t bound;
    int workers;                 /* >= 1 */
    pp_format format;
    const char* checkpoint_path; /* NULL: no checkpointing */
    uint64_t stop_after_cursor;  /* 0: run to completion */
} pp_scan_config;

typedef struct pp_scan_summary {
    uint64_t record_count;
    uint64_t counterexample_count;
    int completed;
    uint64_t cursor;
} pp_scan_summary;

PP_API pp_status pp_scan_run(const pp_scan_config* config, char** records_out,
                             pp_scan_summary* summary_out);
PP_API pp_status pp_scan_resume(const char* checkpoint_path, int workers, pp_format format,
                                char** records_out, pp_scan_summary* summary_out);

/* ---- constructions ---- */

/* Text report: R(2^n), its factors, the split count formula M, every split. */
PP_API pp_status pp_repunit_report(uint32_t n, uint32_t base, char** out);

/* family: "base2-eq3" | "r-squared-minus-1" | "four-k-minus-1" | "four-k-plus-1".
 * param is l, r, or k respectively; variant ("2l-1" / "2l+1") applies to
 * base2-eq3 only and may be NULL. Emits one record line (with header for CSV). */
PP_API pp_status pp_family_generate(const char* family, uint64_t param, uint64_t j,
                                    const char* variant, pp_format format, char** record_out);

PP_API pp_status pp_base_condition_check(uint32_t base, int* out);

/* ---- OEIS bridge ---- */

/* kind: "a062936" | "a002778" | "a002779" | "a156317". Returns the diff
 * report as JSONL lines, one {index, expected, actual, status} per diff. */
PP_API pp_status pp_oeis_crosscheck(const char* bfile_path, const char* kind, uint64_t bound,
                                    char** diff_out, uint64_t* diff_count);

#ifdef __cplusplus
}
#endif

#endif /* PALINPAIR_H */
