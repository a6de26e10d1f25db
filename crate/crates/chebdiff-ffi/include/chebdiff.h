#ifndef CHEBDIFF_H
#define CHEBDIFF_H

/* Generated by cbindgen from crates/chebdiff-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function in this ABI.
 */
typedef enum ChebdiffStatus {
  CHEBDIFF_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  CHEBDIFF_STATUS_NULL_POINTER = 1,
  /**
   * An argument was outside the documented domain of the operation.
   */
  CHEBDIFF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Operator and expansion live in different Chebyshev families.
   */
  CHEBDIFF_STATUS_BASIS_MISMATCH = 3,
  /**
   * An expansion's degree exceeds the operator's bound.
   */
  CHEBDIFF_STATUS_DEGREE_OVERFLOW = 4,
  /**
   * A string argument was not valid UTF-8 or did not parse.
   */
  CHEBDIFF_STATUS_PARSE_ERROR = 5,
  /**
   * The two derivative paths disagreed during a bench run.
   */
  CHEBDIFF_STATUS_BENCH_MISMATCH = 6,
  /**
   * An internal panic was caught at the boundary.
   */
  CHEBDIFF_STATUS_PANIC = 7,
} ChebdiffStatus;

/**
 * Chebyshev family selector.
 */
typedef enum ChebdiffBasis {
  /**
   * First kind (T).
   */
  CHEBDIFF_BASIS_FIRST_KIND = 0,
  /**
   * Second kind (U).
   */
  CHEBDIFF_BASIS_SECOND_KIND = 1,
} ChebdiffBasis;

/**
 * Verification sweep selector.
 */
typedef enum ChebdiffSuite {
  CHEBDIFF_SUITE_U_EXPLICIT = 0,
  CHEBDIFF_SUITE_T_EXPLICIT = 1,
  CHEBDIFF_SUITE_INVERSION = 2,
  CHEBDIFF_SUITE_INNER_SUM = 3,
  CHEBDIFF_SUITE_TRIPLE_SUM = 4,
} ChebdiffSuite;

/**
 * Opaque Chebyshev-basis expansion.
 */
typedef struct ChebdiffExpansion ChebdiffExpansion;

/**
 * Opaque differentiation matrix.
 */
typedef struct ChebdiffMatrix ChebdiffMatrix;

/**
 * Opaque monomial-basis polynomial.
 */
typedef struct ChebdiffMonomial ChebdiffMonomial;

/**
 * Opaque verification report.
 */
typedef struct ChebdiffReport ChebdiffReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string; do NOT free it.
 */
const char *chebdiff_version(void);

/**
 * s-th derivative of U_n as a U-basis expansion (closed form).
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_u_derivative(size_t n, size_t s, struct ChebdiffExpansion **out);

/**
 * s-th derivative of T_n as a T-basis expansion (closed form).
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_t_derivative(size_t n, size_t s, struct ChebdiffExpansion **out);

/**
 * s-th derivative of U_n from the unsimplified double sum; same value as
 * [`chebdiff_u_derivative`], quadratically slower, kept as a cross-check.
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_u_derivative_triple_sum(size_t n,
                                                     size_t s,
                                                     struct ChebdiffExpansion **out);

/**
 * s-th derivative of the degree-n basis polynomial by repeated monomial
 * power-rule steps; the baseline the closed forms are verified against.
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_derivative_oracle(enum ChebdiffBasis basis,
                                               size_t n,
                                               size_t s,
                                               struct ChebdiffMonomial **out);

/**
 * Classical monomial form of T_n or U_n.
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_basis_monomial(enum ChebdiffBasis basis,
                                            size_t n,
                                            struct ChebdiffMonomial **out);

/**
 * U-basis expansion of the single power x^power.
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_power_to_u(size_t power, struct ChebdiffExpansion **out);

/**
 * U-basis expansion of an arbitrary monomial polynomial.
 *
 * # Safety
 * `poly` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_monomial_to_u(const struct ChebdiffMonomial *poly,
                                           struct ChebdiffExpansion **out);

/**
 * Monomial form of an expansion.
 *
 * # Safety
 * `expansion` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_expansion_to_monomial(const struct ChebdiffExpansion *expansion,
                                                   struct ChebdiffMonomial **out);

/**
 * Family an expansion lives in.
 *
 * # Safety
 * `expansion` must be a live handle from this library; `out` must point to
 * writable memory for one `ChebdiffBasis`.
 */
enum ChebdiffStatus chebdiff_expansion_basis(const struct ChebdiffExpansion *expansion,
                                             enum ChebdiffBasis *out);

/**
 * Number of stored (nonzero) terms in an expansion.
 *
 * # Safety
 * `expansion` must be a live handle from this library; `out` must point to
 * writable memory for one `size_t`.
 */
enum ChebdiffStatus chebdiff_expansion_num_terms(const struct ChebdiffExpansion *expansion,
                                                 size_t *out);

/**
 * Highest stored degree of an expansion; -1 for the zero expansion.
 *
 * # Safety
 * `expansion` must be a live handle from this library; `out` must point to
 * writable memory for one `int64_t`.
 */
enum ChebdiffStatus chebdiff_expansion_degree(const struct ChebdiffExpansion *expansion,
                                              int64_t *out);

/**
 * Coefficient of the degree-n basis polynomial as a lowest-terms rational
 * string ("0" when absent).
 *
 * # Safety
 * `expansion` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_expansion_coeff(const struct ChebdiffExpansion *expansion,
                                             size_t degree,
                                             char **out);

/**
 * Exact evaluation of an expansion at a rational point given as "p" or
 * "p/q"; the result is a lowest-terms rational string.
 *
 * # Safety
 * `expansion` must be a live handle from this library; `at` must be a
 * NUL-terminated string; `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_expansion_eval(const struct ChebdiffExpansion *expansion,
                                            const char *at,
                                            char **out);

/**
 * Serialize an expansion to its canonical JSON line.
 *
 * # Safety
 * `expansion` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_expansion_to_json(const struct ChebdiffExpansion *expansion,
                                               char **out);

/**
 * Parse an expansion from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must point to writable
 * memory for one pointer.
 */
enum ChebdiffStatus chebdiff_expansion_from_json(const char *json, struct ChebdiffExpansion **out);

/**
 * Exact evaluation of a monomial polynomial at "p" or "p/q".
 *
 * # Safety
 * `poly` must be a live handle from this library; `at` must be a
 * NUL-terminated string; `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_monomial_eval(const struct ChebdiffMonomial *poly,
                                           const char *at,
                                           char **out);

/**
 * Serialize a monomial polynomial to its canonical JSON line.
 *
 * # Safety
 * `poly` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_monomial_to_json(const struct ChebdiffMonomial *poly, char **out);

/**
 * Parse a monomial polynomial from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must point to writable
 * memory for one pointer.
 */
enum ChebdiffStatus chebdiff_monomial_from_json(const char *json, struct ChebdiffMonomial **out);

/**
 * Assemble the (n_max+1) x (n_max+1) differentiation matrix of order s.
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_diff_matrix(enum ChebdiffBasis basis,
                                         size_t s,
                                         size_t n_max,
                                         struct ChebdiffMatrix **out);

/**
 * Differentiate an expansion with a matrix (weighted column combination).
 *
 * # Safety
 * `matrix` and `expansion` must be live handles from this library; `out`
 * must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_matrix_apply(const struct ChebdiffMatrix *matrix,
                                          const struct ChebdiffExpansion *expansion,
                                          struct ChebdiffExpansion **out);

/**
 * Single matrix entry as a lowest-terms rational string ("0" when absent).
 *
 * # Safety
 * `matrix` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_matrix_entry(const struct ChebdiffMatrix *matrix,
                                          size_t row,
                                          size_t col,
                                          char **out);

/**
 * Dense CSV rendering of a matrix (same format as the CLI).
 *
 * # Safety
 * `matrix` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_matrix_to_csv(const struct ChebdiffMatrix *matrix, char **out);

/**
 * Serialize a matrix to its canonical JSON line.
 *
 * # Safety
 * `matrix` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_matrix_to_json(const struct ChebdiffMatrix *matrix, char **out);

/**
 * Parse a matrix from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must point to writable
 * memory for one pointer.
 */
enum ChebdiffStatus chebdiff_matrix_from_json(const char *json, struct ChebdiffMatrix **out);

/**
 * Run one verification sweep up to n_max.
 *
 * # Safety
 * `out` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_verify(enum ChebdiffSuite suite,
                                    size_t n_max,
                                    struct ChebdiffReport **out);

/**
 * Whether a report recorded zero failures.
 *
 * # Safety
 * `report` must be a live handle from this library; `out` must point to
 * writable memory for one `bool`.
 */
enum ChebdiffStatus chebdiff_report_passed(const struct ChebdiffReport *report, bool *out);

/**
 * Number of cases a report enumerated.
 *
 * # Safety
 * `report` must be a live handle from this library; `out` must point to
 * writable memory for one `uint64_t`.
 */
enum ChebdiffStatus chebdiff_report_cases(const struct ChebdiffReport *report, uint64_t *out);

/**
 * Serialize a report to its canonical JSON line.
 *
 * # Safety
 * `report` must be a live handle from this library; `out` must point to
 * writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_report_to_json(const struct ChebdiffReport *report, char **out);

/**
 * Both sides of the collapsed inner-sum identity at (n, s, j), as decimal
 * integer strings. Rejects parameters outside 1 <= s <= n,
 * 0 <= j <= (n-s)/2.
 *
 * # Safety
 * `out_lhs` and `out_rhs` must each point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_inner_sum_pair(size_t n,
                                            size_t s,
                                            size_t j,
                                            char **out_lhs,
                                            char **out_rhs);

/**
 * Time the closed form against the oracle baseline up to n_max; the CSV
 * table is only produced when every degree's results matched exactly.
 *
 * # Safety
 * `out_table` must point to writable memory for one pointer.
 */
enum ChebdiffStatus chebdiff_bench(size_t n_max, size_t s, char **out_table);

/**
 * Free an expansion handle (NULL is a no-op).
 *
 * # Safety
 * `expansion` must be NULL or an unfreed handle from this library.
 */
void chebdiff_expansion_free(struct ChebdiffExpansion *expansion);

/**
 * Free a monomial-polynomial handle (NULL is a no-op).
 *
 * # Safety
 * `poly` must be NULL or an unfreed handle from this library.
 */
void chebdiff_monomial_free(struct ChebdiffMonomial *poly);

/**
 * Free a matrix handle (NULL is a no-op).
 *
 * # Safety
 * `matrix` must be NULL or an unfreed handle from this library.
 */
void chebdiff_matrix_free(struct ChebdiffMatrix *matrix);

/**
 * Free a report handle (NULL is a no-op).
 *
 * # Safety
 * `report` must be NULL or an unfreed handle from this library.
 */
void chebdiff_report_free(struct ChebdiffReport *report);

/**
 * Free a string returned by this library (NULL is a no-op).
 *
 * # Safety
 * `s` must be NULL or an unfreed string from this library.
 */
void chebdiff_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHEBDIFF_H */
