/* mpkit: a workbench for matrix-product codes over small finite fields.
 *
 * Exact arithmetic in GF(p^m) with p^m <= 2^16, linear codes with canonical
 * generators, Hermitian duals and hulls, matrix-product constructions with a
 * monomial Hermitian Gram, dual-containing / self-orthogonal classification,
 * parity-based nonexistence screens, distance bounds, brute-force reference
 * paths, a randomized searcher and a self-check battery.
 *
 * Conventions:
 *  - Every fallible call returns mpkit_status and writes its outputs only on
 *    MPKIT_OK. mpkit_last_error() describes the most recent failure on the
 *    calling thread.
 *  - Field elements are canonical integers: e = sum coeffs[i] * p^i for the
 *    coefficients of the representative polynomial, 0 <= e < p^m.
 *  - Strings returned through a char** are NUL-terminated, owned by the
 *    caller, and released with mpkit_string_free.
 *  - Reports are "key=value" lines; keys never contain '=', values may.
 *  - Handles are created and released by the matching _free call. NULL is
 *    always safe to free.
 */

#ifndef MPKIT_H
#define MPKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mpkit_status {
  MPKIT_OK = 0,
  MPKIT_ERR_PARSE = 1,            /* malformed textual input */
  MPKIT_ERR_MISMATCH = 2,         /* operands disagree (fields, lengths, counts) */
  MPKIT_ERR_DIMENSION = 3,        /* shapes incompatible with the operation */
  MPKIT_ERR_DIVISION_BY_ZERO = 4, /* zero inverse or zero monomial entry */
  MPKIT_ERR_NOT_HERMITIAN = 5,    /* field has no conjugation (odd degree) */
  MPKIT_ERR_NOT_MONOMIAL = 6,     /* matrix is not monomial where one is required */
  MPKIT_ERR_NOT_INVOLUTION = 7,   /* permutation is not an involution */
  MPKIT_ERR_CAP_EXCEEDED = 8,     /* an enumeration would pass its work cap */
  MPKIT_ERR_OUT_OF_RANGE = 9,     /* argument outside the supported range */
  MPKIT_ERR_INAPPLICABLE = 10,    /* operation undefined for this input */
  MPKIT_ERR_INTERNAL = 11         /* invariant violation inside the library */
} mpkit_status;

typedef struct mpkit_field mpkit_field;
typedef struct mpkit_matrix mpkit_matrix;
typedef struct mpkit_code mpkit_code;
typedef struct mpkit_mpspec mpkit_mpspec;

const char* mpkit_version(void);

/* Message for the most recent failing call on this thread. Owned by the
 * library; valid until the next failing call on the same thread. */
const char* mpkit_last_error(void);

void mpkit_string_free(char* s);

/* ---- fields ---------------------------------------------------------- */

/* GF(p^m). modulus is m+1 coefficients, constant term first, leading 1;
 * pass NULL for the default modulus (the irreducible of smallest canonical
 * integer, e.g. x^2+x+1 for GF(4), x^2+1 for GF(9)). */
mpkit_status mpkit_field_create(uint32_t p, uint32_t m, const uint32_t* modulus,
                                mpkit_field** out);
void mpkit_field_free(mpkit_field* f);

uint32_t mpkit_field_order(const mpkit_field* f);
uint32_t mpkit_field_characteristic(const mpkit_field* f);
uint32_t mpkit_field_degree(const mpkit_field* f);

mpkit_status mpkit_field_add(const mpkit_field* f, uint32_t a, uint32_t b, uint32_t* out);
mpkit_status mpkit_field_mul(const mpkit_field* f, uint32_t a, uint32_t b, uint32_t* out);
mpkit_status mpkit_field_neg(const mpkit_field* f, uint32_t a, uint32_t* out);
mpkit_status mpkit_field_inv(const mpkit_field* f, uint32_t a, uint32_t* out);
mpkit_status mpkit_field_pow(const mpkit_field* f, uint32_t a, uint64_t e, uint32_t* out);
/* x -> x^q with q = p^(m/2); fails with MPKIT_ERR_NOT_HERMITIAN for odd m. */
mpkit_status mpkit_field_conj(const mpkit_field* f, uint32_t a, uint32_t* out);

/* The "field p=<p> m=<m> modulus=<c0,...,cm>" header line. */
mpkit_status mpkit_field_format(const mpkit_field* f, char** out);

/* ---- matrices -------------------------------------------------------- */

/* data is rows*cols canonical integers in row-major order (NULL allowed when
 * rows*cols is zero). */
mpkit_status mpkit_matrix_create(const mpkit_field* f, uint32_t rows, uint32_t cols,
                                 const uint32_t* data, mpkit_matrix** out);
mpkit_status mpkit_matrix_parse(const char* text, mpkit_matrix** out);
void mpkit_matrix_free(mpkit_matrix* m);

uint32_t mpkit_matrix_rows(const mpkit_matrix* m);
uint32_t mpkit_matrix_cols(const mpkit_matrix* m);
mpkit_status mpkit_matrix_entry(const mpkit_matrix* m, uint32_t i, uint32_t j, uint32_t* out);
mpkit_status mpkit_matrix_format(const mpkit_matrix* m, char** out);

mpkit_status mpkit_matrix_rank(const mpkit_matrix* m, uint32_t* out);
mpkit_status mpkit_matrix_rref(const mpkit_matrix* m, mpkit_matrix** out);
/* Canonical basis of the right kernel, one row per basis vector. */
mpkit_status mpkit_matrix_kernel(const mpkit_matrix* m, mpkit_matrix** out);
mpkit_status mpkit_matrix_multiply(const mpkit_matrix* a, const mpkit_matrix* b,
                                   mpkit_matrix** out);
mpkit_status mpkit_matrix_kronecker(const mpkit_matrix* a, const mpkit_matrix* b,
                                    mpkit_matrix** out);
mpkit_status mpkit_matrix_conj_transpose(const mpkit_matrix* m, mpkit_matrix** out);
mpkit_status mpkit_matrix_determinant(const mpkit_matrix* m, uint32_t* out);

/* A A-dagger: the matrix of Hermitian inner products of the rows. */
mpkit_status mpkit_matrix_gram_hermitian(const mpkit_matrix* m, mpkit_matrix** out);
/* 1 when the matrix is square with one nonzero entry per row and column. */
mpkit_status mpkit_matrix_is_monomial(const mpkit_matrix* m, int* out);
/* For a monomial matrix B with B(i, tau(i)) = mu_i: lines
 * "tau=<cycles>" and "mu.<i>=<entry>" (1-based). */
mpkit_status mpkit_matrix_monomial_report(const mpkit_matrix* m, char** out);
/* 1 when every j x j minor built from the first j rows is invertible
 * ("non-singular by columns"); capped at 8 rows / 8 columns. */
mpkit_status mpkit_matrix_is_nsc(const mpkit_matrix* m, int* out);

/* ---- linear codes ----------------------------------------------------- */

/* The code spanned by the rows; the generator is canonicalized, so equal
 * codes compare equal. */
mpkit_status mpkit_code_create(const mpkit_matrix* span, mpkit_code** out);
mpkit_status mpkit_code_parse(const char* text, mpkit_code** out);
void mpkit_code_free(mpkit_code* c);

uint32_t mpkit_code_length(const mpkit_code* c);
uint32_t mpkit_code_dim(const mpkit_code* c);
mpkit_status mpkit_code_generator(const mpkit_code* c, mpkit_matrix** out);
mpkit_status mpkit_code_format(const mpkit_code* c, char** out);
int mpkit_code_equal(const mpkit_code* a, const mpkit_code* b);

mpkit_status mpkit_code_hermitian_dual(const mpkit_code* c, mpkit_code** out);
/* dim(C meet its Hermitian dual), by the rank shortcut. */
mpkit_status mpkit_code_hull_dim(const mpkit_code* c, uint32_t* out);
/* Minimum Hamming distance by message-space enumeration; refuses with
 * MPKIT_ERR_CAP_EXCEEDED when |F|^dim > cap (cap 0 means the default 2^20).
 * For the zero code, *zero_code is set to 1 and *value to length+1. */
mpkit_status mpkit_code_min_distance(const mpkit_code* c, uint64_t cap, uint32_t* value,
                                     int* zero_code);

/* ---- matrix-product specs --------------------------------------------- */

/* k constituent codes of one common length over one field, mixed by a k x l
 * defining matrix (l >= k not required here, only rows == count). */
mpkit_status mpkit_mpspec_create(const mpkit_matrix* defining, const mpkit_code* const* codes,
                                 uint32_t count, mpkit_mpspec** out);
mpkit_status mpkit_mpspec_parse(const char* text, mpkit_mpspec** out);
void mpkit_mpspec_free(mpkit_mpspec* s);
mpkit_status mpkit_mpspec_format(const mpkit_mpspec* s, char** out);

/* The matrix-product code itself. */
mpkit_status mpkit_mpspec_build(const mpkit_mpspec* s, mpkit_code** out);

/* Hermitian hull dimension of the product, summed per constituent from the
 * involution of the defining matrix's Gram. Requires a monomial Gram. */
mpkit_status mpkit_mpspec_hull_dim(const mpkit_mpspec* s, uint32_t* out);

/* Classification report: tau, hull/dim/dual dimensions, per-constituent meet
 * dimensions, and the flag.{HDC,AHDC,HSO,AHSO,HLCD} verdicts. With
 * explicit_route nonzero the flags are recomputed from the transposition and
 * fixed-point tallies of tau (square defining matrices only). */
mpkit_status mpkit_mpspec_classify(const mpkit_mpspec* s, int explicit_route, char** report);

/* Parity-based nonexistence screen for the two "almost" classes; square
 * defining matrices only. Keys: obstruction.*, screen.*. */
mpkit_status mpkit_mpspec_screen(const mpkit_mpspec* s, char** report);

/* Lower bound on the minimum distance: method "prefix" (row-prefix spans of
 * the defining matrix) or "nsc" (column-rank factor; requires the defining
 * matrix to be non-singular by columns). cap 0 means the default 2^20. */
mpkit_status mpkit_mpspec_distance_bound(const mpkit_mpspec* s, const char* method,
                                         uint64_t cap, char** report);

/* Stabilizer-code parameters from a Hermitian dual-containing product:
 * [[l*n, 2*dim - l*n, >= d]] over GF(q). Fails with MPKIT_ERR_INAPPLICABLE
 * when the product is not dual-containing. cap 0 means the default. */
mpkit_status mpkit_mpspec_quantum(const mpkit_mpspec* s, uint64_t cap, char** report);

/* ---- brute-force reference paths -------------------------------------- */

/* The same quantities computed by explicit word enumeration, for
 * cross-checking; they refuse beyond the cap (0 means the default 2^20). */
mpkit_status mpkit_mpspec_brute_hull_dim(const mpkit_mpspec* s, uint64_t cap, uint32_t* out);
mpkit_status mpkit_mpspec_brute_classify(const mpkit_mpspec* s, uint64_t cap, char** report);
mpkit_status mpkit_code_brute_min_distance(const mpkit_code* c, uint64_t cap, uint32_t* value,
                                           int* zero_code);

/* ---- involutions and the classification table ------------------------- */

/* Number of involutions of S_k (exact, overflow-checked; k <= 12 for the
 * enumeration report). */
mpkit_status mpkit_involution_count(uint32_t k, uint64_t* out);
mpkit_status mpkit_involutions_report(uint32_t k, char** out);
/* One row per involution of S_k: the containments between constituents that
 * make the product dual-containing (resp. self-orthogonal) in that manner. */
mpkit_status mpkit_table_report(uint32_t k, char** out);

/* ---- search and self-check -------------------------------------------- */

/* Runs a search described by a line-oriented config (see the README for the
 * keys: field, k, n, target, dims, codes, defining, *_samples, max_hits,
 * max_candidates, seed, cap) and returns the hit report. */
mpkit_status mpkit_search_run(const char* config_text, char** report);

/* Runs the self-check battery: criterion 1..9, or all of them when
 * criterion is 0. *all_pass is 1 when every executed criterion passed. */
mpkit_status mpkit_verify_run(uint64_t seed, int criterion, int* all_pass, char** report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* MPKIT_H */
