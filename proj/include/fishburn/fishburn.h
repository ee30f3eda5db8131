/*
 * C interface to libfishburn.
 *
 * Objects are opaque handles created by fb_*_compute / fb_*_make functions and
 * released with the matching fb_*_free. Every fallible call returns an
 * fb_status; on failure a message is available from fb_last_error() on the
 * calling thread. Big integers cross the boundary as decimal strings,
 * rationals as "a/b".
 *
 * String getters follow one convention: they write at most `cap` bytes
 * including the terminating NUL into `buf`, store the full length (without
 * NUL) in `*len` when `len` is not NULL, and return FB_ERR_BUFFER_TOO_SMALL
 * when the value did not fit. Passing buf = NULL, cap = 0 queries the length.
 */
#ifndef FISHBURN_FISHBURN_H
#define FISHBURN_FISHBURN_H

#include <stddef.h>

#if defined(_WIN32)
#  define FB_API __declspec(dllexport)
#else
#  define FB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fb_status {
  FB_OK = 0,
  FB_ERR_BAD_PARAMS = 1,
  FB_ERR_ZERO_R = 2,
  FB_ERR_NON_UNIT_CONSTANT_TERM = 3,
  FB_ERR_ILL_FORMED_COMPOSITION = 4,
  FB_ERR_NON_INTEGRAL_RESULT = 5,
  FB_ERR_INCONSISTENT_I0 = 6,
  FB_ERR_NOT_IN_TSTAR = 7,
  FB_ERR_INSUFFICIENT_DATA = 8,
  FB_ERR_DIMENSION_MISMATCH = 9,
  FB_ERR_NULL_ARGUMENT = 10,
  FB_ERR_BUFFER_TOO_SMALL = 11,
  FB_ERR_OUT_OF_RANGE = 12,
  FB_ERR_INTERNAL = 13
} fb_status;

FB_API const char* fb_status_name(fb_status status);

/* Message of the last failed call on this thread ("" if none). */
FB_API const char* fb_last_error(void);

/* ---- xi sequences ------------------------------------------------------ */

typedef struct fb_xi fb_xi;

/* xi_r(n), n = 0..n_max. */
FB_API fb_status fb_xi_compute(long r, long n_max, fb_xi** out);
/* Fishburn numbers via Glaisher T-numbers (r = 1). */
FB_API fb_status fb_xi_compute_via_t(long n_max, fb_xi** out);
/* Coefficients of (1-q)^{floor(p/24)} F((1-q)^p); fb_xi_r reports p. */
FB_API fb_status fb_xi_bar_compute(long p, long n_max, fb_xi** out);
FB_API void fb_xi_free(fb_xi* xi);

FB_API long fb_xi_r(const fb_xi* xi);
FB_API long fb_xi_truncation(const fb_xi* xi);
FB_API fb_status fb_xi_value(const fb_xi* xi, long n, char* buf, size_t cap, size_t* len);
/* Least nonnegative residue of xi(n) mod m. */
FB_API fb_status fb_xi_value_mod(const fb_xi* xi, long n, long m, long* out);
/* 1 if both sequences have identical values, 0 otherwise. */
FB_API int fb_xi_equal(const fb_xi* a, const fb_xi* b);

/* Default truncation for a given r (500 for r = +-1, otherwise 200). */
FB_API long fb_default_truncation(long r);

/* ---- residue sets ------------------------------------------------------ */

typedef enum fb_set_kind {
  FB_SET_S = 0,
  FB_SET_T = 1,
  FB_SET_S_STAR = 2,
  FB_SET_T_STAR = 3
} fb_set_kind;

typedef struct fb_residue_set fb_residue_set;

/* r and s are ignored for FB_SET_S and FB_SET_T. */
FB_API fb_status fb_residue_set_make(fb_set_kind kind, long p, long r, long s,
                                     fb_residue_set** out);
FB_API void fb_residue_set_free(fb_residue_set* set);
FB_API size_t fb_residue_set_size(const fb_residue_set* set);
FB_API long fb_residue_set_at(const fb_residue_set* set, size_t index);
FB_API int fb_residue_set_contains(const fb_residue_set* set, long j);
/* 1 for a T-type set whose counterpart is empty (all residues, vacuously). */
FB_API int fb_residue_set_vacuous(const fb_residue_set* set);

/* ---- congruence relations --------------------------------------------- */

typedef enum fb_provenance {
  FB_PROVENANCE_BINOMIAL = 0,
  FB_PROVENANCE_NULLSPACE = 1,
  FB_PROVENANCE_EXPLICIT = 2
} fb_provenance;

typedef struct fb_relation fb_relation;
typedef struct fb_relation_list fb_relation_list;

/* Explicit relation sum_j coeffs[j] xi_r(pn+j) = 0 (mod p); len must be p. */
FB_API fb_status fb_relation_make(long p, long r, const long* coeffs, size_t len,
                                  fb_relation** out);
/* Binomial relation with parameters (s, m), s <= m <= p-1. */
FB_API fb_status fb_relation_binomial(long p, long r, long s, long m, fb_relation** out);
FB_API void fb_relation_free(fb_relation* rel);
FB_API long fb_relation_p(const fb_relation* rel);
FB_API long fb_relation_r(const fb_relation* rel);
FB_API long fb_relation_coeff(const fb_relation* rel, size_t j);
FB_API fb_provenance fb_relation_provenance(const fb_relation* rel);
FB_API long fb_relation_s(const fb_relation* rel);
FB_API long fb_relation_m(const fb_relation* rel);
FB_API fb_status fb_relation_describe(const fb_relation* rel, char* buf, size_t cap, size_t* len);

/* The (p+1)/2 relations with m = p-1 from the Legendre-symbol criterion. */
FB_API fb_status fb_corollary_family(long p, long r, fb_relation_list** out);
FB_API void fb_relation_list_free(fb_relation_list* list);
FB_API size_t fb_relation_list_size(const fb_relation_list* list);
/* Borrowed pointer, valid until the list is freed. */
FB_API const fb_relation* fb_relation_list_at(const fb_relation_list* list, size_t index);
/* 1 if rel lies in the F_p span of the list. */
FB_API fb_status fb_relation_list_spans(const fb_relation_list* list, const fb_relation* rel,
                                        int* out);

/* ---- relation space ---------------------------------------------------- */

typedef struct fb_relation_space fb_relation_space;

/* Nullspace of M[n][j] = xi(pn+j) mod p for n < rows; xi must reach p*rows-1. */
FB_API fb_status fb_relation_space_compute(const fb_xi* xi, long p, long rows,
                                           fb_relation_space** out);
/* Same space from xi_r mod p computed directly in F_p; fast for large p*rows. */
FB_API fb_status fb_relation_space_compute_mod(long p, long r, long rows, fb_relation_space** out);
FB_API void fb_relation_space_free(fb_relation_space* space);
FB_API long fb_relation_space_p(const fb_relation_space* space);
FB_API long fb_relation_space_r(const fb_relation_space* space);
FB_API long fb_relation_space_dimension(const fb_relation_space* space);
FB_API long fb_relation_space_rows(const fb_relation_space* space);
FB_API long fb_relation_space_last_change(const fb_relation_space* space);
/* Dimension after `rows` rows, 1 <= rows <= fb_relation_space_rows. */
FB_API long fb_relation_space_dimension_at(const fb_relation_space* space, long rows);
FB_API int fb_relation_space_stabilized(const fb_relation_space* space, long window);
/* Borrowed pointer, valid until the space is freed. */
FB_API const fb_relation* fb_relation_space_basis(const fb_relation_space* space, size_t index);
FB_API fb_status fb_relation_space_contains(const fb_relation_space* space,
                                            const fb_relation* rel, int* out);

/* ---- verification reports --------------------------------------------- */

typedef struct fb_report fb_report;

FB_API void fb_report_free(fb_report* report);
FB_API int fb_report_pass(const fb_report* report);
FB_API unsigned long long fb_report_checks(const fb_report* report);
FB_API fb_status fb_report_claim(const fb_report* report, char* buf, size_t cap, size_t* len);
FB_API fb_status fb_report_range(const fb_report* report, char* buf, size_t cap, size_t* len);
/* 1 if a counterexample was recorded. */
FB_API int fb_report_has_counterexample(const fb_report* report);
FB_API fb_status fb_report_counterexample(const fb_report* report, char* buf, size_t cap,
                                          size_t* len);

/* Binomial congruence for m in T*(p, r, s), r taken from xi. FB_ERR_NOT_IN_TSTAR
 * unless force != 0. */
FB_API fb_status fb_verify_theorem(const fb_xi* xi, long p, long s, long m, long nmax,
                                   int force, fb_report** out);
FB_API fb_status fb_verify_relation(const fb_xi* xi, const fb_relation* rel, long nmax,
                                    fb_report** out);
FB_API fb_status fb_verify_newxithm(long p, long nmax, fb_report** out);
FB_API fb_status fb_verify_apjid(long p, long i, long nmax, fb_report** out);
FB_API fb_status fb_verify_vanishing_lemma(long p, long nmax, fb_report** out);
FB_API fb_status fb_verify_alpha_stability(long p, long nmax, fb_report** out);
FB_API fb_status fb_verify_reconstruction(long p, long n, fb_report** out);
/* z and x[k] are rationals "a/b"; x_len must exceed nmax. */
FB_API fb_status fb_verify_a1id(long p, const char* z, long m, const char* const* x,
                                size_t x_len, long nmax, fb_report** out);

/* ---- scalar helpers ---------------------------------------------------- */

FB_API int fb_is_prime(long n);
FB_API int fb_chi12(long n);
FB_API fb_status fb_legendre(long a, long p, int* out);
FB_API fb_status fb_i0(long p, long* out);

#ifdef __cplusplus
}
#endif

#endif /* FISHBURN_FISHBURN_H */
