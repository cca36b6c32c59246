/*
 * C interface to libwaring: exact Waring/tensor rank computations, apolarity,
 * and secant-variety dimensions.
 *
 * Conventions:
 *  - Every fallible call returns a waring_status; WARING_OK is 0.
 *  - On failure, waring_last_error() returns a message for the calling thread.
 *  - Objects are opaque handles released with their matching *_free call.
 *  - Strings and arrays returned through out-parameters are owned by the
 *    caller and released with waring_string_free / waring_free.
 *  - Rationals cross the boundary as decimal text "p" or "p/q".
 */
#ifndef WARING_H
#define WARING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define WARING_API __declspec(dllexport)
#else
#  define WARING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum waring_status {
  WARING_OK = 0,
  WARING_ERR_PARSE = 1,
  WARING_ERR_NOT_HOMOGENEOUS = 2,
  WARING_ERR_DEGREE_OUT_OF_RANGE = 3,
  WARING_ERR_ZERO_POLYNOMIAL = 4,
  WARING_ERR_NON_SQUARE = 5,
  WARING_ERR_WRONG_SHAPE = 6,
  WARING_ERR_INVALID_MODE_SET = 7,
  WARING_ERR_DUPLICATE_POINTS = 8,
  WARING_ERR_ALL_ZERO = 9,
  WARING_ERR_INVALID_ARGUMENT = 10,
  WARING_ERR_JSON = 11,
  WARING_INFEASIBLE = 12, /* not an error: no solution exists */
  WARING_ERR_INTERNAL = 99
} waring_status;

typedef enum waring_arithmetic {
  WARING_EXACT = 0,
  WARING_MODULAR = 1
} waring_arithmetic;

typedef struct waring_config {
  uint64_t seed;
  unsigned trials;
  waring_arithmetic arithmetic;
  uint64_t modulus;
} waring_config;

typedef struct waring_poly waring_poly;
typedef struct waring_poly_list waring_poly_list;
typedef struct waring_matrix waring_matrix;
typedef struct waring_tensor waring_tensor;

/* Defaults: seed 0, 3 trials, exact arithmetic, modulus 2^31 - 1. */
WARING_API void waring_config_init(waring_config *config);

WARING_API const char *waring_last_error(void);
WARING_API const char *waring_status_name(waring_status status);
WARING_API const char *waring_version(void);

WARING_API void waring_string_free(char *s);
WARING_API void waring_free(void *p);

/* ---- polynomials ------------------------------------------------------- */

/* num_vars = 0 takes the highest variable index in text, plus one. */
WARING_API waring_status waring_poly_parse(const char *text, unsigned num_vars,
                                           waring_poly **out);
/* Random form with integer coefficients uniform in [-bound, bound]. */
WARING_API waring_status waring_poly_random(unsigned num_vars, unsigned degree,
                                            uint64_t seed, long bound,
                                            waring_poly **out);
WARING_API void waring_poly_free(waring_poly *p);
WARING_API unsigned waring_poly_num_vars(const waring_poly *p);
WARING_API unsigned waring_poly_degree(const waring_poly *p);
/* prefix is the variable letter: 'x' for forms, 'y' for dual operators. */
WARING_API waring_status waring_poly_render(const waring_poly *p, char prefix,
                                            char **out);

WARING_API size_t waring_poly_list_size(const waring_poly_list *l);
WARING_API const waring_poly *waring_poly_list_at(const waring_poly_list *l,
                                                  size_t i);
WARING_API void waring_poly_list_free(waring_poly_list *l);

/* ---- matrices ---------------------------------------------------------- */

WARING_API void waring_matrix_free(waring_matrix *m);
WARING_API size_t waring_matrix_rows(const waring_matrix *m);
WARING_API size_t waring_matrix_cols(const waring_matrix *m);
WARING_API waring_status waring_matrix_entry(const waring_matrix *m, size_t r,
                                             size_t c, char **out);
WARING_API waring_status waring_matrix_rank(const waring_matrix *m,
                                            const waring_config *config,
                                            size_t *rank);
WARING_API waring_status waring_matrix_det(const waring_matrix *m, char **out);

/* ---- apolarity --------------------------------------------------------- */

WARING_API waring_status waring_catalecticant(const waring_poly *f, unsigned t,
                                              waring_matrix **out);
WARING_API waring_status waring_perp_piece(const waring_poly *f, unsigned t,
                                           waring_poly_list **out);
/* hf and perp_dims get d+2 entries each (t = 0..d+1); free with waring_free. */
WARING_API waring_status waring_hilbert_function(const waring_poly *f,
                                                 const waring_config *config,
                                                 size_t **hf,
                                                 size_t **perp_dims,
                                                 size_t *length);

typedef enum waring_rank_branch {
  WARING_BRANCH_SQUARE_FREE_AT_D1 = 0,
  WARING_BRANCH_FELL_THROUGH_TO_D2 = 1,
  WARING_BRANCH_FORMULA = 2,
  WARING_BRANCH_MATRIX_RANK = 3
} waring_rank_branch;

/* witness is rendered in the dual variables y0, y1 (caller frees). */
WARING_API waring_status waring_sylvester_rank(const waring_poly *f,
                                               uint64_t seed, uint64_t *rank,
                                               waring_rank_branch *branch,
                                               char **witness);
WARING_API waring_status waring_monomial_rank(const unsigned *exponents,
                                              size_t count, uint64_t *rank);
WARING_API waring_status waring_quadratic_rank(const waring_poly *f,
                                               const waring_config *config,
                                               size_t *rank);
/* points: num_points * num_vars rational strings, row-major. On success,
 * *coefficients receives num_points strings (free each with
 * waring_string_free, then the array with waring_free). Returns
 * WARING_INFEASIBLE when F is not in the span of the powers. */
WARING_API waring_status waring_decompose_check(const waring_poly *f,
                                                const char *const *points,
                                                size_t num_points,
                                                char ***coefficients);

/* ---- secant varieties -------------------------------------------------- */

typedef struct waring_dim_report {
  size_t computed_dim;
  size_t expected_dim;
  size_t ambient_dim;
  long defect;
  unsigned trials;
  uint64_t seed;
  waring_arithmetic arithmetic;
  int has_known_dim;
  size_t known_dim;
  int certified;
} waring_dim_report;

WARING_API waring_status waring_secant_veronese(unsigned n, unsigned d,
                                                unsigned s,
                                                const waring_config *config,
                                                waring_dim_report *out);
WARING_API waring_status waring_secant_segre(const unsigned *dims,
                                             size_t num_factors, unsigned s,
                                             const waring_config *config,
                                             waring_dim_report *out);
WARING_API waring_status waring_expected_dim_veronese(unsigned n, unsigned d,
                                                      unsigned s, size_t *out);
WARING_API waring_status waring_expected_dim_segre(const unsigned *dims,
                                                   size_t num_factors,
                                                   unsigned s, size_t *out);
WARING_API waring_status waring_big_waring_g(unsigned n, unsigned d,
                                             uint64_t *out);

/* ---- tensors ----------------------------------------------------------- */

WARING_API waring_status waring_tensor_from_json(const char *text,
                                                 waring_tensor **out);
WARING_API waring_status waring_tensor_to_json(const waring_tensor *t,
                                               char **out);
WARING_API void waring_tensor_free(waring_tensor *t);
WARING_API waring_status waring_matmul_tensor(unsigned n, waring_tensor **out);
/* left_modes are 0-based. */
WARING_API waring_status waring_tensor_flatten(const waring_tensor *t,
                                               const unsigned *left_modes,
                                               size_t count,
                                               waring_matrix **out);
/* *ranks gets one entry per mode; free with waring_free. */
WARING_API waring_status waring_multilinear_rank(const waring_tensor *t,
                                                 const waring_config *config,
                                                 size_t **ranks,
                                                 size_t *order);
WARING_API waring_status waring_gss_minor_test(const waring_tensor *t,
                                               size_t r, int *holds);
WARING_API waring_status waring_strassen_matrix(const waring_tensor *t,
                                                waring_matrix **out);
WARING_API waring_status waring_strassen_expand(size_t *terms,
                                                unsigned *degree);

/* ---- golden fixtures --------------------------------------------------- */

WARING_API size_t waring_fixture_count(void);
WARING_API const char *waring_fixture_name(size_t index);
/* *passed is 1/0; *detail describes the observed value (caller frees). */
WARING_API waring_status waring_fixture_run(size_t index,
                                            const waring_config *config,
                                            int *passed, char **detail);

#ifdef __cplusplus
}
#endif

#endif /* WARING_H */
