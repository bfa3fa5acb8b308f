/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the selfsim library: self-similar step functions, their
 * singular points, and the spectra of the associated Stieltjes strings.
 *
 * Every fallible call returns a selfsim_status; on failure a message is
 * available from selfsim_last_error() on the calling thread until the next
 * call on that thread. Indices in this interface are zero-based except khat
 * as reported by selfsim_classify, which is one-based like the reports.
 *
 * Strings handed out through `char **` are owned by the caller and released
 * with selfsim_free_text. Handles are released with their *_free function;
 * passing NULL to any *_free is a no-op.
 */
#ifndef SELFSIM_H
#define SELFSIM_H

#include <stddef.h>

#if defined(_WIN32)
#define SELFSIM_API __declspec(dllexport)
#else
#define SELFSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum selfsim_status
{
  SELFSIM_OK = 0,
  SELFSIM_PARSE_ERROR = 1,
  SELFSIM_SCHEMA_ERROR,
  SELFSIM_NON_POSITIVE_LENGTH,
  SELFSIM_PARTITION_SUM_MISMATCH,
  SELFSIM_DEGENERATE_N,
  SELFSIM_INVALID_P,
  SELFSIM_NOT_CONTRACTIVE,
  SELFSIM_INDEX_OUT_OF_RANGE,
  SELFSIM_NOT_CLASS_D1,
  SELFSIM_INDEX_IS_KHAT,
  SELFSIM_REVERSED_ORIENTATION_AT_KHAT,
  SELFSIM_NOT_REVERSED_D1,
  SELFSIM_NO_ROOT,
  SELFSIM_EMPTY_STRING,
  SELFSIM_ILL_CONDITIONED,
  SELFSIM_RANK_DEFICIENT,
  SELFSIM_TOO_FEW_EIGENVALUES,
  SELFSIM_TRUNCATION_LEVEL_REQUIRED,
  SELFSIM_INVALID_ARGUMENT,
  SELFSIM_IO_ERROR,
  SELFSIM_INTERNAL_ERROR = 100
} selfsim_status;

typedef enum selfsim_class
{
  SELFSIM_CLASS_D0 = 0,
  SELFSIM_CLASS_D1 = 1,
  SELFSIM_CLASS_D2 = 2
} selfsim_class;

typedef enum selfsim_method
{
  SELFSIM_METHOD_CHARPOLY = 0,
  SELFSIM_METHOD_ORACLE = 1
} selfsim_method;

typedef enum selfsim_regime
{
  SELFSIM_REGIME_EXPONENTIAL = 0,
  SELFSIM_REGIME_POWER = 1
} selfsim_regime;

typedef struct selfsim_params selfsim_params;
typedef struct selfsim_stepfn selfsim_stepfn;
typedef struct selfsim_string selfsim_string;
typedef struct selfsim_spectrum selfsim_spectrum;

SELFSIM_API const char *selfsim_version(void);
SELFSIM_API const char *selfsim_status_name(selfsim_status status);
SELFSIM_API const char *selfsim_last_error(void);
SELFSIM_API void selfsim_free_text(char *text);

/* Parameters */
SELFSIM_API selfsim_status selfsim_params_parse(const char *json, size_t length, selfsim_params **out);
SELFSIM_API selfsim_status selfsim_params_load(const char *path, selfsim_params **out);
SELFSIM_API void selfsim_params_free(selfsim_params *params);
SELFSIM_API size_t selfsim_params_n(const selfsim_params *params);
SELFSIM_API int selfsim_params_is_exact(const selfsim_params *params);
SELFSIM_API selfsim_status selfsim_params_to_json(const selfsim_params *params, char **out);
SELFSIM_API selfsim_status selfsim_validation_report_json(const selfsim_params *params, char **out);
/* p may be INFINITY. */
SELFSIM_API selfsim_status selfsim_contraction_norm(const selfsim_params *params, double p, double *out);
SELFSIM_API selfsim_status selfsim_classify(const selfsim_params *params, selfsim_class *cls, size_t *khat);

/* Singular point and monotonicity */
/* `exact` may be NULL; otherwise it receives the exact text ("p/q" or decimal). */
SELFSIM_API selfsim_status selfsim_singular_point(const selfsim_params *params, double *xhat, char **exact);
SELFSIM_API selfsim_status selfsim_singular_report_json(const selfsim_params *params, char **out);
SELFSIM_API selfsim_status selfsim_monotone(const selfsim_params *params, int *nondecreasing, int *nonincreasing);
SELFSIM_API selfsim_status selfsim_monotone_report_json(const selfsim_params *params, char **out);

/* Spectral order; *defined is 0 for class D0. */
SELFSIM_API selfsim_status selfsim_spectral_order(const selfsim_params *params, double tol, int *defined,
                                                  double *order);
SELFSIM_API selfsim_status selfsim_order_json(const selfsim_params *params, double tol, char **out);

/* Step functions */
SELFSIM_API selfsim_status selfsim_iterate(const selfsim_params *params, unsigned m, double p,
                                           selfsim_stepfn **out);
SELFSIM_API selfsim_status selfsim_apply(const selfsim_params *params, const selfsim_stepfn *f,
                                         selfsim_stepfn **out);
SELFSIM_API void selfsim_stepfn_free(selfsim_stepfn *f);
SELFSIM_API size_t selfsim_stepfn_size(const selfsim_stepfn *f);
SELFSIM_API selfsim_status selfsim_stepfn_piece(const selfsim_stepfn *f, size_t index, double *left,
                                                double *right, double *value);
/* Left-limit value f(x-) for x in (0,1], f(0+) at x = 0. */
SELFSIM_API selfsim_status selfsim_stepfn_evaluate(const selfsim_stepfn *f, double x, double *out);
SELFSIM_API selfsim_status selfsim_stepfn_csv(const selfsim_stepfn *f, char **out);
SELFSIM_API selfsim_status selfsim_stepfn_lp_distance(const selfsim_stepfn *f, const selfsim_stepfn *g,
                                                      double p, double *out);

/* Stieltjes strings */
SELFSIM_API selfsim_status selfsim_default_truncation(const selfsim_params *params, unsigned *m);
SELFSIM_API selfsim_status selfsim_truncated_string(const selfsim_params *params, unsigned m,
                                                    selfsim_string **out);
SELFSIM_API selfsim_status selfsim_string_create(const double *positions, const double *masses, size_t count,
                                                 selfsim_string **out);
SELFSIM_API void selfsim_string_free(selfsim_string *s);
SELFSIM_API size_t selfsim_string_size(const selfsim_string *s);
SELFSIM_API int selfsim_string_definite(const selfsim_string *s);
SELFSIM_API selfsim_status selfsim_string_mass(const selfsim_string *s, size_t index, double *position,
                                               double *mass);
SELFSIM_API selfsim_status selfsim_string_csv(const selfsim_string *s, char **out);

/* Spectra. Distinct handles may be used from different threads concurrently. */
SELFSIM_API selfsim_status selfsim_spectrum_compute(const selfsim_string *s, selfsim_method method,
                                                    selfsim_spectrum **out);
SELFSIM_API void selfsim_spectrum_free(selfsim_spectrum *spec);
SELFSIM_API size_t selfsim_spectrum_size(const selfsim_spectrum *spec);
SELFSIM_API selfsim_status selfsim_spectrum_eigenvalue(const selfsim_spectrum *spec, size_t index, double *re,
                                                       double *im, double *residual);
SELFSIM_API selfsim_status selfsim_spectrum_csv(const selfsim_spectrum *spec, char **out);
SELFSIM_API selfsim_status selfsim_spectrum_deviation(const selfsim_spectrum *a, const selfsim_spectrum *b,
                                                      double *out);
SELFSIM_API selfsim_status selfsim_growth_fit(const selfsim_spectrum *spec, size_t skip, selfsim_regime regime,
                                              double *slope, double *intercept, double *r_squared);
SELFSIM_API selfsim_status selfsim_growth_json(const selfsim_spectrum *spec, size_t skip, unsigned m,
                                               char **out);

/* Squaring of a reversed khat map. `diagnostics` may be NULL; otherwise it
 * receives newline-separated notes (possibly empty). */
SELFSIM_API selfsim_status selfsim_square(const selfsim_params *params, selfsim_params **out,
                                          char **diagnostics);
SELFSIM_API selfsim_status selfsim_verify_square(const selfsim_params *params, unsigned m, double p, double tol,
                                                 int *agrees, double *distance);

#ifdef __cplusplus
}
#endif

#endif /* SELFSIM_H */
