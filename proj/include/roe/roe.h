/* C interface to the relative operator entropy library.
 *
 * Every function returns a roe_status; on failure a description is available
 * from roe_last_error() on the calling thread until its next failing call.
 * Objects are opaque, immutable once created and released with the matching
 * *_free function. Strings returned through char** are released with
 * roe_string_free. Optional real parameters are passed as NaN. */
#ifndef ROE_ROE_H
#define ROE_ROE_H

#include <stddef.h>
#include <stdint.h>

#if defined(ROE_BUILDING_LIBRARY)
#define ROE_API __attribute__((visibility("default")))
#else
#define ROE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum roe_status {
  ROE_OK = 0,
  ROE_INVALID_ARGUMENT,
  ROE_DIMENSION_MISMATCH,
  ROE_NOT_SELF_ADJOINT,
  ROE_DOMAIN_ERROR,
  ROE_PRECONDITION_FAILED,
  ROE_NUMERICAL_FAILURE,
  ROE_IO_ERROR,
  ROE_PARSE_ERROR,
  ROE_INTERNAL_ERROR
} roe_status;

typedef enum roe_field { ROE_FIELD_REAL = 0, ROE_FIELD_COMPLEX = 1 } roe_field;

typedef enum roe_verdict {
  ROE_VERDICT_PASS = 0,
  ROE_VERDICT_FAIL = 1,
  ROE_VERDICT_PRECONDITION_FAILED = 2
} roe_verdict;

typedef enum roe_route { ROE_ROUTE_PERSPECTIVE = 0, ROE_ROUTE_EXPLICIT = 1 } roe_route;

/* Self-adjoint matrix (real symmetric or complex Hermitian). */
typedef struct roe_matrix roe_matrix;

/* Finished report: JSON document, human-readable table and verdict. */
typedef struct roe_report roe_report;

ROE_API const char* roe_version(void);
ROE_API const char* roe_status_name(roe_status status);
ROE_API const char* roe_last_error(void);
ROE_API void roe_string_free(char* s);

/* Matrices */

/* rows: dim*dim doubles, row-major. */
ROE_API roe_status roe_matrix_from_real(size_t dim, const double* rows, roe_matrix** out);
/* entries: dim*dim (re, im) pairs, row-major. */
ROE_API roe_status roe_matrix_from_complex(size_t dim, const double* entries, roe_matrix** out);
ROE_API roe_status roe_matrix_identity(size_t dim, roe_field field, roe_matrix** out);
/* JSON {"field","dim","data"} or the whitespace text format. */
ROE_API roe_status roe_matrix_parse(const char* text, roe_matrix** out);
ROE_API roe_status roe_matrix_load(const char* path, roe_matrix** out);
/* Text format for a .txt path, JSON otherwise. */
ROE_API roe_status roe_matrix_save(const roe_matrix* m, const char* path);
ROE_API roe_status roe_matrix_to_json(const roe_matrix* m, char** out);
ROE_API void roe_matrix_free(roe_matrix* m);

ROE_API size_t roe_matrix_dim(const roe_matrix* m);
ROE_API roe_field roe_matrix_field(const roe_matrix* m);
ROE_API roe_status roe_matrix_entry(const roe_matrix* m, size_t i, size_t j, double* re,
                                    double* im);

/* out: dim doubles, ascending. */
ROE_API roe_status roe_eigenvalues(const roe_matrix* m, double* out);

typedef struct roe_loewner {
  int holds;
  double margin;    /* min eigenvalue of b - a */
  double threshold; /* holds iff margin >= -threshold */
} roe_loewner;

ROE_API roe_status roe_loewner_leq(const roe_matrix* a, const roe_matrix* b, double tol,
                                   roe_loewner* out);
/* ||ABA - (2 (A o B) o A - A^2 o B)||_F */
ROE_API roe_status roe_jordan_residual(const roe_matrix* a, const roe_matrix* b, double* out);

/* Scalar functions */

/* name: identity, pow, sqrt, inv, log, xlog, I, II, III, V, I', II', III', V',
 * lower_shift, upper_shift, base_lower, harmonic, geometric, arithmetic.
 * alpha is the exponent (pow, xlog, bounds); delta is used by primed bounds;
 * lambda by the means. */
typedef struct roe_scalar_fn {
  const char* name;
  double alpha;
  double delta;
  double lambda;
} roe_scalar_fn;

ROE_API roe_status roe_scalar_eval(const roe_scalar_fn* f, double x, double* out);
ROE_API roe_status roe_apply_fn(const roe_matrix* m, const roe_scalar_fn* f, roe_matrix** out);

/* Operators */

/* NaN fields take their defaults: alpha 0, beta 1, delta 1, lambda 1/2. */
typedef struct roe_params {
  double alpha;
  double beta;
  double delta;
  double lambda;
} roe_params;

ROE_API roe_params roe_params_default(void);

/* expr: S, S_a, S_ab, geomean, harmonic, geometric, arithmetic, or a bound
 * name (perspective route). */
ROE_API roe_status roe_compute(const char* expr, const roe_matrix* a, const roe_matrix* b,
                               const roe_params* params, roe_matrix** out);
ROE_API roe_status roe_bound(const char* kind, const roe_matrix* a, const roe_matrix* b,
                             const roe_params* params, roe_route route, roe_matrix** out);
/* h(B)^{1/2} f(h(B)^{-1/2} A h(B)^{-1/2}) h(B)^{1/2} */
ROE_API roe_status roe_perspective(const roe_scalar_fn* f, const roe_scalar_fn* h,
                                   const roe_matrix* a, const roe_matrix* b, roe_matrix** out);
/* B^{e/2} X B^{e/2} */
ROE_API roe_status roe_congruence(const roe_matrix* x, const roe_matrix* b, double exponent,
                                  roe_matrix** out);

/* Hermite-Hadamard refinement for f(t) = x^alpha/t - 1 */

typedef struct roe_hh_record {
  double x;
  double alpha;
  double midpoint;
  double sup_l;
  double integral_avg;
  double inf_L;
  double endpoint_avg;
  double lambda_star;
} roe_hh_record;

ROE_API roe_status roe_hh_record_eval(double alpha, double x, roe_hh_record* out);
ROE_API roe_status roe_hh_l(double alpha, double x, double lambda, double* out);
ROE_API roe_status roe_hh_L(double alpha, double x, double lambda, double* out);
ROE_API roe_status roe_hh_extremizer(double x, double* out);
/* Record plus grid verdict over n points of [0, 1]. */
ROE_API roe_status roe_hh_report(double alpha, double x, size_t grid, roe_report** out);

/* Random generation */

typedef struct roe_gen_config {
  size_t dim;
  roe_field field;
  double spectrum_lo;
  double spectrum_hi;
  uint64_t seed;
} roe_gen_config;

ROE_API roe_gen_config roe_gen_config_default(void);
ROE_API roe_status roe_random_spd(const roe_gen_config* cfg, uint64_t trial, roe_matrix** out);
/* dominating != 0: delta A^beta <= B, otherwise B <= delta A^beta. */
ROE_API roe_status roe_random_partner(const roe_matrix* a, double beta, double delta,
                                      int dominating, const roe_gen_config* cfg, uint64_t trial,
                                      roe_matrix** out);

/* Inequality suites */

ROE_API size_t roe_suite_count(void);
ROE_API const char* roe_suite_name(size_t index);

typedef struct roe_run_config {
  const char* suite;
  uint64_t trials;
  double tol;
  size_t dim; /* 0: sampled per trial from 1..8 */
  roe_field field;
  double spectrum_lo;
  double spectrum_hi;
  uint64_t seed;
  double alpha; /* NaN: sampled per trial */
  double beta;
  double delta;
  double lambda;
  unsigned threads; /* 0: hardware concurrency */
} roe_run_config;

ROE_API roe_run_config roe_run_config_default(void);
ROE_API roe_status roe_run_suite(const roe_run_config* cfg, roe_report** out);
/* One user-supplied pair. A violated hypothesis gives
 * ROE_VERDICT_PRECONDITION_FAILED, not an error status. */
ROE_API roe_status roe_check_pair(const char* suite, const roe_matrix* a, const roe_matrix* b,
                                  const roe_params* params, double tol, roe_report** out);

typedef struct roe_oracle_config {
  uint64_t trials;
  size_t dim; /* 0: sampled per trial from 1..8 */
  roe_field field;
  double spectrum_lo;
  double spectrum_hi;
  uint64_t seed;
  double alpha; /* NaN: sampled per trial */
  double beta;
  double delta;
  double lambda;
  double threshold;
} roe_oracle_config;

ROE_API roe_oracle_config roe_oracle_config_default(void);
ROE_API roe_status roe_oracle_compare(const roe_oracle_config* cfg, roe_report** out);

ROE_API roe_verdict roe_report_verdict(const roe_report* r);
/* Owned by the report. */
ROE_API const char* roe_report_json(const roe_report* r);
ROE_API const char* roe_report_table(const roe_report* r);
ROE_API void roe_report_free(roe_report* r);

#ifdef __cplusplus
}
#endif

#endif /* ROE_ROE_H */
