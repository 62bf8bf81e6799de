#ifndef GANELIUS_GANELIUS_H
#define GANELIUS_GANELIUS_H

/*
 * C interface to the ganelius library.
 *
 * Objects are opaque handles created by *_create and released by *_destroy.
 * Every call returns a gan_status; on failure gan_last_error() describes the
 * problem (thread-local, valid until the next failing call on that thread).
 *
 * Text results use the buffer idiom: pass buf/capacity, receive the number of
 * bytes needed (excluding the terminator) in *required.  If capacity is too
 * small nothing is written and GAN_ERR_BUFFER_TOO_SMALL is returned, so a
 * NULL/0 call can be used to size the buffer.
 *
 * Real-valued parameters are passed as decimal strings so that extended
 * precision runs see them at full precision.  NULL selects the default.
 */

#include <stddef.h>

#if defined(_WIN32)
#define GAN_API __declspec(dllexport)
#else
#define GAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gan_status {
  GAN_OK = 0,
  GAN_ERR_INVALID_ARGUMENT = 1,
  GAN_ERR_DOMAIN = 2,
  GAN_ERR_NODE_COLLISION = 3,
  GAN_ERR_BUFFER_TOO_SMALL = 4,
  GAN_ERR_NULL_POINTER = 5,
  GAN_ERR_INTERNAL = 6
} gan_status;

typedef enum gan_precision { GAN_BINARY64 = 0, GAN_EXTENDED = 1 } gan_precision;

typedef enum gan_scheme { GAN_SCHEME_GANELIUS = 0, GAN_SCHEME_SESINC = 1 } gan_scheme;

typedef struct gan_nodes gan_nodes;
typedef struct gan_approximant gan_approximant;
typedef struct gan_report gan_report;

/* User function for custom approximants.  x is the point and delta = 1 - |x|,
 * which carries the full information near the endpoints. */
typedef double (*gan_function_cb)(double x, double delta, void* user);

GAN_API const char* gan_last_error(void);
GAN_API const char* gan_status_string(gan_status status);
GAN_API const char* gan_version(void);

GAN_API gan_status gan_parse_precision(const char* name, gan_precision* out);
GAN_API gan_status gan_parse_scheme(const char* name, gan_scheme* out);

/* ---- nodes ---------------------------------------------------------------- */

/* Ganelius nodes for (n, r) mapped to the region of half-width d (default
 * pi/2).  With r NULL both d and mu are required and r = d mu / pi. */
GAN_API gan_status gan_nodes_create(int n, const char* r, const char* d, const char* mu, gan_precision precision,
                                    gan_nodes** out);
GAN_API void gan_nodes_destroy(gan_nodes* nodes);
/* n0 is the length of the geometric head. */
GAN_API gan_status gan_nodes_info(const gan_nodes* nodes, int* n, int* n0);
/* Columns k,a_k,b_k,beta_k,sigma_sign,sigma_logmag for k = 1..n. */
GAN_API gan_status gan_nodes_csv(const gan_nodes* nodes, char* buf, size_t capacity, size_t* required);

/* ---- approximants --------------------------------------------------------- */

/* Builtin function f1..f5.  nu (Ganelius only) and d override the defaults. */
GAN_API gan_status gan_approx_create(const char* function_id, gan_scheme scheme, int n, const char* nu,
                                     const char* d, gan_precision precision, gan_approximant** out);
/* Binary64 approximant of a user function in the space with the given d, mu, nu. */
GAN_API gan_status gan_approx_create_custom(gan_function_cb f, void* user, gan_scheme scheme, int n, double d,
                                            double mu, double nu, gan_approximant** out);
GAN_API void gan_approx_destroy(gan_approximant* approx);
GAN_API gan_status gan_approx_sample_count(const gan_approximant* approx, size_t* out);
GAN_API gan_status gan_approx_eval(const gan_approximant* approx, double x, double* out);
/* Value at sign * (1 - k 10^-ell), with the distance to the endpoint kept exact. */
GAN_API gan_status gan_approx_eval_endpoint(const gan_approximant* approx, int sign, long k, int ell, double* out);
/* Columns x,f,approx,abs_error over a grid: "paper", "uniform:<n>" or
 * "points:<x1>;<x2>;...". */
GAN_API gan_status gan_approx_grid_csv(const gan_approximant* approx, const char* grid, char* buf, size_t capacity,
                                       size_t* required);

/* ---- sweeps --------------------------------------------------------------- */

/* Max-error sweep over the grid (NULL means "paper") for each N in n_list.
 * threads = 0 uses every hardware thread. */
GAN_API gan_status gan_sweep(const char* function_id, gan_scheme scheme, const int* n_list, size_t n_count,
                             const char* nu, const char* d, const char* grid, gan_precision precision,
                             unsigned threads, gan_report** out);
GAN_API void gan_report_destroy(gan_report* report);
GAN_API gan_status gan_report_row_count(const gan_report* report, size_t* out);
GAN_API gan_status gan_report_row(const gan_report* report, size_t index, int* n, double* max_error);
GAN_API gan_status gan_report_fitted_slope(const gan_report* report, double* out);
GAN_API gan_status gan_report_csv(const gan_report* report, char* buf, size_t capacity, size_t* required);
GAN_API gan_status gan_report_json(const gan_report* report, char* buf, size_t capacity, size_t* required);
/* Reports must share one precision.  Empty output when no report has rows. */
GAN_API gan_status gan_plotdata_csv(const gan_report* const* reports, size_t count, char* buf, size_t capacity,
                                    size_t* required);

/* ---- parameters ----------------------------------------------------------- */

GAN_API gan_status gan_function_params(const char* function_id, double* d, double* mu, double* nu);
/* Predicted error ratio per unit step in sqrt(N). */
GAN_API gan_status gan_theoretical_rate(const char* function_id, gan_scheme scheme, const char* d, double* out);

/* ---- verification --------------------------------------------------------- */

/* options is a JSON object with "check" (ganelius-bound, j-bound, cardinal,
 * blaschke-modulus, lhs-equivalence) and optional "r", "N", "functions", "d"
 * arrays and "precision".  Writes the itemized JSON result. */
GAN_API gan_status gan_verify_run(const char* options, int* passed, char* buf, size_t capacity, size_t* required);

#ifdef __cplusplus
}
#endif

#endif
