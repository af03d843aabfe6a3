/* cubelab — point counting and exponential-sum experiments on cubic
 * hypersurfaces, exposed as a C shared-library API.
 *
 * Conventions: every function returns a clab_status; outputs go through
 * pointers.  Strings returned through char** are heap-allocated and must be
 * released with clab_string_free.  On any failure clab_last_error() gives a
 * thread-local description of what went wrong.
 */
#ifndef CUBELAB_H
#define CUBELAB_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum clab_status {
  CLAB_OK = 0,
  CLAB_ERR_PARSE = 1,    /* malformed polynomial / weight / argument text */
  CLAB_ERR_DOMAIN = 2,   /* precondition violated */
  CLAB_ERR_BUDGET = 3,   /* enumeration or factorization budget exceeded */
  CLAB_ERR_VERIFY = 4,   /* a verification ran and failed its threshold */
  CLAB_ERR_IO = 5,       /* file write failed */
  CLAB_ERR_INTERNAL = 6  /* invariant broke inside the library */
} clab_status;

typedef struct clab_poly clab_poly;
typedef struct clab_weight clab_weight;

const char* clab_last_error(void);
void clab_string_free(char* s);

/* threads <= 0 restores the hardware default; returns the active count */
int clab_set_threads(int threads);

/* ---- polynomials ------------------------------------------------------- */

/* n <= 0 infers the dimension from the largest variable index in `text` */
clab_status clab_poly_parse(const char* text, int n, clab_poly** out);
void clab_poly_free(clab_poly* p);
clab_status clab_poly_to_string(const clab_poly* p, char** out);
clab_status clab_poly_dimension(const clab_poly* p, int* out);
clab_status clab_poly_sup_norm(const clab_poly* p, char** out);

/* ---- weights ------------------------------------------------------------ */

/* name: "w1" or "box-smooth:<R>" */
clab_status clab_weight_create(const char* name, int n, clab_weight** out);
void clab_weight_free(clab_weight* w);

/* ---- counting ----------------------------------------------------------- */

clab_status clab_count_projective(const clab_poly* C, int64_t P,
                                  int64_t* count, double* seconds);
clab_status clab_count_weighted(const clab_poly* g, const clab_weight* w,
                                double P, double* value, double* seconds);
/* least squares of log(count) on log(P); needs >= 3 positive samples */
clab_status clab_fit_growth(const double* P_values, const double* counts,
                            int samples, double* exponent, double* intercept,
                            double* max_residual);

/* ---- exponential sums --------------------------------------------------- */

/* v has the polynomial's dimension; out[0] = Re, out[1] = Im */
clab_status clab_complete_T(const clab_poly* g, int64_t a, int64_t q,
                            const int64_t* v, double out[2]);
clab_status clab_complete_S(const clab_poly* g, int64_t u, int64_t q,
                            const int64_t* v, double out[2]);
clab_status clab_weyl_sum(const clab_poly* g, const clab_weight* w, double P,
                          double alpha, double out[2]);
clab_status clab_minor_arc_sum(const clab_poly* g, const clab_weight* w,
                               double P, int64_t u, int64_t q, double z,
                               double out[2]);

/* ---- verifications ------------------------------------------------------ */

/* |orthogonality-grid count - direct count|; grid M = 2B+1 reported */
clab_status clab_verify_orthogonality(const clab_poly* g, const clab_weight* w,
                                      double P, double* residual,
                                      double* direct, int64_t* grid);
clab_status clab_verify_multiplicativity(const clab_poly* g, int64_t r,
                                         int64_t s, int64_t u, const int64_t* v,
                                         double* residual, double* scale);
/* truncation <= 0 picks the default localization radius */
clab_status clab_poisson_residual(const clab_poly* g, const clab_weight* w,
                                  double P, int64_t u, int64_t q, double z,
                                  int64_t truncation, double* residual,
                                  double* s_abs);
/* `trials` random (w,x,y) triples per polynomial; failures counted exactly */
clab_status clab_verify_weyl_linearization(const clab_poly* g, int64_t trials,
                                           uint64_t seed, int64_t* failures);
clab_status clab_verify_delta(const clab_poly* g, const clab_weight* w,
                              double P, double Q, double* n_w, double* main,
                              double* majorant, double* constant);
/* m has the polynomial's dimension */
clab_status clab_verify_slice(const clab_poly* g, const clab_weight* w,
                              double P, const int64_t* m, double* residual,
                              double* lhs, double* rhs);

/* ---- reports (full documents, deterministic bytes) ---------------------- */

clab_status clab_report_prop1_csv(const clab_poly* g, const clab_weight* w,
                                  double P, double H, int64_t q_max,
                                  const int64_t* u_values, int u_count,
                                  int z_samples, char** csv,
                                  double* max_ratio);
clab_status clab_report_weyl_bound_csv(const clab_poly* g,
                                       const clab_weight* w, double P,
                                       int64_t q_max, int z_samples,
                                       double epsilon, char** csv,
                                       double* max_ratio);
clab_status clab_report_prime_bounds_json(const clab_poly* g,
                                          int64_t prime_limit, int64_t u_choice,
                                          int samples, uint64_t seed,
                                          char** json);

/* ---- modulus decomposition ---------------------------------------------- */

/* out = {b1, b2, c, d, d0} */
clab_status clab_qdecomp(int64_t q, int64_t out[5]);
clab_status clab_qdecomp_census_json(int64_t two_R_max, char** json,
                                     double* max_ratio);
clab_status clab_gcd_sum(int64_t B, int64_t N, int64_t* sum, double* ratio);

/* ---- exponent certificates ---------------------------------------------- */

/* case_name = "all" or a catalog name; n_hi < n_lo runs the single n_lo.
 * all_certified reports whether every in-range case passed. */
clab_status clab_certify_json(const char* case_name, int n_lo, int n_hi,
                              int include_out_of_range, char** json,
                              int* all_certified);
clab_status clab_catalog_json(char** json);

/* ---- hyperplane slicing -------------------------------------------------- */

clab_status clab_singular_dimension(const clab_poly* g0, const int64_t* primes,
                                    int prime_count, int* dimension);
clab_status clab_find_slicing_vector(const clab_poly* g0, int64_t bound,
                                     const int64_t* primes, int prime_count,
                                     int64_t* m_out);
clab_status clab_slice_json(const clab_poly* g, const clab_weight* w, double P,
                            const int64_t* m, int64_t k, char** json);

#ifdef __cplusplus
}
#endif

#endif /* CUBELAB_H */
