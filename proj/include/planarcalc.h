/* planarcalc: harmonic extension on planar disk unions, matrix functional
 * calculus, and triholomorphic fields, behind a C interface with opaque
 * handles and status codes. All functions returning pc_status leave a
 * message for pc_last_error() on failure. Handles are freed with the
 * matching *_free function; output handles are only set on PC_OK. */
#ifndef PLANARCALC_H
#define PLANARCALC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pc_status {
    PC_OK = 0,
    PC_ERR_INVALID_INPUT,
    PC_ERR_IO,
    PC_ERR_SCHEMA,
    PC_ERR_DOMAIN,
    PC_ERR_DEGENERATE_GEOMETRY,
    PC_ERR_SEAM_CONDITION,
    PC_ERR_INVALID_DECOMPOSITION,
    PC_ERR_NEAR_SINGULAR,
    PC_ERR_QUADRATURE_FAILURE,
    PC_ERR_CONVERGENCE_FAILURE,
    PC_ERR_PRECONDITION,
    PC_ERR_SYMBOL_DOMAIN,
    PC_ERR_TRUNCATION_FAILURE,
    PC_ERR_RESOLUTION,
    PC_ERR_REFLECTION_INCOMPATIBLE,
    PC_ERR_INTERNAL
} pc_status;

/* Message for the most recent failure on this thread. */
const char* pc_last_error(void);
const char* pc_status_name(pc_status s);
/* CLI exit-code contract: 0 ok, 1 input error, 2 numerical failure. */
int pc_status_exit_code(pc_status s);

typedef struct pc_matrix pc_matrix;
typedef struct pc_domain pc_domain;
typedef struct pc_solution pc_solution;
typedef struct pc_trifield pc_trifield;
typedef struct pc_trifield_list pc_trifield_list;

/* ------------------------------------------------------------------ */
/* dense complex matrices                                             */

pc_status pc_matrix_load(const char* path, pc_matrix** out);
/* Row-major n*n arrays of real and imaginary parts (im may be NULL). */
pc_status pc_matrix_create(int n, const double* re, const double* im, pc_matrix** out);
pc_status pc_matrix_save(const pc_matrix* m, const char* path);
void pc_matrix_free(pc_matrix* m);
int pc_matrix_dim(const pc_matrix* m);
pc_status pc_matrix_entry(const pc_matrix* m, int i, int j, double* re, double* im);

/* Clustered eigenvalues with multiplicity; re/im hold n values. */
pc_status pc_matrix_spectrum(const pc_matrix* m, double* re, double* im);
pc_status pc_matrix_norm(const pc_matrix* m, double* out);
pc_status pc_matrix_spectral_radius(const pc_matrix* m, double* out);
pc_status pc_matrix_star_normal(const pc_matrix* m, int* normal, double* defect);
pc_status pc_matrix_superpositive(const pc_matrix* m, int* flag);

/* Superpositive square root by the shifted holomorphic calculus. */
pc_status pc_matrix_sqrt(const pc_matrix* m, pc_matrix** out, double* epsilon, double* defect,
                         int* root_superpositive);
pc_status pc_matrix_exp(const pc_matrix* m, pc_matrix** out);
/* p(x) with p given by ncoef complex coefficients, constant term first. */
pc_status pc_matrix_poly(const pc_matrix* m, const double* coef_re, const double* coef_im,
                         int ncoef, pc_matrix** out);

/* Superpositive absolute value; radius 0 means ||x||, modes 0 the default. */
pc_status pc_matrix_superabs(const pc_matrix* m, double radius, long modes, pc_matrix** out,
                             double* radius_used, long* modes_used, double* truncation);
/* Ordinary absolute value by harmonic calculus (r I on the radius circle). */
pc_status pc_matrix_absval(const pc_matrix* m, double radius, pc_matrix** out,
                           double* radius_used);

/* Real block embedding [[x0, x1], [-x1, x0]] as a 2n x 2n real matrix. */
pc_status pc_matrix_real_embed(const pc_matrix* m, pc_matrix** out);
pc_status pc_isometry_defect(const pc_matrix* m, int level, int trials,
                             unsigned long long seed, double* defect);

/* ------------------------------------------------------------------ */
/* planar domains and the Dirichlet solver                            */

pc_status pc_domain_load(const char* path, pc_domain** out);
void pc_domain_free(pc_domain* d);
/* 1 inside, 0 outside, -1 on error. */
int pc_domain_contains(const pc_domain* d, double x, double y);
pc_status pc_domain_bounds(const pc_domain* d, double* x0, double* y0, double* x1, double* y1);

/* Boundary data from a sample file (data_path) or a named generator
 * (const, cos, sin, abs_z, re_z2, super_abs); exactly one must be given.
 * tol, n_max, samples <= 0 select the defaults (1e-6, 4096, 1024).
 * no_lift disables the harmonic lift, so data that misses the seam
 * condition fails with PC_ERR_SEAM_CONDITION. */
pc_status pc_dirichlet_solve(const pc_domain* d, const char* data_path, const char* generator,
                             double tol, int n_max, int samples, int no_lift,
                             pc_solution** out);
pc_status pc_solution_eval(const pc_solution* s, double x, double y, double* re, double* im);
pc_status pc_solution_stats(const pc_solution* s, int* iterations, double* overlap_discrepancy,
                            double* sup_norm);
void pc_solution_free(pc_solution* s);

/* ------------------------------------------------------------------ */
/* triholomorphic fields                                              */

pc_status pc_trifield_load(const char* path, pc_trifield** out);
pc_status pc_trifield_save(const pc_trifield* t, const char* path);
/* Field as a JSON document; release with pc_string_free. */
pc_status pc_trifield_to_json(const pc_trifield* t, char** out);
void pc_trifield_free(pc_trifield* t);
pc_status pc_trifield_check(const pc_trifield* t, double* max_residual, int* exact_zero);
pc_status pc_trifield_product(const pc_trifield* a, const pc_trifield* b, pc_trifield** out);
pc_status pc_trifield_eval(const pc_trifield* t, double x, double y, double z, double* re,
                           double* im);
/* Requires a valid field; flags are 1 when the exact identities hold. */
pc_status pc_trifield_laplacian_flags(const pc_trifield* t, int* componentwise,
                                      int* combination_zero);
pc_status pc_triholo_basis(int degree, pc_trifield_list** out);
int pc_trifield_list_size(const pc_trifield_list* l);
/* Borrowed pointer, owned by the list. */
const pc_trifield* pc_trifield_list_get(const pc_trifield_list* l, int i);
void pc_trifield_list_free(pc_trifield_list* l);

/* ------------------------------------------------------------------ */
/* invariant suites                                                   */

/* Runs the module invariant suites (all, or the one named by `only`;
 * "real-iso" selects the embedding-isometry suite) and returns a JSON
 * report; PC_OK only when every check passes. PC_ERR_PRECONDITION signals
 * check failures, with the report still set. trials/level <= 0 select the
 * defaults (20 samples at amplification level 2) for the isometry checks. */
pc_status pc_verify_run(const char* only, unsigned long long seed, int trials, int level,
                        char** json_report);
void pc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PLANARCALC_H */
