/* ceq — weighted Coulomb equilibrium measures for a pair of charges above R^d.
 *
 * C interface to the ceq shared library. All objects are opaque handles;
 * every fallible call returns a ceq_status and reports results through out
 * parameters. On failure, ceq_last_error() gives a thread-local message.
 */
#ifndef CEQ_CAPI_H
#define CEQ_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CEQ_API __declspec(dllexport)
#else
#define CEQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ceq_status {
    CEQ_OK = 0,
    CEQ_ERR_INVALID_ARGUMENT = 1, /* bad parameter values or malformed JSON */
    CEQ_ERR_NOT_ADMISSIBLE = 2,   /* gamma2 - gamma1 < 1: no equilibrium measure */
    CEQ_ERR_NO_INNER_RADIUS = 3,  /* inner radius requested outside case B */
    CEQ_ERR_DOMAIN = 4,           /* argument outside a formula's domain */
    CEQ_ERR_NUMERIC = 5,          /* quadrature or solver failure */
    CEQ_ERR_NOT_CONFINING = 6,    /* particle minimization diverged */
    CEQ_ERR_BUFFER_TOO_SMALL = 7,
    CEQ_ERR_INTERNAL = 8
} ceq_status;

CEQ_API const char* ceq_status_name(ceq_status s);

/* Message for the most recent failure on this thread. */
CEQ_API const char* ceq_last_error(void);

CEQ_API const char* ceq_version(void);

/* ---- charge configuration ------------------------------------------- */

typedef struct ceq_config ceq_config;

CEQ_API ceq_status ceq_config_create(int d, double gamma1, double gamma2, double h1,
                                     double h2, ceq_config** out);
CEQ_API ceq_status ceq_config_from_json(const char* json_text, ceq_config** out);
CEQ_API void ceq_config_free(ceq_config* cfg);
CEQ_API ceq_status ceq_config_get(const ceq_config* cfg, int* d, double* gamma1,
                                  double* gamma2, double* h1, double* h2);

/* ---- geometry -------------------------------------------------------- */

CEQ_API ceq_status ceq_sphere_area(int d, double* out);    /* |S^{d-1}|, d >= 1 */
CEQ_API ceq_status ceq_sphere_energy(int d, double* out);  /* W(S^d), d >= 2 */
CEQ_API ceq_status ceq_kernel(int d, double r, double* out);

/* ---- external field --------------------------------------------------- */

CEQ_API ceq_status ceq_field_q(const ceq_config* cfg, double r, double* out);
CEQ_API ceq_status ceq_field_q_prime(const ceq_config* cfg, double r, double* out);
CEQ_API ceq_status ceq_field_q_second(const ceq_config* cfg, double r, double* out);
CEQ_API ceq_status ceq_radial_convexity(const ceq_config* cfg, int* out);

typedef enum ceq_admissibility {
    CEQ_ADMISSIBLE = 0,
    CEQ_WEAKLY_ADMISSIBLE = 1,
    CEQ_NOT_ADMISSIBLE = 2
} ceq_admissibility;

CEQ_API ceq_status ceq_classify_admissibility(const ceq_config* cfg, double tol,
                                              ceq_admissibility* out);

/* ---- regime ------------------------------------------------------------ */

typedef enum ceq_case_tag { CEQ_CASE_A1 = 0, CEQ_CASE_A2 = 1, CEQ_CASE_B = 2, CEQ_CASE_C = 3 } ceq_case_tag;

typedef enum ceq_support_type {
    CEQ_SUPPORT_BALL = 0,
    CEQ_SUPPORT_SHELL = 1,
    CEQ_SUPPORT_WHOLE_SPACE = 2,
    CEQ_SUPPORT_COMPLEMENT_OF_BALL = 3
} ceq_support_type;

typedef struct ceq_regime_info {
    ceq_case_tag case_tag;
    ceq_admissibility admissibility;
    ceq_support_type support_type;
    double inner;       /* inner support radius (0 when the support reaches 0) */
    int outer_finite;   /* 0: unbounded support, ignore `outer` */
    double outer;
    int has_r_c;        /* 1 when g_c has a positive zero */
    double r_c;
} ceq_regime_info;

CEQ_API ceq_status ceq_classify(const ceq_config* cfg, double tol, ceq_regime_info* out);

CEQ_API ceq_status ceq_g_c(const ceq_config* cfg, double r, double* out);
CEQ_API ceq_status ceq_g_s(const ceq_config* cfg, double R, double* out);
CEQ_API ceq_status ceq_outer_radius(const ceq_config* cfg, int* finite, double* R_s);
CEQ_API ceq_status ceq_inner_radius(const ceq_config* cfg, double* R_0);
CEQ_API ceq_status ceq_density_zero(const ceq_config* cfg, int* exists, double* r_c);

/* ---- equilibrium measure --------------------------------------------- */

typedef struct ceq_measure ceq_measure;

CEQ_API ceq_status ceq_measure_create(const ceq_config* cfg, ceq_measure** out);
CEQ_API void ceq_measure_free(ceq_measure* m);
CEQ_API ceq_status ceq_measure_regime(const ceq_measure* m, ceq_regime_info* out);
CEQ_API ceq_status ceq_measure_density(const ceq_measure* m, double r, double* out);
CEQ_API ceq_status ceq_measure_mass(const ceq_measure* m, double r, double* out);
CEQ_API ceq_status ceq_measure_quadrature_mass(const ceq_measure* m, double* out);
/* U^{mu_Q}(r) by adaptive radial quadrature. */
CEQ_API ceq_status ceq_measure_potential(const ceq_measure* m, double r, double* out);
/* Fills points with n*d doubles (row-major). */
CEQ_API ceq_status ceq_measure_sample(const ceq_measure* m, int n, uint64_t seed,
                                      double* points);

/* ---- verification ------------------------------------------------------ */

typedef struct ceq_frostman_report {
    double f_q;
    double max_dev_on_support;
    double min_margin_off_support; /* +inf when has_off_support == 0 */
    int has_off_support;
    int passed;
} ceq_frostman_report;

CEQ_API ceq_status ceq_frostman_check(const ceq_measure* m, double tol_eq,
                                      ceq_frostman_report* out);
CEQ_API ceq_status ceq_signed_constancy(const ceq_config* cfg, double R, int n_grid,
                                        double* max_dev);
/* I(mu_Q) and int Q dmu_Q; their sum is the equilibrium constant. */
CEQ_API ceq_status ceq_weighted_energy(const ceq_measure* m, double* interaction,
                                       double* field_integral);

/* ---- signed equilibria and balayage ----------------------------------- */

CEQ_API ceq_status ceq_signed_masses(const ceq_config* cfg, double R,
                                     double* continuous_mass, double* sphere_mass);
CEQ_API ceq_status ceq_bal_point_to_plane(int d, double height, double r, double* out);
CEQ_API ceq_status ceq_bal_point_to_ball_boundary(int d, double u_radius, double R,
                                                  double cos_angle, double* out);
CEQ_API ceq_status ceq_sphere_kernel_integral(int d, double R, double* out);
CEQ_API ceq_status ceq_exterior_sweep_mass(const ceq_config* cfg, double R, double* out);

/* ---- particle oracle ---------------------------------------------------- */

typedef struct ceq_oracle_opts {
    int n;              /* number of particles (>= 16) */
    uint64_t seed;
    double gtol;        /* stop when the discrete Frostman residual is below */
    int max_iters;
    double step0;       /* <= 0: default 0.1 * h2 */
    double guard_factor;/* blow-up guard radius over max(h1, h2); <= 0: 300 */
} ceq_oracle_opts;

CEQ_API void ceq_oracle_opts_default(ceq_oracle_opts* opts);

typedef struct ceq_oracle_result {
    double final_energy;
    double ks_distance;
    double min_radius;
    double max_radius;
    double frostman_residual;
    int iterations;
    int converged;
} ceq_oracle_result;

/* points (optional, may be NULL) receives n*d doubles. radii (optional)
 * receives the n sorted particle radii. */
CEQ_API ceq_status ceq_oracle_minimize(const ceq_config* cfg, const ceq_oracle_opts* opts,
                                       ceq_oracle_result* out, double* points,
                                       double* radii);

#ifdef __cplusplus
}
#endif

#endif /* CEQ_CAPI_H */
