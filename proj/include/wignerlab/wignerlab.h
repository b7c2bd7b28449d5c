#ifndef WIGNERLAB_H
#define WIGNERLAB_H

/* C interface to the wignerlab core.
 *
 * Conventions:
 *   - four-vectors are double[4] in (x, y, z, t) order, metric (-,-,-,+)
 *   - 4x4 matrices are row-major double[16]
 *   - functions that can fail return wl_status and write results through
 *     out pointers; out values are unspecified unless WL_OK is returned
 *   - strings returned through char** are heap-allocated; release them
 *     with wl_string_free
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wl_status {
  WL_OK = 0,
  WL_ERR_DOMAIN = 1,      /* argument outside the mathematical domain */
  WL_ERR_UNSUPPORTED = 2, /* valid request outside this build's envelope */
  WL_ERR_INVALID = 3,     /* malformed argument: null pointer, unknown name */
  WL_ERR_IO = 4,
  WL_ERR_INTERNAL = 5
} wl_status;

const char* wl_status_name(wl_status s);
const char* wl_version(void);

/* ----------------------------------------------------------- kinematics */

/* t^2 - x^2 - y^2 - z^2 */
double wl_norm_squared(const double p[4]);

wl_status wl_boost_z(double eta, double m[16]);
wl_status wl_apply_matrix(const double m[16], const double p[4], double out[4]);

wl_status wl_dispersion_energy(double m, double p, double* out);

/* nonrelativistic is +inf when m == 0 */
wl_status wl_dispersion_limits(double m, double p, double* exact,
                               double* nonrelativistic,
                               double* ultrarelativistic);

wl_status wl_rapidity_from_energy(double m, double energy, double* eta);

/* --------------------------------------------------------- little group */

typedef enum wl_generator {
  WL_GEN_J1 = 0,
  WL_GEN_J2 = 1,
  WL_GEN_J3 = 2,
  WL_GEN_K1 = 3,
  WL_GEN_K2 = 4,
  WL_GEN_K3 = 5,
  WL_GEN_N1 = 6,
  WL_GEN_N2 = 7
} wl_generator;

/* NULL for out-of-range values */
const char* wl_generator_name(wl_generator g);
wl_status wl_generator_from_name(const char* name, wl_generator* out);

/* exact entries of the generator matrix, split into real and imaginary parts */
wl_status wl_generator_entries(wl_generator g, double re[16], double im[16]);

/* exp(-i xi G) as a real Lorentz matrix */
wl_status wl_exp_generator(wl_generator g, double xi, double m[16]);

/* order_b_g_binv nonzero selects B G B^{-1}, zero selects B^{-1} G B */
wl_status wl_boost_conjugate(wl_generator g, double eta, int order_b_g_binv,
                             double re[16], double im[16]);

typedef struct wl_contraction_fit {
  double eta;
  double fitted_scale;
  double residual_norm;
} wl_contraction_fit;

/* j must be WL_GEN_J1 or WL_GEN_J2; eta must be >= 0 */
wl_status wl_contraction_fit_run(wl_generator j, double eta,
                                 int order_b_g_binv, wl_contraction_fit* out);

wl_status wl_leaves_invariant(const double m[16], const double p[4], double tol,
                              int* out);

/* eps transverse polarization, p light-like along +z, which in {N1, N2} */
wl_status wl_gauge_shift_residual(const double eps[4], const double p[4],
                                  double xi, wl_generator which, double* out);

/* ----------------------------------------------------------- oscillator */

wl_status wl_to_lightcone(double z, double t, double* u, double* v);
wl_status wl_from_lightcone(double u, double v, double* z, double* t);
wl_status wl_boost_lightcone(double u, double v, double eta, double* u_out,
                             double* v_out);

/* physicists' Hermite polynomial H_n(x) */
wl_status wl_hermite(int n, double x, double* out);

wl_status wl_psi(int n, double eta, double z, double t, double* out);
wl_status wl_psi_norm(int n, double eta, double tol, double* out);
wl_status wl_psi_overlap(int m, int n, double eta, double tol, double* out);

/* finite-difference eigenvalue residual at lambda = n + 1, or explicit lambda */
wl_status wl_fkr_residual(int n, double h, double* out);
wl_status wl_fkr_residual_lambda(int n, double h, double lambda, double* out);

/* ------------------------------------------------------------- spectral */

double wl_kernel_phase(double qz, double q0, double z, double t);

wl_status wl_lightcone_momentum(double qz, double q0, double* qu, double* qv);

wl_status wl_phi_ground(double eta, double qz, double q0, double* out);

/* numeric Fourier transform of mode n at one momentum point */
wl_status wl_fourier_transform(int n, double eta, double qz, double q0,
                               double tol, double* re, double* im);

/* ---------------------------------------------------------- observables */

typedef struct wl_moment_report {
  double eta;
  double var_z;
  double var_t;
  double var_u;
  double var_v;
  double var_qz;
  double var_q0;
  double var_qu;
  double var_qv;
  double product_z_qz;
  double product_u_qu;
  double product_v_qv;
} wl_moment_report;

wl_status wl_second_moments(double eta, wl_moment_report* out);
wl_status wl_moments_quadrature(double eta, double tol, wl_moment_report* out);

/* e^{-2 eta}: overlap time fraction seen from the boosted frame */
wl_status wl_interaction_time_ratio(double eta, double* out);

/* momentum_axis nonzero evaluates the q_z marginal, zero the z marginal */
wl_status wl_longitudinal_density(double eta, int momentum_axis, double x,
                                  double* out);

/* --------------------------------------------------------------- fields */

typedef struct wl_field wl_field;

wl_status wl_field_sample_psi(int n, double eta, double z_min, double z_max,
                              int z_count, double t_min, double t_max,
                              int t_count, wl_field** out);

/* ground-state momentum density; closed form, |eta| <= 4 */
wl_status wl_field_sample_phi(double eta, double qz_min, double qz_max,
                              int qz_count, double q0_min, double q0_max,
                              int q0_count, wl_field** out);

/* half-range that covers the squeezed distribution at this rapidity */
wl_status wl_default_grid_range(double eta, double* out);

wl_status wl_field_shape(const wl_field* f, int* rows, int* cols);
wl_status wl_field_value(const wl_field* f, int i, int j, double* out);
wl_status wl_field_to_csv(const wl_field* f, char** out);
void wl_field_free(wl_field* f);

/* ---------------------------------------------------------- verification */

typedef struct wl_report wl_report;

/* suite in {algebra, contraction, oscillator, spectral, moments, all} */
wl_status wl_verify_run(const char* suite, double quad_tol, wl_report** out);

int wl_report_count(const wl_report* r);
int wl_report_all_passed(const wl_report* r);

/* NULL / -1 on index out of range */
const char* wl_report_entry_name(const wl_report* r, int i);
int wl_report_entry_passed(const wl_report* r, int i);

/* entry as a single JSON object line */
wl_status wl_report_entry_json(const wl_report* r, int i, char** out);

void wl_report_free(wl_report* r);

void wl_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WIGNERLAB_H */
