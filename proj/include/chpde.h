/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * C API over the solver core: opaque handles, integer status codes,
 * thread-local error messages. All array outputs are caller-allocated;
 * query the element count first.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_H
#define CHPDE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ch_status {
  CH_OK = 0,
  CH_ERR_CONTRACT = 1,        /* precondition violated (CLI exit 2) */
  CH_ERR_NONINVERTIBLE = 2,   /* operator kernel hit (zero-mean rule) */
  CH_ERR_NONFINITE = 3,
  CH_ERR_NOT_CONVERGED = 4,
  CH_ERR_TRIVIAL_LIMIT = 5,
  CH_ERR_NO_PROFILE_FOUND = 6,
  CH_ERR_NOT_ENOUGH_DATA = 7,
  CH_ERR_INTEGRATION_STALLED = 8,
  CH_ERR_CONTINUATION_LOST = 9,
  CH_ERR_NO_TURNING_POINT = 10,
  CH_ERR_FIT_UNRELIABLE = 11,
  CH_ERR_NUMERIC = 12,        /* other numeric failure (CLI exit 3) */
  CH_ERR_BAD_HANDLE = 13
} ch_status;

const char* ch_version(void);
const char* ch_status_name(ch_status s);
/* Message for the most recent error on this thread. */
const char* ch_last_error(void);

/* ------------------------------------------------------------------ grid */

typedef struct ch_grid ch_grid;

#define CH_BC_NAVIER 0
#define CH_BC_PERIODIC 1

ch_status ch_grid_line(double L, int n, int bc, ch_grid** out);
ch_status ch_grid_radial(int N, double R, int n, ch_grid** out);
void ch_grid_free(ch_grid* g);
int ch_grid_points(const ch_grid* g);
double ch_grid_spacing(const ch_grid* g);
ch_status ch_grid_coords(const ch_grid* g, double* out);

/* ----------------------------------------------------------------- field */

typedef struct ch_field ch_field;

ch_status ch_field_create(const ch_grid* g, const double* values, ch_field** out);
void ch_field_free(ch_field* f);
int ch_field_size(const ch_field* f);
ch_status ch_field_values(const ch_field* f, double* out);

/* core operators */
ch_status ch_sine_coefficients(const ch_field* f, double* out);
ch_status ch_laplacian(const ch_field* f, ch_field** out);
ch_status ch_inverse_laplacian(const ch_field* f, ch_field** out);
ch_status ch_biharmonic(const ch_field* f, ch_field** out);

typedef struct ch_norms {
  double l2;
  double linf;
  double h1_semi;
  double lp1;
  double hminus1;
  int hminus1_defined;
} ch_norms;
ch_status ch_field_norms(const ch_field* f, double p, ch_norms* out);

/* -------------------------------------------------------------- simulate */

typedef struct ch_sim_config {
  double p;
  double gamma;
  int sign_stable; /* 1: "+" diffusion sign (decay), 0: "-" (blow-up) */
  double dt0;
  double dt_min;
  double t_end;
  double blowup_threshold;
  int snapshot_stride;
  int nonlinear; /* diagnostic switch; 1 normally */
} ch_sim_config;

#define CH_SIM_COMPLETED 0
#define CH_SIM_BLOWUP 1
#define CH_SIM_DT_UNDERFLOW 2
#define CH_SIM_NONFINITE 3

typedef struct ch_sim_result ch_sim_result;

ch_status ch_sim_run(const ch_sim_config* cfg, const ch_field* u0, ch_sim_result** out);
void ch_sim_result_free(ch_sim_result* r);
int ch_sim_status(const ch_sim_result* r);
double ch_sim_T_est(const ch_sim_result* r);
double ch_sim_fit_exponent(const ch_sim_result* r);
int ch_sim_fit_reliable(const ch_sim_result* r);
/* 1 when the step size had collapsed when the threshold fired (the
 * corroborating signal that the threshold crossing is not a transient) */
int ch_sim_dt_collapsed(const ch_sim_result* r);
/* adaptive-step constants in force during the run (for reproducibility) */
void ch_sim_adapt_constants(const ch_sim_result* r, double* halve_threshold,
                            double* double_threshold);
int ch_sim_series_len(const ch_sim_result* r);
/* columns t, sup, energy, mass, h1; each length series_len */
ch_status ch_sim_series(const ch_sim_result* r, double* t, double* sup, double* energy,
                        double* mass, double* h1);
int ch_sim_snapshot_count(const ch_sim_result* r);
ch_status ch_sim_snapshot(const ch_sim_result* r, int i, double* t, ch_field** u);

ch_status ch_step_imex(const ch_field* u, const ch_sim_config* cfg, double dt, ch_field** out);
ch_status ch_energy(const ch_field* u, double p, int sign_stable, double* out);
ch_status ch_mass(const ch_field* u, double* out);
ch_status ch_fit_blowup_rate(const double* t, const double* sup, int len, double* T_est,
                             double* exponent);

/* --------------------------------------------------------------- rescale */

#define CH_RULE_SOBOLEV 0
#define CH_RULE_LP1 1

typedef struct ch_scaling_report {
  double p;
  int N;
  double alpha;
  int rule;
  double gamma1;
  int gamma1_defined;
  double gamma2;
  double a_k_exponent;
  double p_star; /* HUGE_VAL when infinite */
  int p_star_finite;
  double p_star_alpha;
  int p_star_alpha_defined;
  int delta_behavior; /* 0 vanishes, 1 unit, 2 grows */
} ch_scaling_report;

ch_status ch_scaling_exponents(double p, int N, double alpha, int rule, ch_scaling_report* out);

/* valid: caller array of y_grid points, set 1 where the frame is defined
 * (coordinates outside the data cone are dropped, never extrapolated) */
ch_status ch_to_similarity(const ch_field* u, double p, double T, double t,
                           const ch_grid* y_grid, double x_center, ch_field** v, int* valid);

ch_status ch_extract_profile(const ch_sim_result* r, double p, const ch_grid* y_grid,
                             ch_field** f, int* valid, double* convergence_gap, double* T_est);

/* -------------------------------------------------------------- profiles */

typedef struct ch_profile ch_profile;

/* f(y_max), f', f'', f''' of the two-term asymptotic bundle */
ch_status ch_tail_state(double y, double p, double A, double C, double out[4]);

ch_status ch_shoot(double p, int N, double A, double C, double y_max, ch_profile** out);
ch_status ch_extension_shoot(double p, int N, double A, double B, double C, double y_max,
                             double residual[2]);
/* seed may be NULL (documented sweep windows are used) */
ch_status ch_solve_profile(double p, int N, const double* seed_A, const double* seed_C,
                           ch_profile** out);
void ch_profile_free(ch_profile* pr);
int ch_profile_len(const ch_profile* pr);
ch_status ch_profile_data(const ch_profile* pr, double* y, double* f, double* f1, double* f2,
                          double* f3);
ch_status ch_profile_params(const ch_profile* pr, double* A, double* C, double residual[2]);
ch_status ch_profile_mass(const ch_profile* pr, double* mass, int* nonintegrable_tail);

ch_status ch_limit_profile_g0(double p, double z_max, int* len, double* z, double* g);
double ch_oscillation_frequency(double p, double eps);

typedef struct ch_mu_branch ch_mu_branch;
ch_status ch_mu_continuation(double p, int N, int steps, ch_mu_branch** out);
void ch_mu_branch_free(ch_mu_branch* b);
int ch_mu_branch_len(const ch_mu_branch* b);
int ch_mu_branch_lost(const ch_mu_branch* b);
double ch_mu_branch_last_good(const ch_mu_branch* b);
ch_status ch_mu_branch_point(const ch_mu_branch* b, int i, double* mu, double* A, double* C,
                             double residual[2]);

/* -------------------------------------------------------------- spectral */

typedef struct ch_hermite ch_hermite;

/* beta: multi-index of length N (1 <= N <= 3) */
ch_status ch_hermite_create(const int* beta, int N, ch_hermite** out);
void ch_hermite_free(ch_hermite* h);
/* eigenvalue -|beta|/4 as an exact fraction */
ch_status ch_hermite_eigenvalue(const ch_hermite* h, int64_t* num, int64_t* den);
int64_t ch_hermite_beta_factorial(const ch_hermite* h);
int ch_hermite_term_count(const ch_hermite* h);
/* term i: monomial exponents (length 3) and rational coefficient */
ch_status ch_hermite_term(const ch_hermite* h, int i, int exps[3], int64_t* num, int64_t* den);
/* 1 when (-Delta^2 - y.grad/4) psi = -(|beta|/4) psi holds exactly */
int ch_hermite_identity_exact(const ch_hermite* h);
/* polynomial value / sqrt(beta!) at a point */
double ch_hermite_eval(const ch_hermite* h, const double y[3]);

/* kernel table: F and derivatives 0..max_m (max_m <= 8) at given points */
ch_status ch_kernel_table(const double* y, int len, int max_m, double* out /* (max_m+1)*len */);
ch_status ch_eigenfunction_samples(int k, const double* y, int len, double* out);
ch_status ch_biorthonormality(int mu, int nu, double* out);
double ch_kernel_moment(int s);
ch_status ch_h_beta(const int* beta, int N, double d, double* out);
double ch_alpha_beta(int order, int N);
ch_status ch_type2_balance(int order, int N, double* phi_rate, double* c_rate);

/* ---------------------------------------------------------------- steady */

ch_status ch_biharmonic_eigs(double L, int count, double* lambda);
double ch_critical_gamma(double p, double lambda1);
ch_status ch_functional_F(const ch_field* u, double gamma, double p, double* out);
ch_status ch_frechet_residual(const ch_field* u, double gamma, double p, ch_field** out);
ch_status ch_fibering_map(const ch_field* v, double gamma, double p, const double* r, int len,
                          double* phi);
ch_status ch_r_of_v(const ch_field* v, double gamma, double p, double* out);
ch_status ch_reduced_functional_G(const ch_field* v, double gamma, double p, double* out);

typedef struct ch_steady ch_steady;

#define CH_FIBERING_UNIQUE_MAX 0
#define CH_FIBERING_NONE_POSITIVE 1
#define CH_FIBERING_MULTI 2

ch_status ch_solve_steady(double L, double p, double gamma, int modes, const ch_field* seed,
                          ch_steady** out);
void ch_steady_free(ch_steady* st);
ch_status ch_steady_field(const ch_steady* st, ch_field** out);
ch_status ch_steady_info(const ch_steady* st, double* residual_norm, double* critical_value,
                         double* F_value, int* fibering_class, int* sign_changes);

ch_status ch_category_census(double gamma, double L, int max_k, double* nu /* max_k */,
                             int* count);

/* -------------------------------------------------------------- patterns */

typedef struct ch_exponents {
  int N;
  double alpha;
  double p0;
  double p1;
  double p_sobolev;
  int p_sobolev_defined;
  double p_star; /* HUGE_VAL when infinite */
  int p_star_finite;
  double p_star_alpha;
  int p_star_alpha_defined;
  double p_N;
  int p_N_defined;
  double p_JL;
  int p_JL_defined;
} ch_exponents;

ch_status ch_exponent_report(int N, double alpha, ch_exponents* out);

typedef struct ch_singular_state {
  double p;
  int N;
  double mu;
  double D;
  double C_star;
  double c;
} ch_singular_state;

ch_status ch_singular_state_get(double p, int N, ch_singular_state* out);
ch_status ch_loewner_nirenberg(double xi, double d, int N, double* out);
ch_status ch_hardy_criterion(double p, int N, double* c, double* c_H, int* satisfied);
/* roots[4] = {2, 3, gamma+, gamma-}; at c = c_H the pair is a double root */
ch_status ch_characteristic_roots(double c, int N, double roots[4], int* double_root,
                                  int* complex_pair);
ch_status ch_blowup_rate(double lambda_hat, double p, int N, double* rho, double* mu_region2,
                         char* s_law, int s_law_cap);
ch_status ch_final_profile_exponent(double p, int N, double* gamma, int* below_inv_pm1,
                                    int* below_one);
ch_status ch_perturbation_bound(const ch_field* u_radial, double c, int N, double* lhs,
                                double* ratio);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHPDE_H */
