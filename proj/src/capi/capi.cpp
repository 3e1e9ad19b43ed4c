/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "chpde.h"

#include <cmath>
#include <cstring>
#include <string>

#include "core/errors.hpp"
#include "core/grid.hpp"
#include "core/norms.hpp"
#include "core/operators.hpp"
#include "patterns/patterns.hpp"
#include "profiles/shoot.hpp"
#include "profiles/tail.hpp"
#include "rescale/rescale.hpp"
#include "sim/simulate.hpp"
#include "spectral/hermite.hpp"
#include "spectral/kernel.hpp"
#include "spectral/typeii.hpp"
#include "steady/steady.hpp"

struct ch_grid {
  ch::Grid g;
};
struct ch_field {
  ch::Field f;
};
struct ch_sim_result {
  ch::SimResult r;
};
struct ch_profile {
  ch::Profile p;
};
struct ch_mu_branch {
  ch::MuBranch b;
};
struct ch_hermite {
  ch::HermiteEigenfunction h;
  std::vector<std::pair<std::array<int, 3>, ch::Rational>> terms;
};
struct ch_steady {
  ch::SteadyState st;
};

namespace {

thread_local std::string g_last_error;

ch_status fail(ch_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class Fn>
ch_status wrap(Fn&& fn) {
  try {
    fn();
    return CH_OK;
  } catch (const ch::ContractViolation& e) {
    return fail(CH_ERR_CONTRACT, e.what());
  } catch (const ch::NonInvertible& e) {
    return fail(CH_ERR_NONINVERTIBLE, e.what());
  } catch (const ch::NonfiniteValue& e) {
    return fail(CH_ERR_NONFINITE, e.what());
  } catch (const ch::NotConverged& e) {
    return fail(CH_ERR_NOT_CONVERGED, e.what());
  } catch (const ch::TrivialLimit& e) {
    return fail(CH_ERR_TRIVIAL_LIMIT, e.what());
  } catch (const ch::NoProfileFound& e) {
    return fail(CH_ERR_NO_PROFILE_FOUND, e.what());
  } catch (const ch::NotEnoughData& e) {
    return fail(CH_ERR_NOT_ENOUGH_DATA, e.what());
  } catch (const ch::IntegrationStalled& e) {
    return fail(CH_ERR_INTEGRATION_STALLED, e.what());
  } catch (const ch::ContinuationLost& e) {
    return fail(CH_ERR_CONTINUATION_LOST, e.what());
  } catch (const ch::NoTurningPoint& e) {
    return fail(CH_ERR_NO_TURNING_POINT, e.what());
  } catch (const ch::NumericError& e) {
    return fail(CH_ERR_NUMERIC, e.what());
  } catch (const std::exception& e) {
    return fail(CH_ERR_NUMERIC, e.what());
  }
}

ch_status check(const void* h, const char* what) {
  if (!h) return fail(CH_ERR_BAD_HANDLE, what);
  return CH_OK;
}

ch::SimConfig to_config(const ch_sim_config* cfg, const ch::Grid& g) {
  ch::SimConfig c;
  c.p = cfg->p;
  c.gamma = cfg->gamma;
  c.sign_stable = cfg->sign_stable != 0;
  c.grid = g;
  c.dt0 = cfg->dt0;
  c.dt_min = cfg->dt_min;
  c.t_end = cfg->t_end;
  c.blowup_threshold = cfg->blowup_threshold;
  c.snapshot_stride = cfg->snapshot_stride;
  c.nonlinear = cfg->nonlinear != 0;
  return c;
}

}  // namespace

extern "C" {

const char* ch_version(void) { return "0.1.0"; }

const char* ch_status_name(ch_status s) {
  switch (s) {
    case CH_OK: return "ok";
    case CH_ERR_CONTRACT: return "contract-violation";
    case CH_ERR_NONINVERTIBLE: return "non-invertible";
    case CH_ERR_NONFINITE: return "nonfinite";
    case CH_ERR_NOT_CONVERGED: return "not-converged";
    case CH_ERR_TRIVIAL_LIMIT: return "trivial-limit";
    case CH_ERR_NO_PROFILE_FOUND: return "no-profile-found";
    case CH_ERR_NOT_ENOUGH_DATA: return "not-enough-data";
    case CH_ERR_INTEGRATION_STALLED: return "integration-stalled";
    case CH_ERR_CONTINUATION_LOST: return "continuation-lost";
    case CH_ERR_NO_TURNING_POINT: return "no-turning-point";
    case CH_ERR_FIT_UNRELIABLE: return "fit-unreliable";
    case CH_ERR_NUMERIC: return "numeric-error";
    case CH_ERR_BAD_HANDLE: return "bad-handle";
  }
  return "unknown";
}

const char* ch_last_error(void) { return g_last_error.c_str(); }

/* grid */

ch_status ch_grid_line(double L, int n, int bc, ch_grid** out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    *out = new ch_grid{ch::Grid::line(
        L, n, bc == CH_BC_PERIODIC ? ch::Grid::Bc::periodic : ch::Grid::Bc::navier)};
  });
}

ch_status ch_grid_radial(int N, double R, int n, ch_grid** out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] { *out = new ch_grid{ch::Grid::radial(N, R, n)}; });
}

void ch_grid_free(ch_grid* g) { delete g; }
int ch_grid_points(const ch_grid* g) { return g ? g->g.n : 0; }
double ch_grid_spacing(const ch_grid* g) { return g ? g->g.spacing() : 0.0; }

ch_status ch_grid_coords(const ch_grid* g, double* out) {
  if (ch_status s = check(g, "null grid"); s) return s;
  const auto x = g->g.coords();
  std::memcpy(out, x.data(), x.size() * sizeof(double));
  return CH_OK;
}

/* field */

ch_status ch_field_create(const ch_grid* g, const double* values, ch_field** out) {
  if (ch_status s = check(g, "null grid"); s) return s;
  if (!values || !out) return fail(CH_ERR_BAD_HANDLE, "null values/out");
  return wrap([&] {
    std::vector<double> v(values, values + g->g.n);
    auto* f = new ch_field{ch::Field(g->g, std::move(v))};
    f->f.ensure_finite("ch_field_create");
    *out = f;
  });
}

void ch_field_free(ch_field* f) { delete f; }
int ch_field_size(const ch_field* f) { return f ? f->f.size() : 0; }

ch_status ch_field_values(const ch_field* f, double* out) {
  if (ch_status s = check(f, "null field"); s) return s;
  std::memcpy(out, f->f.values.data(), f->f.values.size() * sizeof(double));
  return CH_OK;
}

ch_status ch_sine_coefficients(const ch_field* f, double* out) {
  if (ch_status s = check(f, "null field"); s) return s;
  return wrap([&] {
    const auto c = ch::sine_coefficients(f->f);
    std::memcpy(out, c.data(), c.size() * sizeof(double));
  });
}

ch_status ch_laplacian(const ch_field* f, ch_field** out) {
  if (ch_status s = check(f, "null field"); s) return s;
  return wrap([&] { *out = new ch_field{ch::laplacian(f->f)}; });
}

ch_status ch_inverse_laplacian(const ch_field* f, ch_field** out) {
  if (ch_status s = check(f, "null field"); s) return s;
  return wrap([&] { *out = new ch_field{ch::inverse_laplacian(f->f)}; });
}

ch_status ch_biharmonic(const ch_field* f, ch_field** out) {
  if (ch_status s = check(f, "null field"); s) return s;
  return wrap([&] { *out = new ch_field{ch::biharmonic(f->f)}; });
}

ch_status ch_field_norms(const ch_field* f, double p, ch_norms* out) {
  if (ch_status s = check(f, "null field"); s) return s;
  return wrap([&] {
    const ch::Norms n = ch::norms(f->f, p);
    out->l2 = n.l2;
    out->linf = n.linf;
    out->h1_semi = n.h1_semi;
    out->lp1 = n.lp1;
    out->hminus1 = n.hminus1;
    out->hminus1_defined = n.hminus1_defined ? 1 : 0;
  });
}

/* simulate */

ch_status ch_sim_run(const ch_sim_config* cfg, const ch_field* u0, ch_sim_result** out) {
  if (ch_status s = check(u0, "null field"); s) return s;
  if (!cfg || !out) return fail(CH_ERR_BAD_HANDLE, "null cfg/out");
  return wrap([&] { *out = new ch_sim_result{ch::run(to_config(cfg, u0->f.grid), u0->f)}; });
}

void ch_sim_result_free(ch_sim_result* r) { delete r; }
int ch_sim_status(const ch_sim_result* r) { return static_cast<int>(r->r.status); }
double ch_sim_T_est(const ch_sim_result* r) { return r->r.T_est; }
double ch_sim_fit_exponent(const ch_sim_result* r) { return r->r.fit_exponent; }
int ch_sim_fit_reliable(const ch_sim_result* r) { return r->r.fit_reliable ? 1 : 0; }
int ch_sim_dt_collapsed(const ch_sim_result* r) { return r->r.dt_collapsed ? 1 : 0; }

void ch_sim_adapt_constants(const ch_sim_result* r, double* halve_threshold,
                            double* double_threshold) {
  if (!r) return;
  if (halve_threshold) *halve_threshold = r->r.adapt_halve_threshold;
  if (double_threshold) *double_threshold = r->r.adapt_double_threshold;
}
int ch_sim_series_len(const ch_sim_result* r) { return static_cast<int>(r->r.series.size()); }

ch_status ch_sim_series(const ch_sim_result* r, double* t, double* sup, double* energy,
                        double* mass, double* h1) {
  if (ch_status s = check(r, "null result"); s) return s;
  for (std::size_t i = 0; i < r->r.series.size(); ++i) {
    const auto& rec = r->r.series[i];
    if (t) t[i] = rec.t;
    if (sup) sup[i] = rec.sup;
    if (energy) energy[i] = rec.energy;
    if (mass) mass[i] = rec.mass;
    if (h1) h1[i] = rec.h1;
  }
  return CH_OK;
}

int ch_sim_snapshot_count(const ch_sim_result* r) {
  return static_cast<int>(r->r.snapshots.size());
}

ch_status ch_sim_snapshot(const ch_sim_result* r, int i, double* t, ch_field** u) {
  if (ch_status s = check(r, "null result"); s) return s;
  if (i < 0 || i >= static_cast<int>(r->r.snapshots.size()))
    return fail(CH_ERR_CONTRACT, "snapshot index out of range");
  if (t) *t = r->r.snapshots[i].first;
  if (u) *u = new ch_field{r->r.snapshots[i].second};
  return CH_OK;
}

ch_status ch_step_imex(const ch_field* u, const ch_sim_config* cfg, double dt, ch_field** out) {
  if (ch_status s = check(u, "null field"); s) return s;
  return wrap([&] { *out = new ch_field{ch::step_imex(u->f, to_config(cfg, u->f.grid), dt)}; });
}

ch_status ch_energy(const ch_field* u, double p, int sign_stable, double* out) {
  if (ch_status s = check(u, "null field"); s) return s;
  return wrap([&] { *out = ch::energy(u->f, p, sign_stable != 0); });
}

ch_status ch_mass(const ch_field* u, double* out) {
  if (ch_status s = check(u, "null field"); s) return s;
  return wrap([&] { *out = ch::mass(u->f); });
}

ch_status ch_fit_blowup_rate(const double* t, const double* sup, int len, double* T_est,
                             double* exponent) {
  if (!t || !sup) return fail(CH_ERR_BAD_HANDLE, "null arrays");
  ch::BlowupFit fit;
  const ch_status s = wrap([&] {
    fit = ch::fit_blowup_rate(std::vector<double>(t, t + len),
                              std::vector<double>(sup, sup + len));
  });
  if (s) return s;
  if (T_est) *T_est = fit.T_est;
  if (exponent) *exponent = fit.exponent;
  if (!fit.reliable) return fail(CH_ERR_FIT_UNRELIABLE, "non-monotone or degenerate tail");
  return CH_OK;
}

/* rescale */

ch_status ch_scaling_exponents(double p, int N, double alpha, int rule, ch_scaling_report* out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    const ch::ScalingReport r = ch::scaling_exponents(
        p, N, alpha, rule == CH_RULE_LP1 ? ch::ScalingRule::lp1 : ch::ScalingRule::sobolev);
    out->p = r.p;
    out->N = r.N;
    out->alpha = r.alpha;
    out->rule = rule;
    out->gamma1 = r.gamma1;
    out->gamma1_defined = r.gamma1_defined ? 1 : 0;
    out->gamma2 = r.gamma2;
    out->a_k_exponent = r.a_k_exponent;
    out->p_star = r.p_star;
    out->p_star_finite = r.p_star_finite ? 1 : 0;
    out->p_star_alpha = r.p_star_alpha;
    out->p_star_alpha_defined = r.p_star_alpha_defined ? 1 : 0;
    out->delta_behavior = static_cast<int>(r.delta_behavior);
  });
}

ch_status ch_to_similarity(const ch_field* u, double p, double T, double t,
                           const ch_grid* y_grid, double x_center, ch_field** v, int* valid) {
  if (ch_status s = check(u, "null field"); s) return s;
  if (ch_status s = check(y_grid, "null grid"); s) return s;
  return wrap([&] {
    ch::SimilarityFrame fr = ch::to_similarity(u->f, p, T, t, y_grid->g, x_center);
    *v = new ch_field{std::move(fr.v)};
    if (valid)
      for (int j = 0; j < y_grid->g.n; ++j) valid[j] = fr.valid[j];
  });
}

ch_status ch_extract_profile(const ch_sim_result* r, double p, const ch_grid* y_grid,
                             ch_field** f, int* valid, double* convergence_gap, double* T_est) {
  if (ch_status s = check(r, "null result"); s) return s;
  if (ch_status s = check(y_grid, "null grid"); s) return s;
  return wrap([&] {
    ch::ExtractedProfile ep = ch::extract_profile(r->r, p, y_grid->g);
    *f = new ch_field{std::move(ep.f)};
    if (valid)
      for (int j = 0; j < y_grid->g.n; ++j) valid[j] = ep.valid[j];
    if (convergence_gap) *convergence_gap = ep.convergence_gap;
    if (T_est) *T_est = ep.T_est;
  });
}

/* profiles */

ch_status ch_tail_state(double y, double p, double A, double C, double out[4]) {
  return wrap([&] {
    ch::BundleParams bp{A, C, 0.0, p};
    const auto st = ch::tail_state(y, bp);
    for (int i = 0; i < 4; ++i) out[i] = st[i];
  });
}

ch_status ch_shoot(double p, int N, double A, double C, double y_max, ch_profile** out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  const ch_status s = wrap([&] {
    ch::ShootOptions opts;
    opts.y_max = y_max;
    *out = new ch_profile{ch::shoot(p, N, A, C, opts)};
  });
  if (s) return s;
  if ((*out)->p.stalled) return fail(CH_ERR_INTEGRATION_STALLED, "step-size underflow");
  return CH_OK;
}

ch_status ch_extension_shoot(double p, int N, double A, double B, double C, double y_max,
                             double residual[2]) {
  return wrap([&] {
    ch::ShootOptions opts;
    opts.y_max = y_max;
    const ch::Profile pr = ch::extension_shoot(p, N, A, B, C, opts);
    if (pr.stalled) throw ch::IntegrationStalled("extension shoot stalled");
    residual[0] = pr.residual[0];
    residual[1] = pr.residual[1];
  });
}

ch_status ch_solve_profile(double p, int N, const double* seed_A, const double* seed_C,
                           ch_profile** out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    if (seed_A && seed_C) {
      ch::BundleParams seed{*seed_A, *seed_C, 0.0, p};
      *out = new ch_profile{ch::solve_profile(p, N, &seed)};
    } else {
      *out = new ch_profile{ch::solve_profile(p, N)};
    }
  });
}

void ch_profile_free(ch_profile* pr) { delete pr; }
int ch_profile_len(const ch_profile* pr) { return pr ? static_cast<int>(pr->p.y.size()) : 0; }

ch_status ch_profile_data(const ch_profile* pr, double* y, double* f, double* f1, double* f2,
                          double* f3) {
  if (ch_status s = check(pr, "null profile"); s) return s;
  const auto& P = pr->p;
  for (std::size_t i = 0; i < P.y.size(); ++i) {
    if (y) y[i] = P.y[i];
    if (f) f[i] = P.f[i];
    if (f1) f1[i] = P.f1[i];
    if (f2) f2[i] = P.f2[i];
    if (f3) f3[i] = P.f3[i];
  }
  return CH_OK;
}

ch_status ch_profile_params(const ch_profile* pr, double* A, double* C, double residual[2]) {
  if (ch_status s = check(pr, "null profile"); s) return s;
  if (A) *A = pr->p.params.A;
  if (C) *C = pr->p.params.C;
  if (residual) {
    residual[0] = pr->p.residual[0];
    residual[1] = pr->p.residual[1];
  }
  return CH_OK;
}

ch_status ch_profile_mass(const ch_profile* pr, double* mass, int* nonintegrable_tail) {
  if (ch_status s = check(pr, "null profile"); s) return s;
  return wrap([&] {
    const ch::ProfileMass m = ch::profile_mass(pr->p);
    if (mass) *mass = m.mass;
    if (nonintegrable_tail) *nonintegrable_tail = m.nonintegrable_tail ? 1 : 0;
  });
}

ch_status ch_limit_profile_g0(double p, double z_max, int* len, double* z, double* g) {
  if (!len) return fail(CH_ERR_BAD_HANDLE, "null len");
  return wrap([&] {
    const ch::G0Curve c = ch::limit_profile_g0(p, z_max);
    const int n = static_cast<int>(c.z.size());
    if (z && g) {
      const int copy = std::min(n, *len);
      std::memcpy(z, c.z.data(), copy * sizeof(double));
      std::memcpy(g, c.g.data(), copy * sizeof(double));
    }
    *len = n;
  });
}

double ch_oscillation_frequency(double p, double eps) {
  double v = 0;
  wrap([&] { v = ch::oscillation_frequency(p, eps); });
  return v;
}

ch_status ch_mu_continuation(double p, int N, int steps, ch_mu_branch** out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] { *out = new ch_mu_branch{ch::mu_continuation(p, N, steps)}; });
}

void ch_mu_branch_free(ch_mu_branch* b) { delete b; }
int ch_mu_branch_len(const ch_mu_branch* b) {
  return b ? static_cast<int>(b->b.points.size()) : 0;
}
int ch_mu_branch_lost(const ch_mu_branch* b) { return b && b->b.lost ? 1 : 0; }
double ch_mu_branch_last_good(const ch_mu_branch* b) { return b ? b->b.last_good_mu : 0.0; }

ch_status ch_mu_branch_point(const ch_mu_branch* b, int i, double* mu, double* A, double* C,
                             double residual[2]) {
  if (ch_status s = check(b, "null branch"); s) return s;
  if (i < 0 || i >= static_cast<int>(b->b.points.size()))
    return fail(CH_ERR_CONTRACT, "branch index out of range");
  const auto& pt = b->b.points[i];
  if (mu) *mu = pt.mu;
  if (A) *A = pt.profile.params.A;
  if (C) *C = pt.profile.params.C;
  if (residual) {
    residual[0] = pt.profile.residual[0];
    residual[1] = pt.profile.residual[1];
  }
  return CH_OK;
}

/* spectral */

ch_status ch_hermite_create(const int* beta, int N, ch_hermite** out) {
  if (!beta || !out) return fail(CH_ERR_BAD_HANDLE, "null beta/out");
  return wrap([&] {
    const ch::MultiIndex b(std::vector<int>(beta, beta + N));
    auto* h = new ch_hermite{ch::adjoint_eigenfunction(b), {}};
    for (const auto& [e, c] : h->h.poly.terms()) h->terms.emplace_back(e, c);
    *out = h;
  });
}

void ch_hermite_free(ch_hermite* h) { delete h; }

ch_status ch_hermite_eigenvalue(const ch_hermite* h, int64_t* num, int64_t* den) {
  if (ch_status s = check(h, "null hermite"); s) return s;
  if (num) *num = h->h.eigenvalue.num;
  if (den) *den = h->h.eigenvalue.den;
  return CH_OK;
}

int64_t ch_hermite_beta_factorial(const ch_hermite* h) { return h ? h->h.beta_factorial : 0; }
int ch_hermite_term_count(const ch_hermite* h) {
  return h ? static_cast<int>(h->terms.size()) : 0;
}

ch_status ch_hermite_term(const ch_hermite* h, int i, int exps[3], int64_t* num, int64_t* den) {
  if (ch_status s = check(h, "null hermite"); s) return s;
  if (i < 0 || i >= static_cast<int>(h->terms.size()))
    return fail(CH_ERR_CONTRACT, "term index out of range");
  const auto& [e, c] = h->terms[i];
  for (int k = 0; k < 3; ++k) exps[k] = e[k];
  if (num) *num = c.num;
  if (den) *den = c.den;
  return CH_OK;
}

int ch_hermite_identity_exact(const ch_hermite* h) {
  return h && ch::eigen_identity_exact(h->h) ? 1 : 0;
}

double ch_hermite_eval(const ch_hermite* h, const double y[3]) {
  return h ? h->h.eval({y[0], y[1], y[2]}) : 0.0;
}

ch_status ch_kernel_table(const double* y, int len, int max_m, double* out) {
  if (!y || !out) return fail(CH_ERR_BAD_HANDLE, "null arrays");
  if (max_m < 0 || max_m > 8) return fail(CH_ERR_CONTRACT, "max_m must be 0..8");
  return wrap([&] {
    const ch::KernelSamples ks = ch::kernel_F(std::vector<double>(y, y + len), 1, max_m);
    for (int m = 0; m <= max_m; ++m)
      std::memcpy(out + static_cast<std::size_t>(m) * len, ks.deriv[m].data(),
                  len * sizeof(double));
  });
}

ch_status ch_eigenfunction_samples(int k, const double* y, int len, double* out) {
  if (!y || !out) return fail(CH_ERR_BAD_HANDLE, "null arrays");
  return wrap([&] {
    const auto v = ch::eigenfunction_samples(k, std::vector<double>(y, y + len));
    std::memcpy(out, v.data(), len * sizeof(double));
  });
}

ch_status ch_biorthonormality(int mu, int nu, double* out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] { *out = ch::biorthonormality_check(mu, nu); });
}

double ch_kernel_moment(int s) {
  double v = 0;
  wrap([&] { v = ch::kernel_moment(s); });
  return v;
}

ch_status ch_h_beta(const int* beta, int N, double d, double* out) {
  if (!beta || !out) return fail(CH_ERR_BAD_HANDLE, "null beta/out");
  return wrap([&] { *out = ch::h_beta(ch::MultiIndex(std::vector<int>(beta, beta + N)), N, d); });
}

double ch_alpha_beta(int order, int N) {
  double v = 0;
  wrap([&] { v = ch::alpha_beta(order, N); });
  return v;
}

ch_status ch_type2_balance(int order, int N, double* phi_rate, double* c_rate) {
  return wrap([&] {
    const ch::Type2Balance b = ch::type2_balance(order, N);
    if (phi_rate) *phi_rate = b.phi_rate;
    if (c_rate) *c_rate = b.c_rate;
  });
}

/* steady */

ch_status ch_biharmonic_eigs(double L, int count, double* lambda) {
  if (!lambda) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    const auto v = ch::biharmonic_eigs(L, count);
    std::memcpy(lambda, v.data(), v.size() * sizeof(double));
  });
}

double ch_critical_gamma(double p, double lambda1) {
  double v = 0;
  wrap([&] { v = ch::critical_gamma(p, lambda1); });
  return v;
}

ch_status ch_functional_F(const ch_field* u, double gamma, double p, double* out) {
  if (ch_status s = check(u, "null field"); s) return s;
  return wrap([&] { *out = ch::functional_F(u->f, gamma, p); });
}

ch_status ch_frechet_residual(const ch_field* u, double gamma, double p, ch_field** out) {
  if (ch_status s = check(u, "null field"); s) return s;
  return wrap([&] { *out = new ch_field{ch::frechet_residual(u->f, gamma, p)}; });
}

ch_status ch_fibering_map(const ch_field* v, double gamma, double p, const double* r, int len,
                          double* phi) {
  if (ch_status s = check(v, "null field"); s) return s;
  return wrap([&] {
    const auto curve = ch::fibering_map(v->f, gamma, p, std::vector<double>(r, r + len));
    std::memcpy(phi, curve.data(), curve.size() * sizeof(double));
  });
}

ch_status ch_r_of_v(const ch_field* v, double gamma, double p, double* out) {
  if (ch_status s = check(v, "null field"); s) return s;
  return wrap([&] { *out = ch::r_of_v(v->f, gamma, p); });
}

ch_status ch_reduced_functional_G(const ch_field* v, double gamma, double p, double* out) {
  if (ch_status s = check(v, "null field"); s) return s;
  return wrap([&] { *out = ch::reduced_functional_G(v->f, gamma, p); });
}

ch_status ch_solve_steady(double L, double p, double gamma, int modes, const ch_field* seed,
                          ch_steady** out) {
  if (ch_status s = check(seed, "null seed"); s) return s;
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    ch::EllipticConfig cfg;
    cfg.L = L;
    cfg.p = p;
    cfg.gamma = gamma;
    cfg.modes = modes;
    *out = new ch_steady{ch::solve_steady(cfg, seed->f)};
  });
}

void ch_steady_free(ch_steady* st) { delete st; }

ch_status ch_steady_field(const ch_steady* st, ch_field** out) {
  if (ch_status s = check(st, "null steady"); s) return s;
  *out = new ch_field{st->st.u};
  return CH_OK;
}

ch_status ch_steady_info(const ch_steady* st, double* residual_norm, double* critical_value,
                         double* F_value, int* fibering_class, int* sign_changes) {
  if (ch_status s = check(st, "null steady"); s) return s;
  if (residual_norm) *residual_norm = st->st.residual_norm;
  if (critical_value) *critical_value = st->st.critical_value;
  if (F_value) *F_value = st->st.F_value;
  if (fibering_class) *fibering_class = static_cast<int>(st->st.fibering_class);
  if (sign_changes) *sign_changes = st->st.sign_changes;
  return CH_OK;
}

ch_status ch_category_census(double gamma, double L, int max_k, double* nu, int* count) {
  return wrap([&] {
    const ch::Census c = ch::category_census(gamma, L, max_k);
    if (nu) std::memcpy(nu, c.nu.data(), c.nu.size() * sizeof(double));
    if (count) *count = c.count;
  });
}

/* patterns */

ch_status ch_exponent_report(int N, double alpha, ch_exponents* out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    const ch::ExponentReport r = ch::exponent_report(N, alpha);
    out->N = r.N;
    out->alpha = r.alpha;
    out->p0 = r.p0;
    out->p1 = r.p1;
    out->p_sobolev = r.p_sobolev;
    out->p_sobolev_defined = r.p_sobolev_defined ? 1 : 0;
    out->p_star = r.p_star;
    out->p_star_finite = r.p_star_finite ? 1 : 0;
    out->p_star_alpha = r.p_star_alpha;
    out->p_star_alpha_defined = r.p_star_alpha_defined ? 1 : 0;
    out->p_N = r.p_N;
    out->p_N_defined = r.p_N_defined ? 1 : 0;
    out->p_JL = r.p_JL;
    out->p_JL_defined = r.p_JL_defined ? 1 : 0;
  });
}

ch_status ch_singular_state_get(double p, int N, ch_singular_state* out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] {
    const ch::SingularState s = ch::singular_state(p, N);
    out->p = s.p;
    out->N = s.N;
    out->mu = s.mu;
    out->D = s.D;
    out->C_star = s.C_star;
    out->c = s.c;
  });
}

ch_status ch_loewner_nirenberg(double xi, double d, int N, double* out) {
  if (!out) return fail(CH_ERR_BAD_HANDLE, "null out");
  return wrap([&] { *out = ch::loewner_nirenberg(xi, d, N); });
}

ch_status ch_hardy_criterion(double p, int N, double* c, double* c_H, int* satisfied) {
  return wrap([&] {
    const ch::HardyCheck h = ch::hardy_criterion(p, N);
    if (c) *c = h.c;
    if (c_H) *c_H = h.c_H;
    if (satisfied) *satisfied = h.satisfied ? 1 : 0;
  });
}

ch_status ch_characteristic_roots(double c, int N, double roots[4], int* double_root,
                                  int* complex_pair) {
  return wrap([&] {
    const ch::CharacteristicRoots r = ch::characteristic_roots(c, N);
    for (int i = 0; i < 4; ++i) roots[i] = r.roots[i];
    if (double_root) *double_root = r.double_root ? 1 : 0;
    if (complex_pair) *complex_pair = r.complex_pair ? 1 : 0;
  });
}

ch_status ch_blowup_rate(double lambda_hat, double p, int N, double* rho, double* mu_region2,
                         char* s_law, int s_law_cap) {
  return wrap([&] {
    const ch::BlowupRate b = ch::blowup_rate(lambda_hat, p, N);
    if (rho) *rho = b.rho;
    if (mu_region2) *mu_region2 = b.mu_region2;
    if (s_law && s_law_cap > 0) {
      std::strncpy(s_law, b.s_law.c_str(), s_law_cap - 1);
      s_law[s_law_cap - 1] = '\0';
    }
  });
}

ch_status ch_final_profile_exponent(double p, int N, double* gamma, int* below_inv_pm1,
                                    int* below_one) {
  return wrap([&] {
    const ch::FinalProfileExponent f = ch::final_profile_exponent(p, N);
    if (gamma) *gamma = f.gamma;
    if (below_inv_pm1) *below_inv_pm1 = f.below_inv_pm1 ? 1 : 0;
    if (below_one) *below_one = f.below_one ? 1 : 0;
  });
}

ch_status ch_perturbation_bound(const ch_field* u_radial, double c, int N, double* lhs,
                                double* ratio) {
  if (ch_status s = check(u_radial, "null field"); s) return s;
  return wrap([&] {
    const ch::PerturbationBound b = ch::perturbation_bound_check(u_radial->f, c, N);
    if (lhs) *lhs = b.lhs;
    if (ratio) *ratio = b.ratio;
  });
}

} /* extern "C" */
