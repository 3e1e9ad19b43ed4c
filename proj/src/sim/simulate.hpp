/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_SIM_SIMULATE_HPP
#define CHPDE_SIM_SIMULATE_HPP

#include <vector>

#include "core/grid.hpp"

namespace ch {

// Time integration of u_t = -Delta^2 u + gamma u +- Delta(|u|^{p-1} u):
// sign_stable picks "+" (decay) vs "-" (blow-up capable).
struct SimConfig {
  double p = 3.0;
  double gamma = 0.0;
  bool sign_stable = true;
  Grid grid;
  double dt0 = 1e-3;
  double dt_min = 1e-12;
  double t_end = 1.0;
  double blowup_threshold = 1e3;  // M, must exceed ||u0||_inf
  int snapshot_stride = 50;
  bool nonlinear = true;  // diagnostic switch; linear flow when false

  void validate(const Field& u0) const;
};

enum class SimStatus { completed, blowup, dt_underflow, nonfinite };

struct SeriesRecord {
  double t = 0;
  double sup = 0;
  double energy = 0;
  double mass = 0;
  double h1 = 0;
};

struct SimResult {
  SimStatus status = SimStatus::completed;
  double T_est = 0;         // blow-up time estimate (status == blowup)
  double fit_exponent = 0;  // fitted rate exponent (status == blowup)
  bool fit_reliable = false;
  bool dt_collapsed = false;  // corroboration: dt was driven well below dt0
  std::vector<SeriesRecord> series;
  std::vector<std::pair<double, Field>> snapshots;
  // adaptive-step constants recorded for reproducibility
  double adapt_halve_threshold = 0.10;
  double adapt_double_threshold = 0.01;
};

// One IMEX step: implicit bi-harmonic multiplier, explicit nonlinear flux,
//   u_k <- [u_k + dt (gamma u_k -+ kappa^2 N_k)] / (1 + dt kappa^4).
Field step_imex(const Field& u, const SimConfig& cfg, double dt);

SimResult run(const SimConfig& cfg, const Field& u0);

// Lyapunov energy 1/2 ||grad u||^2 +- 1/(p+1) int |u|^{p+1} (sign flips the
// potential term).
double energy(const Field& u, double p, bool sign_stable);

double mass(const Field& u);

struct BlowupFit {
  double T_est = 0;
  double exponent = 0;
  bool reliable = true;
};

// Least-squares fit of log||u||_inf = log K - exponent * log(T - t) over
// (T, exponent, K); needs >= 10 trailing samples, flags non-monotone tails.
BlowupFit fit_blowup_rate(const std::vector<double>& t, const std::vector<double>& sup);

}  // namespace ch

#endif
