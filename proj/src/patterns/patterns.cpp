/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "patterns/patterns.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/norms.hpp"

namespace ch {

ExponentReport exponent_report(int N, double alpha) {
  if (N < 1) throw ContractViolation("exponent_report: N >= 1 required");
  if (alpha < 0) throw ContractViolation("exponent_report: alpha >= 0 required");
  ExponentReport r;
  r.N = N;
  r.alpha = alpha;
  r.p0 = 1.0 + 2.0 / N;
  r.p1 = 1.0 + 2.0 / (N + 1);
  if (N >= 3) {
    r.p_sobolev = static_cast<double>(N + 2) / (N - 2);
    r.p_sobolev_defined = true;
    r.p_star = 1.0 + 4.0 / (N - 2);
    r.p_star_finite = true;
    r.p_star_alpha = 1.0 + 2.0 * (alpha + 2.0) / (N - 2);
    r.p_star_alpha_defined = true;
    r.p_N = static_cast<double>(N) / (N - 2);
    r.p_N_defined = true;
  } else {
    r.p_star = std::numeric_limits<double>::infinity();
  }
  if (N >= 11) {
    r.p_JL = 1.0 + 4.0 / (N - 4 - 2.0 * std::sqrt(static_cast<double>(N - 1)));
    r.p_JL_defined = true;
  }
  return r;
}

SingularState singular_state(double p, int N) {
  if (N < 3) throw ContractViolation("singular_state: N >= 3 required");
  const double p_N = static_cast<double>(N) / (N - 2);
  if (!(p > p_N)) throw ContractViolation("singular_state: requires p > p_N = N/(N-2)");
  SingularState s;
  s.p = p;
  s.N = N;
  s.mu = 2.0 / (p - 1.0);
  s.D = s.mu * (N - 2.0 - s.mu);
  if (!(s.D > 0)) throw ContractViolation("singular_state: D <= 0");
  s.C_star = std::pow(s.D, 1.0 / (p - 1.0));
  s.c = p * s.D;
  return s;
}

double loewner_nirenberg(double xi, double d, int N) {
  if (N < 3) throw ContractViolation("loewner_nirenberg: N >= 3 required");
  if (!(d > 0)) throw ContractViolation("loewner_nirenberg: d > 0 required");
  if (xi < 0) throw ContractViolation("loewner_nirenberg: xi >= 0 required");
  const double K = static_cast<double>(N) * (N - 2);
  const double q = std::pow(d, 4.0 / (N - 2));
  return d * std::pow(K / (K + q * xi * xi), 0.5 * (N - 2));
}

HardyCheck hardy_criterion(double p, int N) {
  const SingularState s = singular_state(p, N);
  HardyCheck h;
  h.c = s.c;
  h.c_H = 0.25 * (N - 2.0) * (N - 2.0);
  // closed boundary; saturation at p_JL lands on it up to rounding
  h.satisfied = h.c <= h.c_H * (1.0 + 1e-12);
  return h;
}

CharacteristicRoots characteristic_roots(double c, int N) {
  if (N < 3) throw ContractViolation("characteristic_roots: N >= 3 required");
  CharacteristicRoots r;
  const double half = 0.5 * (N - 2.0);
  const double disc = half * half - c;
  if (disc > 0) {
    r.roots[2] = -half + std::sqrt(disc);
    r.roots[3] = -half - std::sqrt(disc);
  } else if (disc == 0) {
    r.roots[2] = r.roots[3] = -half;
    r.double_root = true;
  } else {
    r.roots[2] = r.roots[3] = -half;  // real part only
    r.complex_pair = true;
  }
  return r;
}

BlowupRate blowup_rate(double lambda_hat, double p, int N) {
  if (!(lambda_hat < 0)) throw ContractViolation("blowup_rate: lambda_hat < 0 required");
  if (N < 3) throw ContractViolation("blowup_rate: N >= 3 required");
  const double pS = static_cast<double>(N + 2) / (N - 2);
  if (!(p > pS)) throw ContractViolation("blowup_rate: requires p > p_S");
  BlowupRate b;
  b.rho = 4.0 * std::abs(lambda_hat) / ((N - 2.0) * (p - pS));
  b.mu_region2 = 0.5 * (p - 1.0) * b.rho;
  b.s_law = "s = exp((p-1)*rho*tau) / ((p-1)*rho)";
  return b;
}

FinalProfileExponent final_profile_exponent(double p, int N) {
  if (!(p > 1)) throw ContractViolation("final_profile_exponent: p > 1 required");
  if (N < 1) throw ContractViolation("final_profile_exponent: N >= 1 required");
  FinalProfileExponent f;
  f.gamma = 2.0 / (N * (p - 1.0));
  f.below_inv_pm1 = f.gamma < 1.0 / (p - 1.0);
  f.below_one = f.gamma < 1.0;
  return f;
}

PerturbationBound perturbation_bound_check(const Field& u, double c, int N) {
  if (u.grid.geometry != Grid::Geometry::radial)
    throw ContractViolation("perturbation_bound_check: radial field required");
  if (c < 0) throw ContractViolation("perturbation_bound_check: c >= 0 required");
  u.ensure_finite("perturbation_bound_check");
  const Grid& g = u.grid;
  const int n = g.n;
  const double h = g.spacing();

  // Reject data that makes |y|^{-2} u non-integrable near the origin: demand
  // second-order vanishing over the first few nodes.
  double umax = 0;
  for (double v : u.values) umax = std::max(umax, std::abs(v));
  for (int j = 0; j <= 2 && j < n; ++j) {
    const double r = g.coord(j);
    const double quad_bound = 10.0 * umax * (r / g.length) * (r / g.length);
    if (std::abs(u[j]) > 1e-8 * (1.0 + umax) && std::abs(u[j]) > quad_bound)
      throw ContractViolation(
          "perturbation_bound_check: u must vanish to second order at the origin");
  }

  Field w(g);
  for (int j = 1; j < n; ++j) {
    const double r = g.coord(j);
    w[j] = u[j] / (r * r);
  }
  w[0] = 0.0;

  // Delta w = w'' + (N-1) w'/r by centered differences, skipping the origin.
  double lap_sq = 0;
  const double area = unit_sphere_area(N);
  for (int j = 1; j + 1 < n; ++j) {
    const double r = g.coord(j);
    const double d2 = (w[j + 1] - 2.0 * w[j] + w[j - 1]) / (h * h);
    const double d1 = (w[j + 1] - w[j - 1]) / (2.0 * h);
    const double lap = d2 + (N - 1) * d1 / r;
    lap_sq += area * std::pow(r, N - 1) * h * lap * lap;
  }
  const double lap_norm = std::sqrt(lap_sq);

  // ||u||_{W^{2,2}} by the same finite differences.
  double sob = 0;
  for (int j = 1; j + 1 < n; ++j) {
    const double r = g.coord(j);
    const double d2 = (u[j + 1] - 2.0 * u[j] + u[j - 1]) / (h * h);
    const double d1 = (u[j + 1] - u[j - 1]) / (2.0 * h);
    const double wgt = area * std::pow(r, N - 1) * h;
    sob += wgt * (u[j] * u[j] + d1 * d1 + d2 * d2);
  }
  const double sob_norm = std::sqrt(sob);

  PerturbationBound out;
  out.lhs = c * lap_norm;
  out.ratio = (sob_norm > 0) ? lap_norm / sob_norm : 0.0;
  out.rhs_bound = c * out.ratio * sob_norm;
  return out;
}

}  // namespace ch
