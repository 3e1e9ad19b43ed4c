/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spectral/typeii.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/norms.hpp"
#include "core/quadrature.hpp"
#include "patterns/patterns.hpp"

namespace ch {

double e_N_constant(int N, double d) {
  if (N < 3) throw ContractViolation("e_N: N >= 3 required");
  if (!(d > 0)) throw ContractViolation("e_N: d > 0 required");
  const double pS = static_cast<double>(N + 2) / (N - 2);
  const double K = static_cast<double>(N) * (N - 2);
  const double width = std::sqrt(K) * std::pow(d, -2.0 / (N - 2));
  // substitute r = width * tan(s); the transformed integrand is continuous
  // on [0, pi/2] and vanishes at the right endpoint (W0^p r^{N-1} ~ r^{-3})
  auto integrand = [&](double s) {
    const double pi2 = 0.5 * 3.14159265358979323846;
    if (s >= pi2) return 0.0;
    const double t = std::tan(s);
    const double r = width * t;
    const double sec2 = 1.0 + t * t;
    const double w = loewner_nirenberg(r, d, N);
    return std::pow(w, pS) * std::pow(r, N - 1) * width * sec2;
  };
  const double pi2 = 0.5 * 3.14159265358979323846;
  const double radial = adaptive_simpson(integrand, 0.0, pi2, 1e-13, 48);
  return unit_sphere_area(N) * radial;
}

double laplacian_psi_at_zero(const MultiIndex& beta, int N) {
  if (beta.dim() != N) throw ContractViolation("laplacian_psi_at_zero: dimension mismatch");
  if (!beta.all_even()) return 0.0;
  // (Delta D^beta F)(0) = -(2pi)^{-N} i^{|beta|} int xi^beta |xi|^2 e^{-|xi|^4} dxi,
  // evaluated in spherical coordinates with gamma-function angular moments.
  const int order = beta.order();
  const double pi = 3.14159265358979323846;
  double angular = 2.0;
  double half_sum = 0;
  for (int i = 0; i < N; ++i) {
    angular *= std::tgamma(0.5 * beta.comps[i] + 0.5);
    half_sum += 0.5 * beta.comps[i];
  }
  angular /= std::tgamma(half_sum + 0.5 * N);
  const double radial = 0.25 * std::tgamma(0.25 * (order + N + 2));
  const double integral = radial * angular;
  const int s = order / 2;  // i^{|beta|} = (-1)^{|beta|/2} for even |beta|
  const double sign_i = (s % 2) ? -1.0 : 1.0;
  const double dF0 = -std::pow(2.0 * pi, -N) * sign_i * integral;
  // psi_beta = ((-1)^{|beta|}/sqrt(beta!)) D^beta F with even |beta|
  return dF0 / std::sqrt(static_cast<double>(beta.factorial()));
}

double h_beta(const MultiIndex& beta, int N, double d) {
  if (N < 3) throw ContractViolation("h_beta: N >= 3 required");
  if (beta.dim() != N) throw ContractViolation("h_beta: beta dimension must equal N");
  if (!beta.all_even()) return 0.0;
  return -e_N_constant(N, d) * laplacian_psi_at_zero(beta, N);
}

double alpha_beta(int order, int N) {
  if (order < 0 || N < 1) throw ContractViolation("alpha_beta: order >= 0, N >= 1");
  return (2.0 * order + N - 2.0) / 8.0;
}

Type2Balance type2_balance(int order, int N) {
  const double a = alpha_beta(order, N);
  return Type2Balance{a, -a};
}

}  // namespace ch
