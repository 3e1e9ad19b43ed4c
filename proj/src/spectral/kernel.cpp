/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spectral/kernel.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/quadrature.hpp"

namespace ch {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kXiCut = 4.0;    // e^{-xi^4} < 1e-111 beyond
constexpr int kGaussN = 1024;     // resolves cos(xi y) up to |y| ~ 500
constexpr double kLineCut = 60.0; // |F^(m)| < 1e-22 beyond (decay e^{-a0/2 y^{4/3}})
constexpr double kLineStep = 0.02;

}  // namespace

double kernel_F_deriv(double y, int m) {
  if (m < 0) throw ContractViolation("kernel derivative order must be >= 0");
  // F^(m)(y) = (1/pi) int_0^inf xi^m e^{-xi^4} cos(xi y + m pi/2) d xi
  const double phase = 0.5 * kPi * m;
  const GaussRule& r = gauss_legendre(kGaussN);
  double s = 0;
  const double half = 0.5 * kXiCut;
  for (int i = 0; i < kGaussN; ++i) {
    const double xi = half * (1.0 + r.nodes[i]);
    s += r.weights[i] * std::pow(xi, m) * std::exp(-xi * xi * xi * xi) *
         std::cos(xi * y + phase);
  }
  return s * half / kPi;
}

KernelSamples kernel_F(const std::vector<double>& y, int N, int max_m) {
  if (N != 1) throw ContractViolation("kernel_F: only N = 1 supported");
  KernelSamples out;
  out.y = y;
  out.deriv.assign(max_m + 1, std::vector<double>(y.size()));
  for (int m = 0; m <= max_m; ++m)
    for (std::size_t j = 0; j < y.size(); ++j) out.deriv[m][j] = kernel_F_deriv(y[j], m);
  return out;
}

std::vector<double> eigenfunction_samples(int k, const std::vector<double>& y) {
  if (k < 0) throw ContractViolation("eigenfunction order must be >= 0");
  const double scale = ((k % 2) ? -1.0 : 1.0) / std::sqrt(static_cast<double>(factorial_i64(k)));
  std::vector<double> out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) out[j] = scale * kernel_F_deriv(y[j], k);
  return out;
}

double biorthonormality_check(int mu, int nu) {
  if (mu < 0 || nu < 0 || mu > 6 || nu > 6)
    throw ContractViolation("biorthonormality_check: orders 0..6 only");
  const HermiteEigenfunction h = adjoint_eigenfunction(MultiIndex({nu}));
  const int n = static_cast<int>(2 * kLineCut / kLineStep) + 1;
  double s = 0;
  for (int j = 0; j < n; ++j) {
    const double y = -kLineCut + j * kLineStep;
    const double w = (j == 0 || j == n - 1) ? 0.5 : 1.0;
    const double psi_mu = kernel_F_deriv(y, mu);
    s += w * psi_mu * h.eval({y, 0, 0});
  }
  const double sign = (mu % 2) ? -1.0 : 1.0;
  return s * kLineStep * sign / std::sqrt(static_cast<double>(factorial_i64(mu)));
}

double kernel_moment(int s) {
  if (s < 0) throw ContractViolation("kernel moment order must be >= 0");
  if (s % 4 != 0) return 0.0;
  const int q = s / 4;
  double v = ((q % 2) ? -1.0 : 1.0);
  // s! / q!
  for (int k = q + 1; k <= s; ++k) v *= k;
  return v;
}

double biortho_moment_oracle(int mu, int nu) {
  const HermiteEigenfunction h = adjoint_eigenfunction(MultiIndex({nu}));
  // <psi_mu, psi*_nu> = (1/sqrt(mu! nu!)) sum_e c_e (e!/(e-mu)!) M_{e-mu}
  double s = 0;
  for (const auto& [e, c] : h.poly.terms()) {
    const int deg = e[0];
    if (deg < mu) continue;
    double fall = 1.0;
    for (int k = deg - mu + 1; k <= deg; ++k) fall *= k;
    s += c.to_double() * fall * kernel_moment(deg - mu);
  }
  return s / std::sqrt(static_cast<double>(factorial_i64(mu)) *
                       static_cast<double>(factorial_i64(nu)));
}

}  // namespace ch
