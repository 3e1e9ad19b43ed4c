/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_SPECTRAL_KERNEL_HPP
#define CHPDE_SPECTRAL_KERNEL_HPP

#include <vector>

#include "spectral/hermite.hpp"

namespace ch {

// Rescaled kernel of u_t = -u_xxxx (N = 1):
//   F(y) = (1/2pi) int e^{-xi^4} cos(xi y) d xi,
// with derivative table D^m F from the symbol (i xi)^m. The integrand is cut
// at xi = 4 (e^{-256} < 1e-111 bounds the remainder).
struct KernelSamples {
  std::vector<double> y;
  std::vector<std::vector<double>> deriv;  // deriv[m][j] = F^(m)(y_j), m = 0..max_m
};

KernelSamples kernel_F(const std::vector<double>& y, int N = 1, int max_m = 4);

// Pointwise F^(m)(y) by the same quadrature.
double kernel_F_deriv(double y, int m);

// Kernel eigenfunction psi_k = ((-1)^k / sqrt(k!)) D^k F at the given points (N = 1).
std::vector<double> eigenfunction_samples(int k, const std::vector<double>& y);

// <psi_mu, psi*_nu> over the sampled line by trapezoid quadrature (N = 1).
double biorthonormality_check(int mu, int nu);

// Moments of F from the symbol: int y^s F dy = (-1)^{s/4} s!/(s/4)! when
// 4 | s, else 0. This is the independent oracle for the quadrature route.
double kernel_moment(int s);

// <psi_mu, psi*_nu> reduced to moment sums by integration by parts (oracle).
double biortho_moment_oracle(int mu, int nu);

}  // namespace ch

#endif
