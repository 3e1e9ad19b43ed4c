/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_STEADY_STEADY_HPP
#define CHPDE_STEADY_STEADY_HPP

#include <vector>

#include "core/grid.hpp"

namespace ch {

// Stationary analysis of -Delta u - gamma (-Delta)^{-1} u - |u|^{p-1} u = 0
// on (0, L) under Navier conditions, where the sine basis diagonalizes both
// nonlocal operators exactly.
struct EllipticConfig {
  double L = 3.14159265358979323846;
  double p = 3.0;
  double gamma = 0.0;
  int modes = 64;  // grid resolution n = 2 * modes

  void validate() const;
};

enum class FiberingClass { unique_max, none_positive, multi };

struct SteadyState {
  Field u;
  double gamma = 0;
  double p = 0;
  double residual_norm = 0;
  double critical_value = 0;  // reduced functional at the solution
  double F_value = 0;         // Euler functional at the solution
  FiberingClass fibering_class = FiberingClass::unique_max;
  int sign_changes = 0;
};

// Bi-harmonic eigenvalues under Navier conditions: lambda_k = (k pi / L)^4.
std::vector<double> biharmonic_eigs(double L, int count);

// Positive-solution threshold lambda_1 p / (p + 1).
double critical_gamma(double p, double lambda1);

// Euler functional 1/2 int |grad u|^2 - gamma/2 int |(-Delta)^{-1/2} u|^2
//                  - 1/(p+1) int |u|^{p+1}.
double functional_F(const Field& u, double gamma, double p);

// Gradient field g with <g, phi> = D_u F(u) phi for all test fields; g = 0
// exactly at solutions of the nonlocal elliptic equation.
Field frechet_residual(const Field& u, double gamma, double p);

// Quadratic part Q(v) = int |grad v|^2 - gamma int |(-Delta)^{-1/2} v|^2.
double quadratic_part(const Field& v, double gamma);

// Fibering map phi_v(r) = r^2/2 Q(v) - r^{p+1}/(p+1) int |v|^{p+1}.
std::vector<double> fibering_map(const Field& v, double gamma, double p,
                                 const std::vector<double>& r);

// Positive turning point r(v) with r^{p-1} = Q(v)/int |v|^{p+1}; requires
// both positive (NoTurningPoint error otherwise).
double r_of_v(const Field& v, double gamma, double p);
bool has_turning_point(const Field& v, double gamma, double p);

// Scale-invariant reduced functional
//   G(v) = (1/2 - 1/(p+1)) Q(v)^{(p+1)/(p-1)} / (int |v|^{p+1})^{2/(p-1)}.
double reduced_functional_G(const Field& v, double gamma, double p);

// Newton iteration on the spectral Galerkin residual.
SteadyState solve_steady(const EllipticConfig& cfg, const Field& seed);

// Census: nu_k = (k pi/L)^2 - gamma/(k pi/L)^2; count of nu_k < 1 (strict).
struct Census {
  std::vector<double> nu;  // sorted ascending
  int count = 0;
};
Census category_census(double gamma, double L, int max_k);

}  // namespace ch

#endif
