/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_NORMS_HPP
#define CHPDE_CORE_NORMS_HPP

#include "core/grid.hpp"

namespace ch {

struct Norms {
  double l2 = 0;
  double linf = 0;
  double h1_semi = 0;
  double lp1 = 0;       // (integral |f|^{p+1})^{1/(p+1)}
  double hminus1 = 0;   // 0 with hminus1_defined=false when not computable
  bool hminus1_defined = false;
};

// Norm family via trapezoid / Parseval quadrature. hminus1 needs an
// invertible Laplacian (navier, or periodic with zero mean).
Norms norms(const Field& f, double p = 1.0);

// Composite trapezoid of f over the domain (radial grids integrate against
// the surface measure omega_{N-1} r^{N-1} dr).
double integrate(const Field& f);

// Trapezoid of |f|^q.
double integrate_abs_pow(const Field& f, double q);

// L2 inner product by the same quadrature.
double inner(const Field& a, const Field& b);

// Surface area of the unit sphere in R^N.
double unit_sphere_area(int N);

}  // namespace ch

#endif
