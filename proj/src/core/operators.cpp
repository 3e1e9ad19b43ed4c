/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "core/operators.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/norms.hpp"
#include "core/transforms.hpp"

namespace ch {

namespace {

Field radial_laplacian(const Field& f) {
  const Grid& g = f.grid;
  const int n = g.n;
  const int N = g.dim;
  const double h = g.spacing();
  const double ih2 = 1.0 / (h * h);
  Field out(g);
  // r = 0: symmetry f(-h) = f(h) gives Delta f(0) = 2 N (f_1 - f_0)/h^2.
  out[0] = 2.0 * N * (f[1] - f[0]) * ih2;
  for (int j = 1; j < n; ++j) {
    const double r = g.coord(j);
    const double fp = (j + 1 < n) ? f[j + 1] : 0.0;  // u = 0 beyond r = R
    const double fm = f[j - 1];
    const double d2 = (fp - 2.0 * f[j] + fm) * ih2;
    const double d1 = (fp - fm) / (2.0 * h);
    out[j] = d2 + (N - 1) * d1 / r;
  }
  return out;
}

// order 1 -> multiplier -kappa^2 (laplacian), order 2 -> +kappa^4 (biharmonic)
Field apply_line_multiplier(const Field& f, int order) {
  const Grid& g = f.grid;
  const std::vector<double> kap = wavenumbers(g);
  std::vector<double> c =
      (g.bc == Grid::Bc::navier) ? sine_forward(f) : periodic_forward(f);
  for (int i = 0; i < g.n; ++i) {
    const double k2 = kap[i] * kap[i];
    c[i] *= (order == 1) ? -k2 : k2 * k2;
  }
  return (g.bc == Grid::Bc::navier) ? sine_inverse(g, c) : periodic_inverse(g, c);
}

}  // namespace

std::vector<double> sine_coefficients(const Field& f) { return sine_forward(f); }

Field laplacian(const Field& f) {
  f.ensure_finite("laplacian");
  if (f.grid.geometry == Grid::Geometry::radial) return radial_laplacian(f);
  return apply_line_multiplier(f, 1);
}

Field biharmonic(const Field& f) {
  f.ensure_finite("biharmonic");
  if (f.grid.geometry == Grid::Geometry::radial) return radial_laplacian(radial_laplacian(f));
  return apply_line_multiplier(f, 2);
}

Field inverse_laplacian(const Field& f) {
  f.ensure_finite("inverse_laplacian");
  const Grid& g = f.grid;
  if (g.geometry == Grid::Geometry::radial)
    throw ContractViolation("inverse_laplacian: radial grids unsupported");
  const std::vector<double> kap = wavenumbers(g);
  if (g.bc == Grid::Bc::navier) {
    std::vector<double> c = sine_forward(f);
    for (int i = 0; i < g.n; ++i) c[i] /= kap[i] * kap[i];
    return sine_inverse(g, c);
  }
  // Periodic: the constant mode is in the kernel; require zero mean.
  std::vector<double> c = periodic_forward(f);
  const double fnorm = norms(f).l2;
  if (std::abs(c[0]) > 1e-12 * fnorm)
    throw NonInvertible("inverse_laplacian: periodic field has nonzero mean");
  c[0] = 0.0;
  for (int i = 1; i < g.n; ++i) c[i] /= kap[i] * kap[i];
  return periodic_inverse(g, c);
}

}  // namespace ch
