/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "core/norms.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "core/transforms.hpp"

namespace ch {

double unit_sphere_area(int N) {
  const double pi = 3.14159265358979323846;
  return 2.0 * std::pow(pi, 0.5 * N) / std::tgamma(0.5 * N);
}

namespace {

// Quadrature weights per node (boundary values vanish on navier/radial grids).
std::vector<double> quad_weights(const Grid& g) {
  const double h = g.spacing();
  std::vector<double> w(g.n, h);
  if (g.geometry == Grid::Geometry::radial) {
    const double area = unit_sphere_area(g.dim);
    for (int j = 0; j < g.n; ++j) {
      const double r = g.coord(j);
      w[j] = area * h * std::pow(r, g.dim - 1);
      if (j == 0) w[j] *= 0.5;  // trapezoid half-weight at r = 0
    }
  }
  return w;
}

std::vector<double> radial_gradient(const Field& f) {
  const Grid& g = f.grid;
  const int n = g.n;
  const double h = g.spacing();
  std::vector<double> d(n);
  d[0] = 0.0;  // symmetry at the origin
  for (int j = 1; j < n; ++j) {
    const double fp = (j + 1 < n) ? f[j + 1] : 0.0;
    d[j] = (fp - f[j - 1]) / (2.0 * h);
  }
  return d;
}

}  // namespace

double integrate(const Field& f) {
  const std::vector<double> w = quad_weights(f.grid);
  double s = 0;
  for (int j = 0; j < f.size(); ++j) s += w[j] * f[j];
  return s;
}

double integrate_abs_pow(const Field& f, double q) {
  const std::vector<double> w = quad_weights(f.grid);
  double s = 0;
  for (int j = 0; j < f.size(); ++j) s += w[j] * std::pow(std::abs(f[j]), q);
  return s;
}

double inner(const Field& a, const Field& b) {
  if (!(a.grid == b.grid)) throw ContractViolation("inner: grids differ");
  const std::vector<double> w = quad_weights(a.grid);
  double s = 0;
  for (int j = 0; j < a.size(); ++j) s += w[j] * a[j] * b[j];
  return s;
}

Norms norms(const Field& f, double p) {
  f.ensure_finite("norms");
  const Grid& g = f.grid;
  Norms out;
  for (double v : f.values) out.linf = std::max(out.linf, std::abs(v));
  out.l2 = std::sqrt(integrate_abs_pow(f, 2.0));
  out.lp1 = std::pow(integrate_abs_pow(f, p + 1.0), 1.0 / (p + 1.0));

  if (g.spectral()) {
    const std::vector<double> kap = wavenumbers(g);
    std::vector<double> c = (g.bc == Grid::Bc::navier) ? sine_forward(f) : periodic_forward(f);
    std::vector<double> grad(c.size()), inv(c.size());
    bool invertible = true;
    for (int i = 0; i < g.n; ++i) {
      grad[i] = kap[i] * c[i];
      if (kap[i] > 0) inv[i] = c[i] / kap[i];
      else {
        inv[i] = 0;
        if (std::abs(c[i]) > 1e-12 * out.l2) invertible = false;
      }
    }
    out.h1_semi = std::sqrt(spectral_l2sq(g, grad));
    if (invertible) {
      out.hminus1 = std::sqrt(spectral_l2sq(g, inv));
      out.hminus1_defined = true;
    }
  } else {
    const std::vector<double> d = radial_gradient(f);
    const std::vector<double> w = quad_weights(g);
    double s = 0;
    for (int j = 0; j < g.n; ++j) s += w[j] * d[j] * d[j];
    out.h1_semi = std::sqrt(s);
    // hminus1 undefined for radial grids
  }
  return out;
}

}  // namespace ch
