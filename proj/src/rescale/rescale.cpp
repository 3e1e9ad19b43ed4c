/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "rescale/rescale.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"
#include "core/interp.hpp"

namespace ch {

ScalingReport scaling_exponents(double p, int N, double alpha, ScalingRule rule) {
  if (!(p > 1)) throw ContractViolation("scaling_exponents: p > 1 required");
  if (N < 1) throw ContractViolation("scaling_exponents: N >= 1 required");
  if (alpha < 0) throw ContractViolation("scaling_exponents: alpha >= 0 required");
  ScalingReport r;
  r.p = p;
  r.N = N;
  r.alpha = alpha;
  r.rule = rule;
  r.gamma2 = p - 1.0 - (p + 1.0) * (alpha + 2.0) / (alpha + N);
  if (N >= 3) {
    r.gamma1 = p - 1.0 - 2.0 * (alpha + 2.0) / (N - 2);
    r.gamma1_defined = true;
    r.p_star = 1.0 + 4.0 / (N - 2);
    r.p_star_finite = true;
    r.p_star_alpha = 1.0 + 2.0 * (alpha + 2.0) / (N - 2);
    r.p_star_alpha_defined = true;
  } else {
    r.p_star = std::numeric_limits<double>::infinity();
  }
  if (rule == ScalingRule::sobolev) {
    if (N < 3)
      throw ContractViolation("scaling_exponents: sobolev rule needs N >= 3 (p* = +inf below)");
    r.a_k_exponent = -2.0 / (N - 2);
  } else {
    r.a_k_exponent = -(p + 1.0) / (alpha + N);
  }
  const double g = (rule == ScalingRule::sobolev) ? r.gamma1 : r.gamma2;
  if (g < 0) r.delta_behavior = DeltaBehavior::vanishes;
  else if (g == 0) r.delta_behavior = DeltaBehavior::unit;
  else r.delta_behavior = DeltaBehavior::grows;
  return r;
}

double mass_law_exponent(double p, int N) {
  if (!(p > 1) || N < 1) throw ContractViolation("mass_law_exponent: p > 1, N >= 1");
  const double p0 = 1.0 + 2.0 / N;
  return N * (p - p0) / (4.0 * (p - 1.0));
}

namespace {

// Source samples (x, u) sorted by centered coordinate.
void centered_samples(const Field& u, double x_center, std::vector<double>& xs,
                      std::vector<double>& us) {
  const Grid& g = u.grid;
  std::vector<std::pair<double, double>> pts(g.n);
  const bool periodic = (g.geometry == Grid::Geometry::line && g.bc == Grid::Bc::periodic);
  for (int j = 0; j < g.n; ++j) {
    double x = g.coord(j) - x_center;
    if (periodic) {
      // wrap into [-L/2, L/2)
      x -= g.length * std::floor(x / g.length + 0.5);
    }
    pts[j] = {x, u[j]};
  }
  std::sort(pts.begin(), pts.end());
  xs.resize(g.n);
  us.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    xs[j] = pts[j].first;
    us[j] = pts[j].second;
  }
}

}  // namespace

SimilarityFrame to_similarity(const Field& u, double p, double T, double t,
                              const Grid& y_grid, double x_center) {
  if (!(p > 1)) throw ContractViolation("to_similarity: p > 1 required");
  if (!(t < T)) throw ContractViolation("to_similarity: requires t < T");
  u.ensure_finite("to_similarity");

  const double tau = T - t;
  const double amp = std::pow(tau, 1.0 / (2.0 * (p - 1.0)));
  const double len = std::pow(tau, 0.25);

  std::vector<double> xs, us;
  centered_samples(u, x_center, xs, us);
  const CubicSpline spline(xs, us);

  SimilarityFrame out;
  out.v = Field(y_grid);
  out.valid.assign(y_grid.n, 0);
  for (int j = 0; j < y_grid.n; ++j) {
    const double y = y_grid.centered_coord(j);
    const double x = y * len;
    if (!spline.in_range(x)) continue;  // dropped, never extrapolated
    out.v[j] = amp * spline(x);
    out.valid[j] = 1;
  }
  return out;
}

ExtractedProfile extract_profile(const SimResult& result, double p, const Grid& y_grid) {
  if (result.status != SimStatus::blowup)
    throw ContractViolation("extract_profile: run did not blow up");
  const double T = result.T_est;
  std::vector<const std::pair<double, Field>*> window;
  for (const auto& snap : result.snapshots)
    if (snap.first < T) window.push_back(&snap);
  if (window.size() < 3) throw NotEnoughData("extract_profile: need >= 3 snapshots before T");

  const auto& last = *window[window.size() - 1];
  const auto& prev = *window[window.size() - 2];

  // Blow-up locus from the argmax of the final snapshot.
  int jmax = 0;
  for (int j = 0; j < last.second.size(); ++j)
    if (std::abs(last.second[j]) > std::abs(last.second[jmax])) jmax = j;
  const double x_center = last.second.grid.coord(jmax);

  SimilarityFrame vl = to_similarity(last.second, p, T, last.first, y_grid, x_center);
  SimilarityFrame vp = to_similarity(prev.second, p, T, prev.first, y_grid, x_center);

  ExtractedProfile out;
  out.f = vl.v;
  out.valid = vl.valid;
  out.T_est = T;
  double gap = 0;
  for (int j = 0; j < y_grid.n; ++j)
    if (vl.valid[j] && vp.valid[j]) gap = std::max(gap, std::abs(vl.v[j] - vp.v[j]));
  out.convergence_gap = gap;
  return out;
}

}  // namespace ch
