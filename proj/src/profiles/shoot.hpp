/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_PROFILES_SHOOT_HPP
#define CHPDE_PROFILES_SHOOT_HPP

#include <cmath>
#include <vector>

#include "profiles/tail.hpp"

namespace ch {

// Similarity profile with its shooting data. Samples run from y = 0 (or the
// radial cutoff) to y_max on a uniform grid.
struct Profile {
  std::vector<double> y;
  std::vector<double> f, f1, f2, f3;
  BundleParams params;
  int N = 1;
  double residual[2] = {0, 0};  // (f'(0), f'''(0))
  bool stalled = false;
};

struct ShootOptions {
  double y_max = 15.0;
  double rtol = 1e-10;
  double atol = 1e-13;
  int samples = 1501;
  double mu = 0.25;  // drift coefficient; 1/4 is the blow-up frame
};

// Backward integration of the profile ODE from the asymptotic bundle at
// y_max to the origin. The nonlinearity is integrated in divergence form
// via the auxiliary variable v = Delta f + |f|^{p-1} f, which avoids the
// singular |f|^{p-3} factor of the expanded form entirely.
Profile shoot(double p, int N, double A, double C, const ShootOptions& opts = {});

// Same machinery on the t > T extension equation (drift and zeroth-order
// signs flipped); A is inherited, (B, C) are shot.
Profile extension_shoot(double p, int N, double A, double B, double C,
                        const ShootOptions& opts = {});

struct SolveOptions {
  ShootOptions shoot;
  double residual_tol = 1e-8;
  // Sweep windows; NaN selects regime defaults (scan order is C ascending
  // from c_window_lo, A ascending from a_window_lo):
  //   p = p0:  A = 0 slice, C in [-40, 40] step 0.5
  //   p < p0:  A in [-16, 2] step 0.5, C in [-320, 320] step 2
  //   p > p0:  A in [-2, 3] step 0.25, C in [-60, 60] step 0.5
  double a_window_lo = std::nan(""), a_window_hi = std::nan("");
  int a_scan = 0;
  double c_window_lo = std::nan(""), c_window_hi = std::nan("");
  int c_scan = 0;
  int max_newton = 60;
};

// Damped Newton on (A, C) against the shooting residual, with the nested
// bisection sweep (C for f'(0) = 0 at fixed A, then A for f'''(0) = 0) as
// fallback and bracket provider. Throws NoProfileFound when the window
// shows no root.
Profile solve_profile(double p, int N, const BundleParams* seed = nullptr,
                      const SolveOptions& opts = {});

struct ProfileMass {
  double mass = 0;
  bool nonintegrable_tail = false;  // p > p0 with A != 0
};

// Quadrature of the trajectory plus the analytic tail contribution.
ProfileMass profile_mass(const Profile& prof);

// Limit profile g0: -(1/4) z g0' - g0/(2(p-1)) - (|g0|^{p-1} g0)'' = 0,
// g0(0) = 1, g0'(0) = 0, integrated until z_max or degeneracy (g0 -> 0).
struct G0Curve {
  std::vector<double> z;
  std::vector<double> g;
  bool degenerate = false;  // stopped before z_max
};
G0Curve limit_profile_g0(double p, double z_max);

// Oscillation frequency sqrt(p / eps) of the small-amplitude bundle.
double oscillation_frequency(double p, double eps);

// Predictor-corrector continuation of the profile branch in the drift
// parameter, reported on the grid mu_j = j/(4 steps), j = 1..steps. The
// branch is anchored at mu = 1/4 and tracked with adaptive Newton steps;
// points that cannot be reached (the (A, C) chart degenerates as mu -> 0)
// leave the branch truncated below with `lost` set.
struct MuBranchPoint {
  double mu = 0;
  Profile profile;
};
struct MuBranch {
  std::vector<MuBranchPoint> points;  // ascending in mu, ends at 1/4
  bool lost = false;
  double last_good_mu = 0;  // smallest mu reached
};
MuBranch mu_continuation(double p, int N, int steps, const SolveOptions& opts = {});

// Interior sign changes of the sampled profile (amplitude-relative).
int sign_changes(const std::vector<double>& f);

}  // namespace ch

#endif
