/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "profiles/shoot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "core/errors.hpp"
#include "core/norms.hpp"
#include "core/quadrature.hpp"
#include "core/rk.hpp"

namespace ch {

namespace {

constexpr double kRadialCut = 1e-3;  // integration stop for N >= 2

// State (f, f', v, v') with v = Delta f + |f|^{p-1} f. The equation then
// reads Delta v = -(mu y f' + gamma f) in the blow-up frame and
// Delta v = +(y f'/4 + gamma f) in the extension frame. This divergence
// form avoids the singular |f|^{p-3} factor of the expanded nonlinearity.
struct OdeParams {
  double p = 3;
  int N = 1;
  double mu = 0.25;  // drift coefficient (blow-up frame: 1/4)
  bool extension = false;
};

}  // namespace

int sign_changes(const std::vector<double>& f) {
  double amp = 0;
  for (double v : f) amp = std::max(amp, std::abs(v));
  if (amp == 0) return 0;
  int count = 0, last = 0;
  for (double v : f) {
    if (std::abs(v) < 1e-6 * amp) continue;
    const int s = (v > 0) ? 1 : -1;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

double oscillation_frequency(double p, double eps) {
  if (!(p > 1)) throw ContractViolation("oscillation_frequency: p > 1 required");
  if (!(eps > 0)) throw ContractViolation("oscillation_frequency: eps > 0 required");
  return std::sqrt(p / eps);
}

namespace {

Profile run_shoot(const OdeParams& pr, const std::vector<TailTerm>& tail,
                  const BundleParams& params, const ShootOptions& opts, bool want_samples) {
  const double y_end = (pr.N == 1) ? 0.0 : kRadialCut;
  const double y_max = opts.y_max;
  if (!(y_max >= 10.0)) throw ContractViolation("shoot: y_max >= 10 required");

  const std::array<double, 4> t4 = eval_state(tail, y_max);
  const double curv = (pr.N > 1) ? (pr.N - 1) / y_max : 0.0;
  const double g0 = std::pow(std::abs(t4[0]), pr.p - 1.0) * t4[0];
  const double gp0 = pr.p * std::pow(std::abs(t4[0]), pr.p - 1.0);
  std::array<double, 4> s0;
  s0[0] = t4[0];
  s0[1] = t4[1];
  s0[2] = t4[2] + curv * t4[1] + g0;
  s0[3] = t4[3] + curv * t4[2] - curv * t4[1] / y_max + gp0 * t4[1];

  auto f4 = [&](double y, const std::array<double, 4>& s) -> std::array<double, 4> {
    const double gamma = 1.0 / (2.0 * (pr.p - 1.0));
    const double g = std::pow(std::abs(s[0]), pr.p - 1.0) * s[0];
    const double cv = (pr.N > 1) ? (pr.N - 1) / y : 0.0;
    const double f2 = s[2] - g - cv * s[1];
    const double drift = pr.extension ? (0.25 * y * s[1] + gamma * s[0])
                                      : (-pr.mu * y * s[1] - gamma * s[0]);
    return {s[1], f2, s[3], drift - cv * s[3]};
  };

  std::vector<double> sample_pts;
  if (want_samples) {
    sample_pts.resize(opts.samples);
    for (int i = 0; i < opts.samples; ++i)
      sample_pts[i] = y_max + (y_end - y_max) * i / (opts.samples - 1);
  } else {
    sample_pts = {y_max, y_end};
  }
  const OdeResult<4> sol =
      integrate_ode<4>(f4, s0, y_max, y_end, opts.rtol, opts.atol, &sample_pts);

  Profile prof;
  prof.params = params;
  prof.N = pr.N;
  prof.stalled = sol.stalled;
  const std::size_t m = sol.t.size();
  prof.y.resize(m);
  prof.f.resize(m);
  prof.f1.resize(m);
  prof.f2.resize(m);
  prof.f3.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = m - 1 - i;  // ascending in y
    const double y = sol.t[k];
    const auto& s = sol.y[k];
    const double cv = (pr.N > 1 && y > 0) ? (pr.N - 1) / y : 0.0;
    const double g = std::pow(std::abs(s[0]), pr.p - 1.0) * s[0];
    const double gp = pr.p * std::pow(std::abs(s[0]), pr.p - 1.0);
    prof.y[i] = y;
    prof.f[i] = s[0];
    prof.f1[i] = s[1];
    prof.f2[i] = s[2] - g - cv * s[1];
    double f3 = s[3] - gp * s[1];
    if (pr.N > 1 && y > 0) f3 += -cv * prof.f2[i] + cv * s[1] / y;
    prof.f3[i] = f3;
  }

  if (sol.stalled) {
    prof.residual[0] = prof.residual[1] = std::numeric_limits<double>::quiet_NaN();
    return prof;
  }

  // Residuals at the origin. For N = 1 the endpoint is y = 0 exactly; the
  // radial cutoff subtracts the leading symmetric Taylor term instead.
  const auto& se = sol.y.back();
  if (pr.N == 1) {
    prof.residual[0] = se[1];
    prof.residual[1] = se[3] - pr.p * std::pow(std::abs(se[0]), pr.p - 1.0) * se[1];
  } else {
    const auto d = f4(kRadialCut, se);
    prof.residual[0] = se[1] - kRadialCut * d[1];
    prof.residual[1] = se[3] - kRadialCut * d[3];
  }
  return prof;
}

}  // namespace

Profile shoot(double p, int N, double A, double C, const ShootOptions& opts) {
  if (!(p > 1)) throw ContractViolation("shoot: p > 1 required");
  if (N < 1) throw ContractViolation("shoot: N >= 1 required");
  OdeParams pr{p, N, opts.mu, false};
  BundleParams bp{A, C, 0.0, p};
  return run_shoot(pr, blowup_tail_terms(p, opts.mu, A, C), bp, opts, true);
}

Profile extension_shoot(double p, int N, double A, double B, double C,
                        const ShootOptions& opts) {
  if (!(p > 1)) throw ContractViolation("extension_shoot: p > 1 required");
  if (N < 1) throw ContractViolation("extension_shoot: N >= 1 required");
  OdeParams pr{p, N, 0.25, true};
  BundleParams bp{A, C, B, p};
  return run_shoot(pr, extension_tail_terms(p, A, B, C), bp, opts, true);
}

namespace {

struct ResidualEval {
  double r1 = 0, r2 = 0;
  double amplitude = 0;  // sup |f| of the trajectory
  bool ok = false;
};

ResidualEval eval_residual(double p, int N, double mu, double A, double C,
                           const ShootOptions& opts, bool sampled_path = false) {
  OdeParams pr{p, N, mu, false};
  BundleParams bp{A, C, 0.0, p};
  ShootOptions o = opts;
  o.mu = mu;
  // sampled_path reproduces the exact step sequence of the final dense
  // shoot, so the reported trajectory residual is the minimized one
  Profile prof = run_shoot(pr, blowup_tail_terms(p, mu, A, C), bp, o, sampled_path);
  ResidualEval r;
  if (prof.stalled) return r;
  r.r1 = prof.residual[0];
  r.r2 = prof.residual[1];
  for (double v : prof.f) r.amplitude = std::max(r.amplitude, std::abs(v));
  r.ok = std::isfinite(r.r1) && std::isfinite(r.r2);
  return r;
}

// Bisect r1(C) = f'(0) inside a sign-change bracket.
double bisect_c(double p, int N, double mu, double A, double clo, double chi, double rlo,
                const ShootOptions& opts) {
  for (int it = 0; it < 80; ++it) {
    const double cm = 0.5 * (clo + chi);
    const ResidualEval rm = eval_residual(p, N, mu, A, cm, opts);
    if (!rm.ok) break;
    if ((rm.r1 > 0) == (rlo > 0)) {
      clo = cm;
      rlo = rm.r1;
    } else {
      chi = cm;
    }
    if (chi - clo < 1e-13 * (1.0 + std::abs(clo))) break;
  }
  return 0.5 * (clo + chi);
}

struct Candidate {
  double A = 0, C = 0, r2 = 0, amplitude = 0;
};

// All nontrivial C-roots of f'(0) = 0 at fixed A inside the scan window.
std::vector<Candidate> c_roots(double p, int N, double mu, double A, const SolveOptions& so,
                               const ShootOptions& scan_opts) {
  std::vector<Candidate> roots;
  double prev_c = so.c_window_lo;
  ResidualEval prev = eval_residual(p, N, mu, A, prev_c, scan_opts);
  for (int i = 1; i < so.c_scan; ++i) {
    const double c = so.c_window_lo + (so.c_window_hi - so.c_window_lo) * i / (so.c_scan - 1);
    const ResidualEval cur = eval_residual(p, N, mu, A, c, scan_opts);
    if (prev.ok && cur.ok && prev.r1 * cur.r1 < 0) {
      const double cr = bisect_c(p, N, mu, A, prev_c, c, prev.r1, scan_opts);
      const ResidualEval at = eval_residual(p, N, mu, A, cr, scan_opts);
      if (at.ok && at.amplitude > 1e-7)
        roots.push_back({A, cr, at.r2, at.amplitude});
    }
    prev = cur;
    prev_c = c;
  }
  return roots;
}

std::optional<std::array<double, 2>> newton_2d(double p, int N, double mu, double A, double C,
                                               const SolveOptions& so) {
  const ShootOptions& opts = so.shoot;
  auto norm2 = [](const ResidualEval& r) { return std::max(std::abs(r.r1), std::abs(r.r2)); };
  ResidualEval r = eval_residual(p, N, mu, A, C, opts, true);
  if (!r.ok) return std::nullopt;
  for (int it = 0; it < so.max_newton; ++it) {
    const double scale = std::max(1.0, r.amplitude);
    if (norm2(r) <= so.residual_tol * scale) {
      if (r.amplitude < 1e-4) return std::nullopt;  // fell into the trivial root
      return std::array<double, 2>{A, C};
    }
    const double ha = 1e-6 * (1.0 + std::abs(A));
    const double hc = 1e-6 * (1.0 + std::abs(C));
    const ResidualEval ra = eval_residual(p, N, mu, A + ha, C, opts, true);
    const ResidualEval rc = eval_residual(p, N, mu, A, C + hc, opts, true);
    if (!ra.ok || !rc.ok) return std::nullopt;
    const double j11 = (ra.r1 - r.r1) / ha, j12 = (rc.r1 - r.r1) / hc;
    const double j21 = (ra.r2 - r.r2) / ha, j22 = (rc.r2 - r.r2) / hc;
    const double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-300) return std::nullopt;
    const double dA = (j22 * r.r1 - j12 * r.r2) / det;
    const double dC = (-j21 * r.r1 + j11 * r.r2) / det;
    double lam = 1.0;
    bool improved = false;
    for (int bt = 0; bt < 10; ++bt) {
      const ResidualEval rt = eval_residual(p, N, mu, A - lam * dA, C - lam * dC, opts, true);
      if (rt.ok && norm2(rt) < norm2(r)) {
        A -= lam * dA;
        C -= lam * dC;
        r = rt;
        improved = true;
        break;
      }
      lam *= 0.5;
    }
    if (!improved) return std::nullopt;
  }
  const double scale = std::max(1.0, r.amplitude);
  if (norm2(r) <= so.residual_tol * scale && r.amplitude >= 1e-4)
    return std::array<double, 2>{A, C};
  return std::nullopt;
}

Profile finish_profile(double p, int N, double mu, double A, double C,
                       const SolveOptions& so) {
  OdeParams pr{p, N, mu, false};
  BundleParams bp{A, C, 0.0, p};
  ShootOptions o = so.shoot;
  o.mu = mu;
  Profile prof = run_shoot(pr, blowup_tail_terms(p, mu, A, C), bp, o, true);
  // Normalized representative: the equation is odd, so pin f(0) >= 0.
  if (!prof.f.empty() && prof.f.front() < 0) {
    for (auto* arr : {&prof.f, &prof.f1, &prof.f2, &prof.f3})
      for (double& v : *arr) v = -v;
    prof.params.A = -prof.params.A;
    prof.params.C = -prof.params.C;
    prof.residual[0] = -prof.residual[0];
    prof.residual[1] = -prof.residual[1];
  }
  return prof;
}

// Regime defaults for the sweep windows (see SolveOptions).
SolveOptions resolve_windows(double p, int N, const SolveOptions& so) {
  SolveOptions r = so;
  const double p0 = 1.0 + 2.0 / N;
  if (std::isnan(r.c_window_lo) || std::isnan(r.c_window_hi) || r.c_scan <= 0) {
    if (std::abs(p - p0) < 1e-12) {
      r.c_window_lo = -40;
      r.c_window_hi = 40;
      r.c_scan = 161;
    } else if (p < p0) {
      r.c_window_lo = -320;
      r.c_window_hi = 320;
      r.c_scan = 321;
    } else {
      r.c_window_lo = -60;
      r.c_window_hi = 60;
      r.c_scan = 241;
    }
  }
  if (std::isnan(r.a_window_lo) || std::isnan(r.a_window_hi) || r.a_scan <= 0) {
    if (p < p0) {
      r.a_window_lo = -16;
      r.a_window_hi = 2;
      r.a_scan = 37;
    } else {
      r.a_window_lo = -2;
      r.a_window_hi = 3;
      r.a_scan = 21;
    }
  }
  return r;
}

Profile solve_profile_mu(double p, int N, double mu, const BundleParams* seed,
                         const SolveOptions& so_in) {
  const SolveOptions so = resolve_windows(p, N, so_in);
  // Newton from the seed first.
  if (seed) {
    const auto hit = newton_2d(p, N, mu, seed->A, seed->C, so);
    if (hit) return finish_profile(p, N, mu, (*hit)[0], (*hit)[1], so);
  }

  // Fallback: the nested sweep. Scanning runs at reduced tolerance.
  SolveOptions scan = so;
  ShootOptions scan_opts = so.shoot;
  scan_opts.rtol = std::max(so.shoot.rtol, 3e-8);
  scan_opts.mu = mu;

  // The A = 0 slice is exact only in the blow-up frame at the Fujita
  // exponent (there the equation integrates once and f'''(0) = 0 follows
  // from f'(0) = 0); continuation frames mu != 1/4 need the full 2D sweep.
  const double p0 = 1.0 + 2.0 / N;
  const bool at_fujita = std::abs(p - p0) < 1e-12 && mu == 0.25;

  std::vector<double> a_grid;
  if (at_fujita) {
    a_grid = {0.0};
  } else {
    for (int i = 0; i < so.a_scan; ++i)
      a_grid.push_back(so.a_window_lo + (so.a_window_hi - so.a_window_lo) * i / (so.a_scan - 1));
  }

  // Collect C-root branches over the A grid and look for f'''(0) = 0.
  std::vector<std::vector<Candidate>> rows;
  for (double A : a_grid) rows.push_back(c_roots(p, N, mu, A, scan, scan_opts));

  if (at_fujita) {
    // A = 0: every C-root is a candidate; f'''(0) vanishes along this slice
    // when the root is genuine. Take the smallest-|C| one and polish.
    std::vector<Candidate> cands = rows[0];
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return std::abs(a.C) < std::abs(b.C); });
    for (const Candidate& c : cands) {
      const auto hit = newton_2d(p, N, mu, c.A, c.C, so);
      if (hit) return finish_profile(p, N, mu, (*hit)[0], (*hit)[1], so);
    }
    throw NoProfileFound("solve_profile: no C-root polished to tolerance at A = 0");
  }

  // Track branches by nearest C between consecutive A rows; bisect r2 sign
  // changes in A.
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    for (const Candidate& a : rows[i]) {
      const Candidate* best = nullptr;
      double bestd = 1e300;
      for (const Candidate& b : rows[i + 1]) {
        const double d = std::abs(b.C - a.C);
        if (d < bestd) {
          bestd = d;
          best = &b;
        }
      }
      if (!best) continue;
      const double dc_grid = (so.c_window_hi - so.c_window_lo) / (so.c_scan - 1);
      if (bestd > 10.0 * dc_grid + 0.12 * (1.0 + std::abs(a.C))) continue;  // branch lost
      if (a.r2 * best->r2 >= 0) continue;

      // Bisection in A along the branch.
      double alo = a.A, ahi = best->A, r2lo = a.r2, c_near = a.C;
      for (int it = 0; it < 60; ++it) {
        const double am = 0.5 * (alo + ahi);
        const std::vector<Candidate> mid = c_roots(p, N, mu, am, scan, scan_opts);
        const Candidate* pick = nullptr;
        double bd = 1e300;
        for (const Candidate& c : mid) {
          const double d = std::abs(c.C - c_near);
          if (d < bd) {
            bd = d;
            pick = &c;
          }
        }
        if (!pick) break;
        c_near = pick->C;
        if ((pick->r2 > 0) == (r2lo > 0)) {
          alo = am;
          r2lo = pick->r2;
        } else {
          ahi = am;
        }
        if (ahi - alo < 1e-10 * (1.0 + std::abs(alo))) break;
      }
      const auto hit = newton_2d(p, N, mu, 0.5 * (alo + ahi), c_near, so);
      if (hit) return finish_profile(p, N, mu, (*hit)[0], (*hit)[1], so);
    }
  }
  throw NoProfileFound("solve_profile: no sign change of f'''(0) across the (A, C) window");
}

}  // namespace

Profile solve_profile(double p, int N, const BundleParams* seed, const SolveOptions& opts) {
  if (!(p > 1)) throw ContractViolation("solve_profile: p > 1 required");
  if (N < 1) throw ContractViolation("solve_profile: N >= 1 required");
  return solve_profile_mu(p, N, opts.shoot.mu, seed, opts);
}

ProfileMass profile_mass(const Profile& prof) {
  ProfileMass out;
  if (prof.y.empty()) return out;
  const double p = prof.params.p;
  const int N = prof.N;
  const double p0 = 1.0 + 2.0 / N;
  const double m = 2.0 / (p - 1.0);
  const double y_max = prof.y.back();
  double amp = 0;
  for (double v : prof.f) amp = std::max(amp, std::abs(v));

  // trapezoid over the trajectory (even symmetric extension across 0)
  double body = 0;
  const double area = (N == 1) ? 2.0 : unit_sphere_area(N);
  for (std::size_t i = 0; i + 1 < prof.y.size(); ++i) {
    const double h = prof.y[i + 1] - prof.y[i];
    auto wgt = [&](std::size_t k) {
      return (N == 1) ? 1.0 : std::pow(prof.y[k], N - 1);
    };
    body += 0.5 * h * (prof.f[i] * wgt(i) + prof.f[i + 1] * wgt(i + 1));
  }
  body *= area;

  // analytic A-term tail; integrable iff m > N, i.e. p < p0. A solved
  // Fujita-exponent profile carries |A| at the polish tolerance, not an
  // actual algebraic tail, hence the amplitude-relative cut.
  double tail = 0;
  const double A = prof.params.A;
  if (std::abs(A) > 1e-6 * std::max(1.0, amp)) {
    if (p >= p0) {
      out.nonintegrable_tail = true;
    } else {
      tail += area * A * std::pow(y_max, N - m) / (m - N);
    }
  }
  // exponential-term tail, numerically negligible at y_max >= 10 but cheap
  const double C = prof.params.C;
  if (C != 0 && !out.nonintegrable_tail) {
    const double a0 = tail_a0();
    tail += area * gauss_integrate(
                       [&](double y) {
                         return C * std::pow(y, -1.0 / 3.0 + (N - 1)) *
                                std::exp(-a0 * std::pow(y, 4.0 / 3.0));
                       },
                       y_max, y_max + 30.0, 64);
  }
  out.mass = body + tail;
  return out;
}

G0Curve limit_profile_g0(double p, double z_max) {
  if (!(p > 1)) throw ContractViolation("limit_profile_g0: p > 1 required");
  if (!(z_max > 0)) throw ContractViolation("limit_profile_g0: z_max > 0 required");
  const double gamma = 1.0 / (2.0 * (p - 1.0));
  const double eps_reg = 1e-14;

  // classic RK4 with a degeneracy stop (g -> 0 ends the interval of
  // monotone existence)
  const int max_steps = 200000;
  const double h = std::min(z_max / 20000.0, 1e-3);
  double z = 0, g = 1, g1 = 0;
  G0Curve out;
  auto deriv2 = [&](double zz, double gg, double gg1, bool& ok) {
    const double den = p * std::pow(std::abs(gg), p - 1.0);
    if (den < eps_reg || !(gg > 0)) {
      ok = false;
      return 0.0;
    }
    ok = true;
    const double cross = p * (p - 1.0) * std::pow(std::abs(gg), p - 3.0) * gg * gg1 * gg1;
    return (-0.25 * zz * gg1 - gamma * gg - cross) / den;
  };
  const int stride = std::max(1, max_steps / 4000);
  int step = 0;
  out.z.push_back(z);
  out.g.push_back(g);
  while (z < z_max && step < max_steps) {
    bool ok = true;
    const double k1g = g1, k1v = deriv2(z, g, g1, ok);
    if (!ok) break;
    const double k2g = g1 + 0.5 * h * k1v, k2v = deriv2(z + 0.5 * h, g + 0.5 * h * k1g, g1 + 0.5 * h * k1v, ok);
    if (!ok) break;
    const double k3g = g1 + 0.5 * h * k2v, k3v = deriv2(z + 0.5 * h, g + 0.5 * h * k2g, g1 + 0.5 * h * k2v, ok);
    if (!ok) break;
    const double k4g = g1 + h * k3v, k4v = deriv2(z + h, g + h * k3g, g1 + h * k3v, ok);
    if (!ok) break;
    g += h * (k1g + 2 * k2g + 2 * k3g + k4g) / 6.0;
    g1 += h * (k1v + 2 * k2v + 2 * k3v + k4v) / 6.0;
    z += h;
    ++step;
    if (!(g > 0)) {
      out.degenerate = true;
      break;
    }
    if (step % stride == 0 || z >= z_max) {
      out.z.push_back(z);
      out.g.push_back(g);
    }
  }
  if (z < z_max && !out.degenerate) out.degenerate = true;
  if (out.z.back() != z && g > 0) {
    out.z.push_back(z);
    out.g.push_back(g);
  }
  return out;
}

MuBranch mu_continuation(double p, int N, int steps, const SolveOptions& opts) {
  if (steps < 2) throw ContractViolation("mu_continuation: steps >= 2 required");
  // The branch is anchored at the blow-up frame mu = 1/4 (the only frame
  // where a cold sweep is well-conditioned) and tracked towards mu = 0 by
  // predictor-corrector steps; the (A, C) chart degenerates as mu -> 0
  // (the algebraic exponent gamma/mu grows without bound), so small-mu
  // points can be genuinely unreachable and are reported as lost.
  auto options_at = [&](double mu) {
    SolveOptions so = opts;
    so.shoot.mu = mu;
    const double a0mu = 0.75 * std::cbrt(mu);  // slower tail decay needs longer domains
    so.shoot.y_max = std::max(opts.shoot.y_max, std::pow(17.0 / a0mu, 0.75));
    return so;
  };

  MuBranch branch;
  Profile anchor = solve_profile_mu(p, N, 0.25, nullptr, options_at(0.25));
  branch.points.push_back({0.25, anchor});
  branch.last_good_mu = 0.25;

  BundleParams seed = anchor.params, seed_prev = anchor.params;
  double mu_cur = 0.25, mu_prev = 0.25;
  for (int j = steps - 1; j >= 1; --j) {
    const double mu_target = 0.25 * j / steps;
    double dmu = std::min(0.005, mu_cur - mu_target);
    bool reached = false;
    while (!reached) {
      if (dmu < 1e-5) {
        branch.lost = true;
        break;
      }
      const double mu_try = std::max(mu_target, mu_cur - dmu);
      BundleParams pred = seed;
      if (mu_prev > mu_cur) {  // linear predictor once two points exist
        const double w = (mu_cur - mu_try) / (mu_prev - mu_cur);
        pred.A = seed.A + (seed.A - seed_prev.A) * w;
        pred.C = seed.C + (seed.C - seed_prev.C) * w;
      }
      // Newton only along the walk: the sweep fallback could hop branches.
      const SolveOptions so = options_at(mu_try);
      const auto hit = newton_2d(p, N, mu_try, pred.A, pred.C, so);
      bool ok = false;
      if (hit) {
        seed_prev = seed;
        seed = BundleParams{(*hit)[0], (*hit)[1], 0.0, p};
        mu_prev = mu_cur;
        mu_cur = mu_try;
        ok = true;
        if (mu_try == mu_target) {
          Profile pr = finish_profile(p, N, mu_try, (*hit)[0], (*hit)[1], so);
          branch.points.push_back({mu_target, std::move(pr)});
          branch.last_good_mu = mu_target;
          reached = true;
        }
      }
      dmu = ok ? std::min(1.5 * dmu, 0.01) : 0.5 * dmu;
    }
    if (branch.lost) break;
  }
  std::reverse(branch.points.begin(), branch.points.end());
  return branch;
}

}  // namespace ch
