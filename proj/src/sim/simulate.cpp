/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "sim/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/norms.hpp"
#include "core/transforms.hpp"

namespace ch {

namespace {

double sup_norm(const Field& f) {
  double m = 0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

SeriesRecord make_record(double t, const Field& u, const SimConfig& cfg) {
  SeriesRecord r;
  r.t = t;
  const Norms nm = norms(u, cfg.p);
  r.sup = nm.linf;
  r.h1 = nm.h1_semi;
  r.energy = energy(u, cfg.p, cfg.sign_stable);
  r.mass = mass(u);
  return r;
}

}  // namespace

void SimConfig::validate(const Field& u0) const {
  if (!(p > 1)) throw ContractViolation("sim: p > 1 required");
  if (!(dt0 > 0) || !(dt_min > 0) || !(dt_min < dt0))
    throw ContractViolation("sim: need 0 < dt_min < dt0");
  if (!(t_end > 0)) throw ContractViolation("sim: t_end > 0 required");
  if (snapshot_stride < 1) throw ContractViolation("sim: snapshot_stride >= 1 required");
  if (!grid.spectral()) throw ContractViolation("sim: navier or periodic line grid required");
  if (!(u0.grid == grid)) throw ContractViolation("sim: u0 grid does not match config");
  if (!(blowup_threshold > sup_norm(u0)))
    throw ContractViolation("sim: blow-up threshold M must exceed ||u0||_inf");
}

Field step_imex(const Field& u, const SimConfig& cfg, double dt) {
  if (!(dt > 0)) throw ContractViolation("step_imex: dt > 0 required");
  if (!u.grid.spectral()) throw ContractViolation("step_imex: spectral grid required");
  const Grid& g = u.grid;
  const bool navier = (g.bc == Grid::Bc::navier);
  const std::vector<double> kap = wavenumbers(g);

  std::vector<double> uh = navier ? sine_forward(u) : periodic_forward(u);
  std::vector<double> nh(g.n, 0.0);
  if (cfg.nonlinear) {
    Field nl(g);
    for (int j = 0; j < g.n; ++j)
      nl[j] = std::pow(std::abs(u[j]), cfg.p - 1.0) * u[j];
    nh = navier ? sine_forward(nl) : periodic_forward(nl);
  }
  const double flux_sign = cfg.sign_stable ? -1.0 : 1.0;
  for (int i = 0; i < g.n; ++i) {
    const double k2 = kap[i] * kap[i];
    const double expl = uh[i] + dt * (cfg.gamma * uh[i] + flux_sign * k2 * nh[i]);
    uh[i] = expl / (1.0 + dt * k2 * k2);
  }
  Field out = navier ? sine_inverse(g, uh) : periodic_inverse(g, uh);
  out.ensure_finite("step_imex");
  return out;
}

double energy(const Field& u, double p, bool sign_stable) {
  const Norms nm = norms(u, p);
  const double pot = integrate_abs_pow(u, p + 1.0) / (p + 1.0);
  return 0.5 * nm.h1_semi * nm.h1_semi + (sign_stable ? pot : -pot);
}

double mass(const Field& u) { return integrate(u); }

SimResult run(const SimConfig& cfg, const Field& u0) {
  cfg.validate(u0);
  u0.ensure_finite("run");
  SimResult res;
  Field u = u0;
  double t = 0;
  double dt = cfg.dt0;
  long accepted = 0;

  res.series.push_back(make_record(0.0, u, cfg));
  res.snapshots.emplace_back(0.0, u);

  while (t < cfg.t_end) {
    const double step = std::min(dt, cfg.t_end - t);
    Field unew(u.grid);
    try {
      unew = step_imex(u, cfg, step);
    } catch (const NonfiniteValue&) {
      res.status = SimStatus::nonfinite;
      return res;
    }

    double change = 0;
    for (int j = 0; j < u.size(); ++j) change = std::max(change, std::abs(unew[j] - u[j]));
    const double rel = change / (1.0 + sup_norm(u));

    if (rel > res.adapt_halve_threshold) {
      dt = 0.5 * step;
      if (dt < cfg.dt_min) {
        res.status = SimStatus::dt_underflow;
        return res;
      }
      continue;  // reject and retry
    }

    t += step;
    u = std::move(unew);
    ++accepted;
    res.series.push_back(make_record(t, u, cfg));
    if (accepted % cfg.snapshot_stride == 0) res.snapshots.emplace_back(t, u);

    if (rel < res.adapt_double_threshold) dt = std::min(2.0 * dt, cfg.dt0);
    if (dt < cfg.dt_min) {
      res.status = SimStatus::dt_underflow;
      return res;
    }

    if (res.series.back().sup >= cfg.blowup_threshold) {
      res.status = SimStatus::blowup;
      res.dt_collapsed = dt <= cfg.dt0 / 8.0;
      if (res.snapshots.back().first != t) res.snapshots.emplace_back(t, u);

      // Trailing monotone-growth window for the rate fit.
      std::vector<double> ts, sups;
      for (std::size_t i = res.series.size(); i-- > 1;) {
        if (res.series[i].sup <= res.series[i - 1].sup) break;
        ts.push_back(res.series[i].t);
        sups.push_back(res.series[i].sup);
        if (ts.size() >= 2000) break;
      }
      std::reverse(ts.begin(), ts.end());
      std::reverse(sups.begin(), sups.end());
      if (ts.size() >= 10) {
        const BlowupFit fit = fit_blowup_rate(ts, sups);
        res.T_est = fit.T_est;
        res.fit_exponent = fit.exponent;
        res.fit_reliable = fit.reliable;
      }
      if (!res.fit_reliable || !(res.T_est > t)) {
        res.T_est = t + dt;  // fallback; flagged unreliable
        res.fit_reliable = false;
      }
      return res;
    }
  }
  res.status = SimStatus::completed;
  return res;
}

namespace {

// Linear least squares of y = a + b x; returns (a, b, sse).
struct LinFit {
  double a = 0, b = 0, sse = 0;
};

LinFit linfit(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  LinFit f;
  const double det = n * sxx - sx * sx;
  f.b = (n * sxy - sx * sy) / det;
  f.a = (sy - f.b * sx) / n;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - f.a - f.b * x[i];
    f.sse += r * r;
  }
  return f;
}

}  // namespace

BlowupFit fit_blowup_rate(const std::vector<double>& t, const std::vector<double>& sup) {
  if (t.size() != sup.size() || t.size() < 10)
    throw ContractViolation("fit_blowup_rate: need >= 10 samples");
  BlowupFit out;
  for (std::size_t i = 1; i < sup.size(); ++i) {
    if (!(sup[i] > sup[i - 1]) || !(t[i] > t[i - 1])) {
      out.reliable = false;
      out.T_est = t.back();
      return out;
    }
  }
  std::vector<double> ly(sup.size());
  for (std::size_t i = 0; i < sup.size(); ++i) ly[i] = std::log(sup[i]);

  const double t_last = t.back();
  const double span = std::max(t_last - t.front(), 1e-30);
  auto sse_of = [&](double T) {
    std::vector<double> x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) x[i] = -std::log(T - t[i]);
    return linfit(x, ly);
  };

  // Coarse log-spaced scan of the gap T - t_last, then golden-section refine.
  double best_T = t_last + span, best_sse = 1e300;
  for (int k = 0; k <= 240; ++k) {
    const double gap = span * std::pow(10.0, -10.0 + 11.0 * k / 240.0);  // span*1e-10 .. 10*span
    const double T = t_last + gap;
    const double s = sse_of(T).sse;
    if (s < best_sse) {
      best_sse = s;
      best_T = T;
    }
  }
  double lo = t_last + (best_T - t_last) / 12.0;
  double hi = t_last + (best_T - t_last) * 12.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = sse_of(x1).sse, f2 = sse_of(x2).sse;
  for (int it = 0; it < 200; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = sse_of(x1).sse;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = sse_of(x2).sse;
    }
    if (hi - lo < 1e-14 * (1.0 + std::abs(t_last))) break;
  }
  out.T_est = 0.5 * (lo + hi);
  const LinFit f = sse_of(out.T_est);
  out.exponent = f.b;
  out.reliable = true;
  return out;
}

}  // namespace ch
