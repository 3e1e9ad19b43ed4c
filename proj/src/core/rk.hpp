/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_RK_HPP
#define CHPDE_CORE_RK_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ch {

template <int D>
struct OdeResult {
  std::vector<double> t;
  std::vector<std::array<double, D>> y;
  bool stalled = false;
  long steps = 0;
};

// Adaptive Dormand-Prince 5(4). Handles either integration direction.
// If `samples` is non-null the trajectory is recorded exactly at those
// times (monotone from t0 towards t1); otherwise at every accepted step.
// A step-size underflow sets `stalled` and returns the partial trajectory.
template <int D, class Rhs>
OdeResult<D> integrate_ode(Rhs&& rhs, const std::array<double, D>& y0, double t0, double t1,
                           double rtol, double atol,
                           const std::vector<double>* samples = nullptr,
                           long max_steps = 5000000) {
  using State = std::array<double, D>;
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                          e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  OdeResult<D> out;
  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  double t = t0;
  State y = y0;
  double h = dir * std::min(1e-2 * (span > 0 ? span : 1.0), 0.1);
  const double hmin = std::max(1e-14 * span, 1e-300);

  std::size_t next_sample = 0;
  auto record = [&](double tt, const State& yy) {
    out.t.push_back(tt);
    out.y.push_back(yy);
  };
  if (!samples) record(t, y);
  else if (next_sample < samples->size() && (*samples)[next_sample] == t0) {
    record(t, y);
    ++next_sample;
  }

  State k1 = rhs(t, y);
  while (dir * (t1 - t) > 0) {
    if (out.steps++ > max_steps) {
      out.stalled = true;
      break;
    }
    double target = t1;
    if (samples && next_sample < samples->size()) target = (*samples)[next_sample];
    if (dir * (t + h - target) > 0) h = target - t;

    State k2, k3, k4, k5, k6, k7, yt, ynew;
    auto axpy = [&](const State& base, std::initializer_list<std::pair<double, const State*>> terms) {
      State r = base;
      for (auto& [a, v] : terms)
        for (int i = 0; i < D; ++i) r[i] += h * a * (*v)[i];
      return r;
    };
    yt = axpy(y, {{a21, &k1}});
    k2 = rhs(t + c2 * h, yt);
    yt = axpy(y, {{a31, &k1}, {a32, &k2}});
    k3 = rhs(t + c3 * h, yt);
    yt = axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    k4 = rhs(t + c4 * h, yt);
    yt = axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    k5 = rhs(t + c5 * h, yt);
    yt = axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    k6 = rhs(t + h, yt);
    ynew = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    k7 = rhs(t + h, ynew);

    double err = 0;
    bool finite = true;
    for (int i = 0; i < D; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                            e6 * k6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sc) * (e / sc);
      if (!std::isfinite(ynew[i])) finite = false;
    }
    err = std::sqrt(err / D);

    if (finite && err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      if (!samples) record(t, y);
      else if (next_sample < samples->size() &&
               std::abs(t - (*samples)[next_sample]) <= 1e-12 * (1.0 + std::abs(t))) {
        record(t, y);
        ++next_sample;
      }
    }
    double fac = finite ? 0.9 * std::pow(std::max(err, 1e-10), -0.2) : 0.25;
    fac = std::min(5.0, std::max(0.2, fac));
    h *= fac;
    if (std::abs(h) < hmin) {
      out.stalled = true;
      break;
    }
  }
  if (!samples && (out.t.empty() || out.t.back() != t)) record(t, y);
  return out;
}

}  // namespace ch

#endif
