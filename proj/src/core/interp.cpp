/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "core/interp.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ch {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = static_cast<int>(x_.size());
  if (n < 3 || y_.size() != x_.size())
    throw ContractViolation("cubic spline: need >= 3 matching points");
  for (int i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1])) throw ContractViolation("cubic spline: x not increasing");

  // Tridiagonal sweep for natural end conditions (m_0 = m_{n-1} = 0).
  m_.assign(n, 0.0);
  std::vector<double> u(n, 0.0);
  for (int i = 1; i + 1 < n; ++i) {
    const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
    const double p = sig * m_[i - 1] + 2.0;
    m_[i] = (sig - 1.0) / p;
    const double d = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
                     (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
    u[i] = (6.0 * d / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
  }
  for (int i = n - 2; i >= 1; --i) m_[i] = m_[i] * m_[i + 1] + u[i];
}

bool CubicSpline::in_range(double x) const { return x >= x_.front() && x <= x_.back(); }

double CubicSpline::operator()(double x) const {
  if (!in_range(x)) throw ContractViolation("cubic spline: evaluation out of range");
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  int i = static_cast<int>(it - x_.begin()) - 1;
  i = std::clamp(i, 0, static_cast<int>(x_.size()) - 2);
  const double h = x_[i + 1] - x_[i];
  const double a = (x_[i + 1] - x) / h;
  const double b = (x - x_[i]) / h;
  return a * y_[i] + b * y_[i + 1] +
         ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6.0;
}

}  // namespace ch
