/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_INTERP_HPP
#define CHPDE_CORE_INTERP_HPP

#include <vector>

namespace ch {

// Natural cubic spline through (x_i, y_i), x strictly increasing.
// Evaluation outside [x.front(), x.back()] is refused (no extrapolation).
class CubicSpline {
public:
  CubicSpline(std::vector<double> x, std::vector<double> y);

  bool in_range(double x) const;
  double operator()(double x) const;  // throws ContractViolation out of range

  double xmin() const { return x_.front(); }
  double xmax() const { return x_.back(); }

private:
  std::vector<double> x_, y_, m_;  // m_ = second derivatives at knots
};

}  // namespace ch

#endif
