/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "core/grid.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ch {

Grid Grid::line(double L, int n, Bc bc) {
  if (!(L > 0) || !std::isfinite(L)) throw ContractViolation("grid: length must be positive and finite");
  if (n < 8) throw ContractViolation("grid: need at least 8 points");
  Grid g;
  g.geometry = Geometry::line;
  g.bc = bc;
  g.n = n;
  g.length = L;
  g.dim = 1;
  return g;
}

Grid Grid::radial(int N, double R, int n) {
  if (N < 1) throw ContractViolation("grid: radial dimension must be >= 1");
  if (!(R > 0) || !std::isfinite(R)) throw ContractViolation("grid: radius must be positive and finite");
  if (n < 8) throw ContractViolation("grid: need at least 8 points");
  Grid g;
  g.geometry = Geometry::radial;
  g.bc = Bc::navier;  // unused for radial; symmetry conditions at r = 0
  g.n = n;
  g.length = R;
  g.dim = N;
  return g;
}

double Grid::spacing() const {
  if (geometry == Geometry::line && bc == Bc::navier) return length / (n + 1);
  return length / n;
}

double Grid::coord(int j) const {
  const double h = spacing();
  if (geometry == Geometry::line && bc == Bc::navier) return (j + 1) * h;
  return j * h;
}

std::vector<double> Grid::coords() const {
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) x[j] = coord(j);
  return x;
}

double Grid::centered_coord(int j) const {
  double x = coord(j);
  if (geometry == Geometry::line && bc == Bc::periodic && x >= 0.5 * length) x -= length;
  return x;
}

Field::Field(const Grid& g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != g.n)
    throw ContractViolation("field: value count does not match grid point count");
}

Field::Field(const Grid& g) : grid(g), values(g.n, 0.0) {}

bool Field::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

void Field::ensure_finite(const char* context) const {
  if (!all_finite()) throw NonfiniteValue(std::string(context) + ": field contains NaN/Inf");
}

}  // namespace ch
