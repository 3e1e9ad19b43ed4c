/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_GRID_HPP
#define CHPDE_CORE_GRID_HPP

#include <vector>

namespace ch {

// Spatial discretization of an interval or a radial line.
//
// line + navier:   interior nodes x_j = j h, j = 1..n, h = L/(n+1);
//                  u = u'' = 0 at x = 0 and x = L held implicitly.
// line + periodic: nodes x_j = j h, j = 0..n-1, h = L/n.
// radial:          nodes r_j = j h, j = 0..n-1, h = R/n; symmetry u'(0) = 0
//                  at the origin, u = 0 beyond r = R.
struct Grid {
  enum class Geometry { line, radial };
  enum class Bc { navier, periodic };

  Geometry geometry = Geometry::line;
  Bc bc = Bc::navier;
  int n = 0;          // sample count
  double length = 0;  // L for line, R for radial
  int dim = 1;        // ambient dimension N (radial only; 1 for line)

  static Grid line(double L, int n, Bc bc);
  static Grid radial(int N, double R, int n);

  double spacing() const;
  double coord(int j) const;
  std::vector<double> coords() const;
  // Signed coordinate with the periodic wrap folded into [-L/2, L/2).
  double centered_coord(int j) const;

  bool spectral() const { return geometry == Geometry::line; }
  bool operator==(const Grid& o) const = default;
};

// Sampled real-valued function on a grid. Values must stay finite;
// NaN/Inf is a detected failure state, never silent.
struct Field {
  Grid grid;
  std::vector<double> values;

  Field() = default;
  Field(const Grid& g, std::vector<double> v);
  explicit Field(const Grid& g);  // zero field

  int size() const { return static_cast<int>(values.size()); }
  double& operator[](int j) { return values[j]; }
  double operator[](int j) const { return values[j]; }

  // Throws NonfiniteValue if any entry is NaN or infinite.
  void ensure_finite(const char* context) const;
  bool all_finite() const;
};

}  // namespace ch

#endif
