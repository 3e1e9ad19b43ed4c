/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_SPECTRAL_HERMITE_HPP
#define CHPDE_SPECTRAL_HERMITE_HPP

#include <vector>

#include "spectral/polynomial.hpp"

namespace ch {

struct MultiIndex {
  std::vector<int> comps;  // length N >= 1, entries >= 0

  explicit MultiIndex(std::vector<int> c);
  int order() const;
  int dim() const { return static_cast<int>(comps.size()); }
  bool all_even() const;
  std::int64_t factorial() const;  // beta! = prod comps[i]!
};

// Polynomial eigenfunction of -Delta^2 - (1/4) y.grad with eigenvalue -|beta|/4.
// The exact radical normalizer sqrt(beta!) is carried symbolically:
// the eigenfunction is poly / sqrt(beta_factorial).
struct HermiteEigenfunction {
  MultiIndex beta;
  Rational eigenvalue;          // -|beta|/4
  Poly poly;                    // y^beta + sum_j (1/j!) Delta^{2j} y^beta
  std::int64_t beta_factorial;  // beta!

  double eval(const std::array<double, 3>& y) const;
};

HermiteEigenfunction adjoint_eigenfunction(const MultiIndex& beta);

// -Delta^2 P - (1/4) y.grad P in exact arithmetic.
Poly apply_adjoint_operator(const Poly& p, int nvars);

// Zero-tolerance check of the eigen-identity.
bool eigen_identity_exact(const HermiteEigenfunction& h);

// All multi-indices in N variables with |beta| <= max_order (graded order).
std::vector<MultiIndex> multi_indices_up_to(int N, int max_order);

}  // namespace ch

#endif
