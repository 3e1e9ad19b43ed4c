/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_OPERATORS_HPP
#define CHPDE_CORE_OPERATORS_HPP

#include <vector>

#include "core/grid.hpp"

namespace ch {

// Sine expansion coefficients of a navier-line field (contract error otherwise).
std::vector<double> sine_coefficients(const Field& f);

// Laplacian. Spectral multiplier -kappa^2 on line grids; on radial grids a
// second-order centered difference of f'' + (N-1) f'/r with ghost-point
// symmetry at r = 0 and u = 0 beyond r = R.
Field laplacian(const Field& f);

// (-Delta)^{-1} with v = 0 on the boundary. Navier grids invert the sine
// multiplier; periodic input must have zero mean (else NonInvertible).
Field inverse_laplacian(const Field& f);

// Delta^2 = laplacian applied twice; spectral multiplier +kappa^4.
Field biharmonic(const Field& f);

}  // namespace ch

#endif
