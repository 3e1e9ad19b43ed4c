/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_CORE_TRANSFORMS_HPP
#define CHPDE_CORE_TRANSFORMS_HPP

#include <vector>

#include "core/grid.hpp"

namespace ch {

// Discrete sine expansion on navier line grids: f_j = sum_k u_k sin(k pi x_j / L),
// k = 1..n. Exact diagonalization of the Navier-condition Laplacian.
std::vector<double> sine_forward(const Field& f);
Field sine_inverse(const Grid& g, const std::vector<double>& coeffs);

// Real periodic spectrum in FFTW halfcomplex layout (r0, r1, ..., r_{n/2}, i_{...}, i_1).
std::vector<double> periodic_forward(const Field& f);
Field periodic_inverse(const Grid& g, const std::vector<double>& halfcomplex);

// Mode wavenumbers paired with the coefficient layout above:
// navier  -> kappa_k = k pi / L (k = 1..n),
// periodic -> per halfcomplex slot, kappa = 2 pi k / L.
std::vector<double> wavenumbers(const Grid& g);

// Parseval weight w with  integral(f^2) = w * sum_k c_k^2  in the
// transform layouts above (navier: L/2; periodic: mixed, see impl).
double parseval_weight(const Grid& g);

// integral(f^2) computed in coefficient space (exact Parseval form).
double spectral_l2sq(const Grid& g, const std::vector<double>& coeffs);

}  // namespace ch

#endif
