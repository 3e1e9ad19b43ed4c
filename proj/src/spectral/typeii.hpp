/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_SPECTRAL_TYPEII_HPP
#define CHPDE_SPECTRAL_TYPEII_HPP

#include "spectral/hermite.hpp"

namespace ch {

// int W0^{p_S} over R^N by radial quadrature (W0 the explicit positive
// radial ground state with W0(0) = d).
double e_N_constant(int N, double d);

// h_beta = -e_N (Delta psi_beta)(0). Vanishes unless every component of
// beta is even. Requires N >= 3 (the constant e_N needs p = p_S(N)).
double h_beta(const MultiIndex& beta, int N, double d = 1.0);

// (Delta psi_beta)(0) in closed form via symbol moments (gamma functions).
double laplacian_psi_at_zero(const MultiIndex& beta, int N);

// alpha_beta = (2|beta| + N - 2)/8.
double alpha_beta(int order, int N);

struct Type2Balance {
  double phi_rate = 0;  //  alpha_beta
  double c_rate = 0;    // -alpha_beta
};
Type2Balance type2_balance(int order, int N);

}  // namespace ch

#endif
