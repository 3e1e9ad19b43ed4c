/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_RESCALE_RESCALE_HPP
#define CHPDE_RESCALE_RESCALE_HPP

#include "core/grid.hpp"
#include "sim/simulate.hpp"

namespace ch {

enum class ScalingRule { sobolev, lp1 };
enum class DeltaBehavior { vanishes, unit, grows };

// Exponent algebra of the blow-up rescaling u_k = C_k v_k(y, s), x = a_k y:
// the rescaled nonlinearity carries delta_k = C_k^{gamma_i}, and the sign of
// the governing gamma decides whether it vanishes in the limit.
struct ScalingReport {
  double p = 0;
  int N = 0;
  double alpha = 0;
  ScalingRule rule = ScalingRule::sobolev;
  double gamma1 = 0;  // p - 1 - 2(alpha+2)/(N-2)   (sobolev rule)
  bool gamma1_defined = false;
  double gamma2 = 0;  // p - 1 - (p+1)(alpha+2)/(alpha+N)  (lp1 rule)
  double a_k_exponent = 0;  // a_k = C_k^{a_k_exponent}
  double p_star = 0;        // +inf for N <= 2
  bool p_star_finite = false;
  double p_star_alpha = 0;
  bool p_star_alpha_defined = false;
  DeltaBehavior delta_behavior = DeltaBehavior::vanishes;
};

ScalingReport scaling_exponents(double p, int N, double alpha,
                                ScalingRule rule = ScalingRule::sobolev);

// Similarity frame v(y) = (T-t)^{1/(2(p-1))} u(y (T-t)^{1/4}) by cubic
// interpolation onto y_grid; y outside the data range is dropped (masked
// per node), never extrapolated. Periodic source grids are read in
// centered coordinates with the blow-up locus at x = x_center.
struct SimilarityFrame {
  Field v;  // dropped nodes hold zero
  std::vector<char> valid;
};

SimilarityFrame to_similarity(const Field& u, double p, double T, double t,
                              const Grid& y_grid, double x_center = 0.0);

// Rescales the trailing snapshots of a blow-up run with T_est; returns the
// final rescaled profile and the sup-gap between the last two rescalings.
struct ExtractedProfile {
  Field f;
  std::vector<char> valid;
  double convergence_gap = 0;
  double T_est = 0;
};

ExtractedProfile extract_profile(const SimResult& result, double p, const Grid& y_grid);

// Mass-law exponent N(p - p0)/(4(p-1)) of the similarity family.
double mass_law_exponent(double p, int N);

}  // namespace ch

#endif
