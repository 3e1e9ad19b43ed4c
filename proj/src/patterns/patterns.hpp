/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_PATTERNS_PATTERNS_HPP
#define CHPDE_PATTERNS_PATTERNS_HPP

#include <string>

#include "core/grid.hpp"

namespace ch {

// Critical exponent catalog for given (N, alpha). Formulas outside their
// validity range are flagged rather than silently evaluated.
struct ExponentReport {
  int N = 0;
  double alpha = 0;
  double p0 = 0;             // 1 + 2/N
  double p1 = 0;             // 1 + 2/(N+1)
  double p_sobolev = 0;      // (N+2)/(N-2), N >= 3
  bool p_sobolev_defined = false;
  double p_star = 0;         // 1 + 4/(N-2), +inf for N <= 2
  bool p_star_finite = false;
  double p_star_alpha = 0;   // 1 + 2(alpha+2)/(N-2), N >= 3
  bool p_star_alpha_defined = false;
  double p_N = 0;            // N/(N-2), N >= 3
  bool p_N_defined = false;
  double p_JL = 0;           // 1 + 4/(N-4-2 sqrt(N-1)), N >= 11
  bool p_JL_defined = false;
};

ExponentReport exponent_report(int N, double alpha);

// Explicit radial singular steady state U(y) = C_* |y|^{-mu}.
struct SingularState {
  double p = 0;
  int N = 0;
  double mu = 0;       // 2/(p-1)
  double D = 0;        // mu (N-2-mu), must be > 0
  double C_star = 0;   // D^{1/(p-1)}
  double c = 0;        // p D
};

SingularState singular_state(double p, int N);

// Radially symmetric positive solution of Delta W + W^{p_S} = 0 with W(0) = d.
double loewner_nirenberg(double xi, double d, int N);

struct HardyCheck {
  double c = 0;      // p D
  double c_H = 0;    // (N-2)^2 / 4
  bool satisfied = false;
};
HardyCheck hardy_criterion(double p, int N);

struct CharacteristicRoots {
  double roots[4] = {2, 3, 0, 0};  // 2, 3, gamma+, gamma-
  bool double_root = false;
  bool complex_pair = false;
};
CharacteristicRoots characteristic_roots(double c, int N);

struct BlowupRate {
  double rho = 0;          // 4|lambda| / ((N-2)(p - p_S))
  double mu_region2 = 0;   // (p-1) rho / 2
  std::string s_law;       // s = e^{(p-1) rho tau} / ((p-1) rho)
};
BlowupRate blowup_rate(double lambda_hat, double p, int N);

struct FinalProfileExponent {
  double gamma = 0;             // 2/(N(p-1))
  bool below_inv_pm1 = false;   // gamma < 1/(p-1)
  bool below_one = false;       // gamma < 1
};
FinalProfileExponent final_profile_exponent(double p, int N);

struct PerturbationBound {
  double lhs = 0;        // c * || Delta(|y|^{-2} u) ||_{L2(B1)}
  double ratio = 0;      // || Delta(|y|^{-2} u) || / ||u||_{W^{2,2}}
  double rhs_bound = 0;  // c * ratio * ||u||_{W^{2,2}}  (= lhs by construction)
};
PerturbationBound perturbation_bound_check(const Field& u_radial, double c, int N);

}  // namespace ch

#endif
