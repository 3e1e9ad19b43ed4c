/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#ifndef CHPDE_PROFILES_TAIL_HPP
#define CHPDE_PROFILES_TAIL_HPP

#include <array>
#include <vector>

namespace ch {

// a0 = 3 * 2^{-8/3}, the decay constant of the exponential tail term.
double tail_a0();

// Asymptotic tail parameters of a similarity profile. B enters the
// extension (t > T) bundle only.
struct BundleParams {
  double A = 0;
  double C = 0;
  double B = 0;
  double p = 3.0;
};

// One closed-under-differentiation tail term:
//   coef * y^q * exp(-b y^{4/3}) * {1 | cos | sin}(omega y^{4/3}).
struct TailTerm {
  double coef = 0;
  double q = 0;
  double b = 0;
  double omega = 0;
  int trig = 0;  // 0: none, 1: cos, 2: sin
};

std::vector<TailTerm> differentiate(const std::vector<TailTerm>& terms);
double evaluate_terms(const std::vector<TailTerm>& terms, double y);

// Two-term blow-up bundle  f = A y^{-2/(p-1)} + C y^{-1/3} e^{-a0 y^{4/3}}
// and its first three exact derivatives. Requires y >= 5.
std::array<double, 4> tail_state(double y, const BundleParams& params);

// Term lists used to seed backward shooting. `mu` generalizes the drift
// coefficient (1/4 in the blow-up frame); these include the next-order
// algebraic corrections beyond the two-term contract to reduce the
// truncation error at finite y_max.
std::vector<TailTerm> blowup_tail_terms(double p, double mu, double A, double C);
std::vector<TailTerm> extension_tail_terms(double p, double A, double B, double C);

std::array<double, 4> eval_state(const std::vector<TailTerm>& f_terms, double y);

}  // namespace ch

#endif
