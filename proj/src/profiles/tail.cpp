/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "profiles/tail.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ch {

double tail_a0() { return 3.0 * std::pow(2.0, -8.0 / 3.0); }

std::vector<TailTerm> differentiate(const std::vector<TailTerm>& terms) {
  std::vector<TailTerm> out;
  out.reserve(terms.size() * 3);
  for (const TailTerm& t : terms) {
    if (t.coef == 0) continue;
    // power factor
    if (t.q != 0) out.push_back({t.coef * t.q, t.q - 1.0, t.b, t.omega, t.trig});
    // exponential factor
    if (t.b != 0)
      out.push_back({-t.coef * t.b * 4.0 / 3.0, t.q + 1.0 / 3.0, t.b, t.omega, t.trig});
    // trig factor
    if (t.trig == 1)
      out.push_back({-t.coef * t.omega * 4.0 / 3.0, t.q + 1.0 / 3.0, t.b, t.omega, 2});
    else if (t.trig == 2)
      out.push_back({t.coef * t.omega * 4.0 / 3.0, t.q + 1.0 / 3.0, t.b, t.omega, 1});
  }
  return out;
}

double evaluate_terms(const std::vector<TailTerm>& terms, double y) {
  double s = 0;
  const double y43 = std::pow(y, 4.0 / 3.0);
  for (const TailTerm& t : terms) {
    double v = t.coef * std::pow(y, t.q) * std::exp(-t.b * y43);
    if (t.trig == 1) v *= std::cos(t.omega * y43);
    else if (t.trig == 2) v *= std::sin(t.omega * y43);
    s += v;
  }
  return s;
}

std::array<double, 4> eval_state(const std::vector<TailTerm>& f_terms, double y) {
  std::array<double, 4> st;
  std::vector<TailTerm> cur = f_terms;
  for (int d = 0; d < 4; ++d) {
    st[d] = evaluate_terms(cur, y);
    if (d < 3) cur = differentiate(cur);
  }
  return st;
}

std::array<double, 4> tail_state(double y, const BundleParams& params) {
  if (!(params.p > 1)) throw ContractViolation("tail_state: p > 1 required");
  if (!(y >= 5.0)) throw ContractViolation("tail_state: asymptotic regime needs y >= 5");
  const double m = 2.0 / (params.p - 1.0);
  std::vector<TailTerm> terms = {
      {params.A, -m, 0.0, 0.0, 0},
      {params.C, -1.0 / 3.0, tail_a0(), 0.0, 0},
  };
  return eval_state(terms, y);
}

std::vector<TailTerm> blowup_tail_terms(double p, double mu, double A, double C) {
  if (!(p > 1)) throw ContractViolation("blowup_tail_terms: p > 1 required");
  if (!(mu > 0)) throw ContractViolation("blowup_tail_terms: mu > 0 required");
  const double gamma = 1.0 / (2.0 * (p - 1.0));
  const double m = gamma / mu;  // algebraic decay exponent
  const double a0 = 0.75 * std::cbrt(mu);
  // Prefactor power of the exponential branch: -1/3 in the blow-up frame
  // (mu = 1/4); the WKB value (gamma - 2 mu)/(3 mu) otherwise.
  const double sigma = (mu == 0.25) ? -1.0 / 3.0 : (gamma - 2.0 * mu) / (3.0 * mu);

  std::vector<TailTerm> terms;
  terms.push_back({A, -m, 0.0, 0.0, 0});
  // Next-order algebraic corrections: keeping them shrinks the tail model
  // error from O(y^{-4}) to O(y^{-8}) relative.
  const double a_lin = m * (m + 1.0) * (m + 2.0) * (m + 3.0) * A / (4.0 * mu);
  terms.push_back({a_lin, -(m + 4.0), 0.0, 0.0, 0});
  if (A != 0) {
    const double s_nl = m * p + 2.0;
    const double denom = mu * s_nl - gamma;
    const double a_nl = m * p * (m * p + 1.0) * std::pow(std::abs(A), p - 1.0) * A / denom;
    terms.push_back({a_nl, -s_nl, 0.0, 0.0, 0});
  }
  terms.push_back({C, sigma, a0, 0.0, 0});
  return terms;
}

std::vector<TailTerm> extension_tail_terms(double p, double A, double B, double C) {
  if (!(p > 1)) throw ContractViolation("extension_tail_terms: p > 1 required");
  const double m = 2.0 / (p - 1.0);
  const double a0 = tail_a0();
  const double om = 0.5 * std::sqrt(3.0) * a0;
  std::vector<TailTerm> terms;
  terms.push_back({A, -m, 0.0, 0.0, 0});
  // algebraic corrections (drift sign flips the coefficient vs the blow-up frame)
  const double a_lin = -m * (m + 1.0) * (m + 2.0) * (m + 3.0) * A;
  terms.push_back({a_lin, -(m + 4.0), 0.0, 0.0, 0});
  if (A != 0) {
    const double a_nl = -m * p * (m * p + 1.0) * std::pow(std::abs(A), p - 1.0) * A;
    terms.push_back({a_nl, -(m * p + 2.0), 0.0, 0.0, 0});
  }
  terms.push_back({B, -1.0 / 3.0, 0.5 * a0, om, 1});
  terms.push_back({C, -1.0 / 3.0, 0.5 * a0, om, 2});
  return terms;
}

}  // namespace ch
