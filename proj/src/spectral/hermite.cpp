/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "spectral/hermite.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace ch {

MultiIndex::MultiIndex(std::vector<int> c) : comps(std::move(c)) {
  if (comps.empty() || comps.size() > 3)
    throw ContractViolation("multi-index: dimension must be 1..3");
  for (int v : comps)
    if (v < 0) throw ContractViolation("multi-index: negative component");
}

int MultiIndex::order() const {
  int s = 0;
  for (int v : comps) s += v;
  return s;
}

bool MultiIndex::all_even() const {
  for (int v : comps)
    if (v % 2) return false;
  return true;
}

std::int64_t MultiIndex::factorial() const {
  std::int64_t f = 1;
  for (int v : comps) f *= factorial_i64(v);
  return f;
}

double HermiteEigenfunction::eval(const std::array<double, 3>& y) const {
  return poly.eval(y) / std::sqrt(static_cast<double>(beta_factorial));
}

HermiteEigenfunction adjoint_eigenfunction(const MultiIndex& beta) {
  const int N = beta.dim();
  Poly::Key e = {0, 0, 0};
  for (int i = 0; i < N; ++i) e[i] = beta.comps[i];

  Poly p = Poly::monomial(e, Rational(1));
  Poly term = p;
  const int jmax = beta.order() / 4;
  std::int64_t jfact = 1;
  for (int j = 1; j <= jmax; ++j) {
    term = term.laplacian(N).laplacian(N);  // Delta^{2j} y^beta, built incrementally
    if (term.is_zero()) break;
    jfact *= j;
    p = p + term.scaled(Rational(1, jfact));
  }

  HermiteEigenfunction h{beta, Rational(-beta.order(), 4), p, beta.factorial()};
  return h;
}

Poly apply_adjoint_operator(const Poly& p, int nvars) {
  const Poly d4 = p.laplacian(nvars).laplacian(nvars);
  const Poly drift = p.euler_degree().scaled(Rational(1, 4));
  return Poly::zero() - d4 - drift;
}

bool eigen_identity_exact(const HermiteEigenfunction& h) {
  const Poly lhs = apply_adjoint_operator(h.poly, h.beta.dim());
  const Poly rhs = h.poly.scaled(h.eigenvalue);
  return lhs == rhs;
}

std::vector<MultiIndex> multi_indices_up_to(int N, int max_order) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(N, 0);
  // lexicographic enumeration with order cap
  while (true) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum <= max_order) out.push_back(MultiIndex(cur));
    int i = N - 1;
    while (i >= 0) {
      ++cur[i];
      int s = 0;
      for (int v : cur) s += v;
      if (s <= max_order) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace ch
