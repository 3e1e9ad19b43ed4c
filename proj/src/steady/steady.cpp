/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "steady/steady.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/norms.hpp"
#include "core/transforms.hpp"

namespace ch {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void EllipticConfig::validate() const {
  if (!(L > 0)) throw ContractViolation("steady: L > 0 required");
  if (!(p > 1)) throw ContractViolation("steady: p > 1 required");
  if (modes < 4) throw ContractViolation("steady: modes >= 4 required");
}

std::vector<double> biharmonic_eigs(double L, int count) {
  if (!(L > 0) || count < 1) throw ContractViolation("biharmonic_eigs: L > 0, count >= 1");
  std::vector<double> lam(count);
  for (int k = 1; k <= count; ++k) {
    const double mu = k * kPi / L;
    lam[k - 1] = mu * mu * mu * mu;
  }
  return lam;
}

double critical_gamma(double p, double lambda1) {
  if (!(p > 1) || !(lambda1 > 0)) throw ContractViolation("critical_gamma: p > 1, lambda1 > 0");
  return lambda1 * p / (p + 1.0);
}

namespace {

void require_navier(const Field& u, const char* op) {
  if (u.grid.geometry != Grid::Geometry::line || u.grid.bc != Grid::Bc::navier)
    throw ContractViolation(std::string(op) + ": navier line grid required");
}

}  // namespace

double quadratic_part(const Field& v, double gamma) {
  require_navier(v, "quadratic_part");
  const std::vector<double> c = sine_forward(v);
  const std::vector<double> kap = wavenumbers(v.grid);
  const double w = parseval_weight(v.grid);
  double q = 0;
  for (int i = 0; i < v.size(); ++i) {
    const double k2 = kap[i] * kap[i];
    q += (k2 - gamma / k2) * c[i] * c[i];
  }
  return q * w;
}

double functional_F(const Field& u, double gamma, double p) {
  require_navier(u, "functional_F");
  return 0.5 * quadratic_part(u, gamma) - integrate_abs_pow(u, p + 1.0) / (p + 1.0);
}

Field frechet_residual(const Field& u, double gamma, double p) {
  require_navier(u, "frechet_residual");
  const Grid& g = u.grid;
  std::vector<double> c = sine_forward(u);
  Field nl(g);
  for (int j = 0; j < g.n; ++j) nl[j] = std::pow(std::abs(u[j]), p - 1.0) * u[j];
  const std::vector<double> nc = sine_forward(nl);
  const std::vector<double> kap = wavenumbers(g);
  for (int i = 0; i < g.n; ++i) {
    const double k2 = kap[i] * kap[i];
    c[i] = (k2 - gamma / k2) * c[i] - nc[i];
  }
  return sine_inverse(g, c);
}

std::vector<double> fibering_map(const Field& v, double gamma, double p,
                                 const std::vector<double>& r) {
  const double q = quadratic_part(v, gamma);
  const double pw = integrate_abs_pow(v, p + 1.0);
  std::vector<double> phi(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    phi[i] = 0.5 * r[i] * r[i] * q - std::pow(std::abs(r[i]), p + 1.0) / (p + 1.0) * pw;
  return phi;
}

bool has_turning_point(const Field& v, double gamma, double p) {
  const double pw = integrate_abs_pow(v, p + 1.0);
  return pw > 0 && quadratic_part(v, gamma) > 0;
}

double r_of_v(const Field& v, double gamma, double p) {
  const double pw = integrate_abs_pow(v, p + 1.0);
  if (!(pw > 0)) throw ContractViolation("r_of_v: int |v|^{p+1} must be positive");
  const double q = quadratic_part(v, gamma);
  if (!(q > 0)) throw NoTurningPoint("r_of_v: quadratic part non-positive");
  return std::pow(q / pw, 1.0 / (p - 1.0));
}

double reduced_functional_G(const Field& v, double gamma, double p) {
  const double pw = integrate_abs_pow(v, p + 1.0);
  if (!(pw > 0)) throw ContractViolation("reduced_functional_G: int |v|^{p+1} must be positive");
  const double q = quadratic_part(v, gamma);
  if (!(q > 0)) throw ContractViolation("reduced_functional_G: quadratic part must be positive");
  return (0.5 - 1.0 / (p + 1.0)) * std::pow(q, (p + 1.0) / (p - 1.0)) /
         std::pow(pw, 2.0 / (p - 1.0));
}

namespace {

// Dense LU with partial pivoting (systems stay small: modes <= few hundred).
void lu_solve(std::vector<double>& a, std::vector<double>& b, int n) {
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int col = 0; col < n; ++col) {
    int pr = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pr * n + col])) pr = r;
    if (pr != col) {
      for (int j = 0; j < n; ++j) std::swap(a[col * n + j], a[pr * n + j]);
      std::swap(b[col], b[pr]);
    }
    const double d = a[col * n + col];
    if (std::abs(d) < 1e-300) throw NumericError("newton: singular jacobian");
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / d;
      if (f == 0) continue;
      for (int j = col; j < n; ++j) a[r * n + j] -= f * a[col * n + j];
      b[r] -= f * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int j = r + 1; j < n; ++j) s -= a[r * n + j] * b[j];
    b[r] = s / a[r * n + r];
  }
}

int count_sign_changes(const Field& u) {
  double amp = 0;
  for (double v : u.values) amp = std::max(amp, std::abs(v));
  if (amp == 0) return 0;
  int count = 0, last = 0;
  for (double v : u.values) {
    if (std::abs(v) < 1e-6 * amp) continue;
    const int s = (v > 0) ? 1 : -1;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

SteadyState solve_steady(const EllipticConfig& cfg, const Field& seed) {
  cfg.validate();
  require_navier(seed, "solve_steady");
  const Grid& g = seed.grid;
  if (g.n < 2 * cfg.modes)
    throw ContractViolation("solve_steady: modes must be <= grid resolution / 2");
  if (std::abs(g.length - cfg.L) > 1e-12 * cfg.L)
    throw ContractViolation("solve_steady: seed grid length != config L");
  seed.ensure_finite("solve_steady");
  double seed_amp = 0;
  for (double v : seed.values) seed_amp = std::max(seed_amp, std::abs(v));
  if (seed_amp == 0) throw ContractViolation("solve_steady: seed must be nonzero");

  const int m = cfg.modes;
  const std::vector<double> kap = wavenumbers(g);
  const double w = parseval_weight(g);

  // residual in the truncated sine-Galerkin basis
  auto residual = [&](const std::vector<double>& coef) {
    std::vector<double> full(g.n, 0.0);
    std::copy(coef.begin(), coef.end(), full.begin());
    const Field u = sine_inverse(g, full);
    Field nl(g);
    for (int j = 0; j < g.n; ++j) nl[j] = std::pow(std::abs(u[j]), cfg.p - 1.0) * u[j];
    const std::vector<double> nc = sine_forward(nl);
    std::vector<double> r(m);
    for (int i = 0; i < m; ++i) {
      const double k2 = kap[i] * kap[i];
      r[i] = (k2 - cfg.gamma / k2) * coef[i] - nc[i];
    }
    return r;
  };
  auto res_norm = [&](const std::vector<double>& r) {
    double s = 0;
    for (double v : r) s += v * v;
    return std::sqrt(s * w);
  };

  const std::vector<double> seed_coeffs = sine_forward(seed);
  std::vector<double> x(seed_coeffs.begin(), seed_coeffs.begin() + m);
  std::vector<double> r = residual(x);
  double rn = res_norm(r);

  const int max_iter = 80;
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    if (rn <= 1e-11) {
      converged = true;
      break;
    }
    // Jacobian: diagonal linear part + transform-conjugated multiplication
    // by p |u|^{p-1}, assembled column by column.
    std::vector<double> full(g.n, 0.0);
    std::copy(x.begin(), x.end(), full.begin());
    const Field u = sine_inverse(g, full);
    Field dnl(g);
    for (int j = 0; j < g.n; ++j)
      dnl[j] = cfg.p * std::pow(std::abs(u[j]), cfg.p - 1.0);

    std::vector<double> jac(m * m, 0.0);
    for (int col = 0; col < m; ++col) {
      std::vector<double> e(g.n, 0.0);
      e[col] = 1.0;
      Field basis = sine_inverse(g, e);
      for (int j = 0; j < g.n; ++j) basis[j] *= dnl[j];
      const std::vector<double> colc = sine_forward(basis);
      for (int row = 0; row < m; ++row) jac[row * m + col] = -colc[row];
    }
    for (int i = 0; i < m; ++i) {
      const double k2 = kap[i] * kap[i];
      jac[i * m + i] += k2 - cfg.gamma / k2;
    }

    std::vector<double> step = r;
    lu_solve(jac, step, m);

    double lam = 1.0;
    bool improved = false;
    for (int bt = 0; bt < 12; ++bt) {
      std::vector<double> xt(m);
      for (int i = 0; i < m; ++i) xt[i] = x[i] - lam * step[i];
      std::vector<double> rt = residual(xt);
      const double rtn = res_norm(rt);
      if (rtn < rn) {
        x = std::move(xt);
        r = std::move(rt);
        rn = rtn;
        improved = true;
        break;
      }
      lam *= 0.5;
    }
    if (!improved) throw NotConverged("solve_steady: newton stagnated at residual " +
                                      std::to_string(rn));
  }
  if (rn > 1e-10)
    throw NotConverged("solve_steady: residual " + std::to_string(rn) + " after iterations");

  std::vector<double> full(g.n, 0.0);
  std::copy(x.begin(), x.end(), full.begin());
  SteadyState st;
  st.u = sine_inverse(g, full);
  double amp = 0;
  for (double v : st.u.values) amp = std::max(amp, std::abs(v));
  if (amp < 1e-8 * seed_amp || amp < 1e-12)
    throw TrivialLimit("solve_steady: converged to the zero state");
  st.gamma = cfg.gamma;
  st.p = cfg.p;
  st.residual_norm = norms(frechet_residual(st.u, cfg.gamma, cfg.p)).l2;
  st.F_value = functional_F(st.u, cfg.gamma, cfg.p);
  st.critical_value = reduced_functional_G(st.u, cfg.gamma, cfg.p);
  st.sign_changes = count_sign_changes(st.u);
  const double q = quadratic_part(st.u, cfg.gamma);
  const double gcrit = critical_gamma(cfg.p, biharmonic_eigs(cfg.L, 1)[0]);
  if (q <= 0) st.fibering_class = FiberingClass::none_positive;
  else st.fibering_class = (cfg.gamma <= gcrit) ? FiberingClass::unique_max : FiberingClass::multi;
  return st;
}

Census category_census(double gamma, double L, int max_k) {
  if (!(L > 0) || max_k < 1) throw ContractViolation("census: L > 0, max_k >= 1");
  Census c;
  // nu_k = mu_k - gamma/mu_k is eventually increasing; count exactly by
  // walking until it clears 1 for good (mu_k^2 - mu_k > gamma).
  for (int k = 1;; ++k) {
    const double mu = (k * kPi / L) * (k * kPi / L);
    const double nu = mu - gamma / mu;
    if (k <= max_k) c.nu.push_back(nu);
    if (nu < 1.0) ++c.count;
    if (k >= max_k && mu * mu - mu > gamma) break;
    if (k > 100000000) throw NumericError("census: runaway loop");
  }
  std::sort(c.nu.begin(), c.nu.end());
  return c;
}

}  // namespace ch
