/*
 * chpde: numerics for fourth-order Cahn--Hilliard-type equations.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 */
#include "core/transforms.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>

#include "core/errors.hpp"

namespace ch {

namespace {

// FFTW planning is not thread-safe and plans are reused, so a single lock
// guards both the cache and execution on the cached buffers.
std::mutex g_fftw_mutex;

struct PlanEntry {
  fftw_plan plan = nullptr;
  double* buf = nullptr;
  int n = 0;
};

struct PlanCache {
  std::map<int, PlanEntry> entries;
  ~PlanCache() {
    for (auto& [n, e] : entries) {
      fftw_destroy_plan(e.plan);
      fftw_free(e.buf);
    }
  }
};

PlanEntry& cached_plan(PlanCache& cache, int n, fftw_r2r_kind kind) {
  auto it = cache.entries.find(n);
  if (it != cache.entries.end()) return it->second;
  PlanEntry e;
  e.n = n;
  e.buf = fftw_alloc_real(n);
  e.plan = fftw_plan_r2r_1d(n, e.buf, e.buf, kind, FFTW_ESTIMATE);
  return cache.entries.emplace(n, e).first->second;
}

PlanCache& dst_cache() {
  static PlanCache c;
  return c;
}
PlanCache& r2hc_cache() {
  static PlanCache c;
  return c;
}
PlanCache& hc2r_cache() {
  static PlanCache c;
  return c;
}

void require_navier(const Grid& g, const char* op) {
  if (g.geometry != Grid::Geometry::line || g.bc != Grid::Bc::navier)
    throw ContractViolation(std::string(op) + ": requires a navier line grid");
}

void require_periodic(const Grid& g, const char* op) {
  if (g.geometry != Grid::Geometry::line || g.bc != Grid::Bc::periodic)
    throw ContractViolation(std::string(op) + ": requires a periodic line grid");
}

std::vector<double> run_plan(PlanCache& cache, fftw_r2r_kind kind,
                             const std::vector<double>& in) {
  const int n = static_cast<int>(in.size());
  std::lock_guard<std::mutex> lock(g_fftw_mutex);
  PlanEntry& e = cached_plan(cache, n, kind);
  std::memcpy(e.buf, in.data(), n * sizeof(double));
  fftw_execute(e.plan);
  return std::vector<double>(e.buf, e.buf + n);
}

}  // namespace

std::vector<double> sine_forward(const Field& f) {
  require_navier(f.grid, "sine_forward");
  f.ensure_finite("sine_forward");
  // RODFT00: X_k = 2 sum_j f_j sin(pi (j+1)(k+1)/(n+1)); orthogonality gives
  // the expansion coefficient as X_k / (n+1).
  std::vector<double> out = run_plan(dst_cache(), FFTW_RODFT00, f.values);
  const double s = 1.0 / (f.grid.n + 1);
  for (double& v : out) v *= s;
  return out;
}

Field sine_inverse(const Grid& g, const std::vector<double>& coeffs) {
  require_navier(g, "sine_inverse");
  if (static_cast<int>(coeffs.size()) != g.n)
    throw ContractViolation("sine_inverse: coefficient count mismatch");
  std::vector<double> out = run_plan(dst_cache(), FFTW_RODFT00, coeffs);
  for (double& v : out) v *= 0.5;
  return Field(g, std::move(out));
}

std::vector<double> periodic_forward(const Field& f) {
  require_periodic(f.grid, "periodic_forward");
  f.ensure_finite("periodic_forward");
  std::vector<double> out = run_plan(r2hc_cache(), FFTW_R2HC, f.values);
  const double s = 1.0 / f.grid.n;
  for (double& v : out) v *= s;
  return out;
}

Field periodic_inverse(const Grid& g, const std::vector<double>& halfcomplex) {
  require_periodic(g, "periodic_inverse");
  if (static_cast<int>(halfcomplex.size()) != g.n)
    throw ContractViolation("periodic_inverse: coefficient count mismatch");
  return Field(g, run_plan(hc2r_cache(), FFTW_HC2R, halfcomplex));
}

std::vector<double> wavenumbers(const Grid& g) {
  std::vector<double> k(g.n);
  const double pi = 3.14159265358979323846;
  if (g.geometry == Grid::Geometry::line && g.bc == Grid::Bc::navier) {
    for (int i = 0; i < g.n; ++i) k[i] = (i + 1) * pi / g.length;
  } else if (g.geometry == Grid::Geometry::line) {
    for (int i = 0; i < g.n; ++i) {
      const int mode = std::min(i, g.n - i);
      k[i] = 2.0 * pi * mode / g.length;
    }
  } else {
    throw ContractViolation("wavenumbers: radial grids have no transform basis");
  }
  return k;
}

double parseval_weight(const Grid& g) {
  if (g.geometry == Grid::Geometry::line && g.bc == Grid::Bc::navier) return 0.5 * g.length;
  throw ContractViolation("parseval_weight: defined for navier line grids only");
}

double spectral_l2sq(const Grid& g, const std::vector<double>& coeffs) {
  if (g.geometry == Grid::Geometry::line && g.bc == Grid::Bc::navier) {
    double s = 0;
    for (double c : coeffs) s += c * c;
    return 0.5 * g.length * s;
  }
  if (g.geometry == Grid::Geometry::line && g.bc == Grid::Bc::periodic) {
    // Discrete Parseval in halfcomplex layout: DC and Nyquist slots carry
    // weight 1, every other slot (one of Re/Im per mode) weight 2.
    const int n = g.n;
    const int nyq = (n % 2 == 0) ? n / 2 : -1;
    double s = coeffs[0] * coeffs[0];
    for (int i = 1; i < n; ++i) s += ((i == nyq) ? 1.0 : 2.0) * coeffs[i] * coeffs[i];
    return g.length * s;
  }
  throw ContractViolation("spectral_l2sq: spectral grids only");
}

}  // namespace ch
