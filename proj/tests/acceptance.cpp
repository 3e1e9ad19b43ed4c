// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit status is the number of
// failed criteria.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/interp.hpp"
#include "core/norms.hpp"
#include "patterns/patterns.hpp"
#include "profiles/shoot.hpp"
#include "rescale/rescale.hpp"
#include "sim/simulate.hpp"
#include "spectral/hermite.hpp"
#include "spectral/kernel.hpp"
#include "steady/steady.hpp"

using namespace ch;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  int id;
  std::string name;
  std::function<bool(std::string&)> check;
};

#define REQUIRE_MSG(cond, msg)                 \
  do {                                         \
    if (!(cond)) {                             \
      detail = std::string("failed: ") + msg;  \
      return false;                            \
    }                                          \
  } while (0)

// 1. Hermite eigen-identity, exact arithmetic, |beta| <= 8, N in {1,2,3}.
bool c1(std::string& detail) {
  int count = 0;
  for (int N = 1; N <= 3; ++N) {
    for (const MultiIndex& beta : multi_indices_up_to(N, 8)) {
      const HermiteEigenfunction h = adjoint_eigenfunction(beta);
      REQUIRE_MSG(eigen_identity_exact(h), "identity broken at N=" + std::to_string(N));
      ++count;
    }
  }
  detail = std::to_string(count) + " multi-indices, zero remainder";
  return true;
}

// 2. Kernel normalization + biorthonormality Gram matrix.
bool c2(std::string& detail) {
  std::vector<double> y;
  for (double v = -60.0; v <= 60.0001; v += 0.02) y.push_back(v);
  const KernelSamples ks = kernel_F(y, 1, 0);
  double m0 = 0;
  for (std::size_t j = 0; j < y.size(); ++j) {
    const double w = (j == 0 || j + 1 == y.size()) ? 0.01 : 0.02;
    m0 += w * ks.deriv[0][j];
  }
  REQUIRE_MSG(std::abs(m0 - 1.0) <= 1e-8, "int F = " + std::to_string(m0));
  double worst = 0;
  for (int mu = 0; mu <= 4; ++mu)
    for (int nu = 0; nu <= 4; ++nu) {
      const double v = biorthonormality_check(mu, nu);
      worst = std::max(worst, std::abs(v - (mu == nu ? 1.0 : 0.0)));
    }
  REQUIRE_MSG(worst <= 1e-6, "gram deviation " + std::to_string(worst));
  char buf[96];
  std::snprintf(buf, sizeof buf, "int F - 1 = %.2e, gram deviation %.2e", m0 - 1.0, worst);
  detail = buf;
  return true;
}

SimConfig mass_cfg(const Grid& g, bool stable) {
  SimConfig cfg;
  cfg.grid = g;
  cfg.p = 3.0;
  cfg.gamma = 0.0;
  cfg.sign_stable = stable;
  cfg.dt0 = 1e-3;
  cfg.dt_min = 1e-12;
  cfg.t_end = 1.0;
  cfg.blowup_threshold = 100.0;
  cfg.snapshot_stride = 100;
  return cfg;
}

// 3. Mass conservation, periodic, gamma = 0, both signs, n = 256, t in [0,1].
bool c3(std::string& detail) {
  const Grid g = Grid::line(2.0 * kPi, 256, Grid::Bc::periodic);
  Field u0(g);
  for (int j = 0; j < g.n; ++j) u0[j] = 0.2 + 0.1 * std::sin(g.coord(j));
  double worst = 0;
  for (bool stable : {true, false}) {
    const SimResult res = run(mass_cfg(g, stable), u0);
    REQUIRE_MSG(res.status == SimStatus::completed, "run did not complete");
    const double m0 = res.series.front().mass;
    for (const auto& r : res.series)
      worst = std::max(worst, std::abs(r.mass - m0) / (1.0 + std::abs(m0)));
  }
  REQUIRE_MSG(worst <= 1e-10, "drift " + std::to_string(worst));
  char buf[64];
  std::snprintf(buf, sizeof buf, "relative drift %.2e", worst);
  detail = buf;
  return true;
}

// 4. Energy dissipation for the stable sign, per-step tolerance.
bool c4(std::string& detail) {
  const Grid g = Grid::line(2.0 * kPi, 128, Grid::Bc::periodic);
  SimConfig cfg = mass_cfg(g, true);
  cfg.dt0 = 5e-4;
  Field u0(g);
  for (int j = 0; j < g.n; ++j)
    u0[j] = std::sin(g.coord(j)) + 0.4 * std::cos(2.0 * g.coord(j));
  const SimResult res = run(cfg, u0);
  REQUIRE_MSG(res.status == SimStatus::completed, "run did not complete");
  double worst = -1e300;
  for (std::size_t i = 1; i < res.series.size(); ++i) {
    const double prev = res.series[i - 1].energy;
    const double rise = (res.series[i].energy - prev) / (1.0 + std::abs(prev));
    worst = std::max(worst, rise);
    REQUIRE_MSG(rise <= 1e-8, "energy rose by " + std::to_string(rise));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max per-step rise %.2e", worst);
  detail = buf;
  return true;
}

// 5. Global boundedness, subcritical desk scale, five random smooth data.
bool c5(std::string& detail) {
  const Grid g = Grid::line(2.0 * kPi, 128, Grid::Bc::periodic);
  std::mt19937_64 rng(20260810);
  std::uniform_real_distribution<double> dist(-1, 1);
  double overall = 0;
  for (int trial = 0; trial < 5; ++trial) {
    Field u0(g);
    double sup = 0;
    for (int k = 1; k <= 6; ++k) {
      const double a = dist(rng), ph = kPi * dist(rng);
      for (int j = 0; j < g.n; ++j) u0[j] += a * std::sin(k * g.coord(j) + ph);
    }
    for (int j = 0; j < g.n; ++j) sup = std::max(sup, std::abs(u0[j]));
    for (int j = 0; j < g.n; ++j) u0[j] /= sup;
    SimConfig cfg = mass_cfg(g, true);
    cfg.t_end = 10.0;
    cfg.dt0 = 5e-3;
    cfg.blowup_threshold = 10.0;  // M = 10 ||u0||_inf
    const SimResult res = run(cfg, u0);
    REQUIRE_MSG(res.status == SimStatus::completed,
                "trial " + std::to_string(trial) + " did not complete");
    for (const auto& r : res.series) {
      overall = std::max(overall, r.sup);
      REQUIRE_MSG(r.sup <= 2.0, "sup exceeded 2");
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max sup over 5 runs %.4f", overall);
  detail = buf;
  return true;
}

SimResult blowup_run() {
  const Grid g = Grid::line(8.0, 4096, Grid::Bc::periodic);
  SimConfig cfg;
  cfg.grid = g;
  cfg.p = 3.0;
  cfg.gamma = 0.0;
  cfg.sign_stable = false;
  cfg.dt0 = 1e-4;
  cfg.dt_min = 1e-15;
  cfg.t_end = 50.0;
  cfg.blowup_threshold = 95.0;
  cfg.snapshot_stride = 2;
  Field u0(g);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.centered_coord(j);
    u0[j] = 2.0 * std::exp(-x * x);
  }
  return run(cfg, u0);
}

// 6. Unstable blow-up with rate exponent within 20% of 1/4.
bool c6(std::string& detail) {
  const SimResult res = blowup_run();
  REQUIRE_MSG(res.status == SimStatus::blowup, "no blow-up");
  REQUIRE_MSG(res.fit_reliable, "rate fit unreliable");
  REQUIRE_MSG(std::abs(res.fit_exponent - 0.25) <= 0.2 * 0.25,
              "exponent " + std::to_string(res.fit_exponent));
  char buf[64];
  std::snprintf(buf, sizeof buf, "fit exponent %.4f (target 0.25 +- 20%%)", res.fit_exponent);
  detail = buf;
  return true;
}

// 7. PDE <-> ODE profile agreement at p = 3 + A = 0 at the Fujita exponent.
bool c7(std::string& detail) {
  const SimResult res = blowup_run();
  REQUIRE_MSG(res.status == SimStatus::blowup, "no blow-up");
  const Grid yg = Grid::line(22.0, 441, Grid::Bc::periodic);
  const ExtractedProfile ep = extract_profile(res, 3.0, yg);
  const Profile pr = solve_profile(3.0, 1);
  double amp = 0;
  for (double v : pr.f) amp = std::max(amp, std::abs(v));
  REQUIRE_MSG(std::abs(pr.params.A) <= 1e-4 * amp,
              "|A| = " + std::to_string(std::abs(pr.params.A)));
  const CubicSpline ode(pr.y, pr.f);
  double pde0 = 0;
  for (int j = 0; j < yg.n; ++j)
    if (yg.centered_coord(j) == 0.0) pde0 = ep.f[j];
  REQUIRE_MSG(pde0 > 0, "empty extraction at y = 0");
  double worst = 0;
  for (int j = 0; j < yg.n; ++j) {
    if (!ep.valid[j]) continue;
    const double y = yg.centered_coord(j);
    if (std::abs(y) > 5.0) continue;
    const double fode = ode(std::abs(y)) / pr.f.front();
    worst = std::max(worst, std::abs(fode - ep.f[j] / pde0));
  }
  REQUIRE_MSG(worst <= 5e-2, "normalized sup-difference " + std::to_string(worst));
  char buf[96];
  std::snprintf(buf, sizeof buf, "normalized sup-diff %.4f on |y|<=5, |A| = %.1e", worst,
                std::abs(pr.params.A));
  detail = buf;
  return true;
}

// 8. Zero mass, negative A, and a sign change below the Fujita exponent.
bool c8(std::string& detail) {
  const Profile pr = solve_profile(2.0, 1);
  REQUIRE_MSG(pr.params.A < 0.0, "A = " + std::to_string(pr.params.A));
  REQUIRE_MSG(sign_changes(pr.f) >= 1, "no interior sign change");
  const ProfileMass pm = profile_mass(pr);
  REQUIRE_MSG(!pm.nonintegrable_tail, "tail flagged non-integrable");
  double absint = 0;
  for (std::size_t i = 0; i + 1 < pr.y.size(); ++i)
    absint += (pr.y[i + 1] - pr.y[i]) * (std::abs(pr.f[i]) + std::abs(pr.f[i + 1]));
  REQUIRE_MSG(std::abs(pm.mass) <= 1e-3 * absint,
              "|mass| = " + std::to_string(std::abs(pm.mass)));
  char buf[96];
  std::snprintf(buf, sizeof buf, "A = %.4f, %d sign change(s), |mass|/int|f| = %.1e",
                pr.params.A, sign_changes(pr.f), std::abs(pm.mass) / absint);
  detail = buf;
  return true;
}

// 9. Census exactness and divergence (exact integer matches).
bool c9(std::string& detail) {
  REQUIRE_MSG(category_census(1.0, kPi, 4).count == 1, "count(1) != 1");
  REQUIRE_MSG(category_census(20.0, kPi, 4).count == 2, "count(20) != 2");
  std::vector<int> counts;
  for (double gamma : {1.0, 10.0, 100.0, 1000.0, 10000.0})
    counts.push_back(category_census(gamma, kPi, 4).count);
  for (std::size_t i = 1; i < counts.size(); ++i)
    REQUIRE_MSG(counts[i] >= counts[i - 1], "count decreased along the gamma sweep");
  REQUIRE_MSG(counts.back() > counts.front(), "no growth across the sweep");
  std::string seq;
  for (int c : counts) seq += std::to_string(c) + " ";
  detail = "count(1)=1, count(20)=2, sweep counts " + seq + "(non-decreasing, growing)";
  return true;
}

// 10. Steady-state identities + the no-positive-solution branch.
bool c10(std::string& detail) {
  const Grid g = Grid::line(kPi, 128, Grid::Bc::navier);
  auto seed_mode = [&](int k) {
    Field f(g);
    for (int j = 0; j < g.n; ++j) f[j] = std::sin(k * kPi * g.coord(j) / g.length);
    return f;
  };
  double worst_crit = 0, worst_fib = 0, worst_en = 0;
  for (const auto& [gamma, k] : std::vector<std::pair<double, int>>{{0.0, 1}, {13.0, 2}, {0.5, 1}}) {
    EllipticConfig cfg;
    cfg.L = kPi;
    cfg.p = 3.0;
    cfg.gamma = gamma;
    cfg.modes = 64;
    const SteadyState st = solve_steady(cfg, seed_mode(k));
    const double q = quadratic_part(st.u, gamma);
    const double pw = integrate_abs_pow(st.u, 4.0);
    worst_crit = std::max(worst_crit, std::abs(q - pw) / (1.0 + std::abs(q)));
    REQUIRE_MSG(std::abs(q - pw) <= 1e-8 * (1.0 + std::abs(q)), "critical-point identity");
    // phi_v'(1) = Q - int|u|^{p+1} must vanish; equivalently r(u) = 1
    const double rv = r_of_v(st.u, gamma, cfg.p);
    const double phi_prime_1 = q - pw;
    worst_fib = std::max(worst_fib, std::abs(phi_prime_1) / (1.0 + std::abs(q)));
    REQUIRE_MSG(std::abs(phi_prime_1) <= 1e-8 * (1.0 + std::abs(q)), "phi'(1) != 0");
    REQUIRE_MSG(std::abs(rv - 1.0) <= 1e-8, "fibering normalization r(u) != 1");
    const double en = std::abs(st.F_value - 0.25 * pw) / (1.0 + std::abs(st.F_value));
    worst_en = std::max(worst_en, en);
    REQUIRE_MSG(en <= 1e-8, "energy identity");
  }
  // gamma above the census threshold: positivity-seeded solve yields no
  // positive solution
  bool positive_found = false;
  try {
    EllipticConfig cfg;
    cfg.L = kPi;
    cfg.p = 3.0;
    cfg.gamma = 10.0;
    cfg.modes = 64;
    const SteadyState st = solve_steady(cfg, seed_mode(1));
    positive_found = (st.sign_changes == 0);
  } catch (const NumericError&) {
  }
  REQUIRE_MSG(!positive_found, "positive solution found above the threshold");
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "identities: crit %.1e, fibering %.1e, energy %.1e; no positive state at "
                "gamma = 10",
                worst_crit, worst_fib, worst_en);
  detail = buf;
  return true;
}

// 11. Hardy / Joseph-Lundgren saturation and the double root.
bool c11(std::string& detail) {
  double worst = 0;
  for (int N = 11; N <= 30; ++N) {
    const ExponentReport r = exponent_report(N, 0.0);
    REQUIRE_MSG(r.p_JL_defined, "p_JL undefined at N = " + std::to_string(N));
    const HardyCheck h = hardy_criterion(r.p_JL, N);
    worst = std::max(worst, std::abs(h.c - h.c_H) / h.c_H);
    REQUIRE_MSG(std::abs(h.c - h.c_H) <= 1e-9 * h.c_H, "saturation at N = " + std::to_string(N));
  }
  for (int N : {11, 12, 20}) {
    const double cH = 0.25 * (N - 2.0) * (N - 2.0);
    const CharacteristicRoots r = characteristic_roots(cH, N);
    REQUIRE_MSG(r.double_root, "no double root at c_H");
    REQUIRE_MSG(std::abs(r.roots[2] + 0.5 * (N - 2.0)) <= 1e-12, "double root value");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max |pD - c_H|/c_H = %.1e over N = 11..30", worst);
  detail = buf;
  return true;
}

// 12. Loewner-Nirenberg exact solution residual (fourth-order stencils).
bool c12(std::string& detail) {
  double worst = 0;
  for (int N : {3, 4, 5}) {
    const double pS = static_cast<double>(N + 2) / (N - 2);
    for (double d : {0.5, 1.0, 2.0}) {
      auto W = [&](double x) { return loewner_nirenberg(x, d, N); };
      const double scale = std::pow(d, pS);
      for (double r = 0.2; r <= 4.0; r += 0.2) {
        const double h = 5e-3;
        const double d2 = (-W(r + 2 * h) + 16.0 * W(r + h) - 30.0 * W(r) +
                           16.0 * W(r - h) - W(r - 2 * h)) /
                          (12.0 * h * h);
        const double d1 =
            (-W(r + 2 * h) + 8.0 * W(r + h) - 8.0 * W(r - h) + W(r - 2 * h)) / (12.0 * h);
        const double res = std::abs(d2 + (N - 1) * d1 / r + std::pow(W(r), pS)) / scale;
        worst = std::max(worst, res);
        REQUIRE_MSG(res <= 1e-8, "residual " + std::to_string(res));
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max relative radial residual %.1e (tolerance 1e-8)", worst);
  detail = buf;
  return true;
}

// 13. Exponent catalog spot values.
bool c13(std::string& detail) {
  const ExponentReport r1 = exponent_report(1, 0.0);
  REQUIRE_MSG(r1.p0 == 3.0, "p0(1)");
  REQUIRE_MSG(!r1.p_star_finite, "p*(1) must be infinite");
  const ExponentReport r3 = exponent_report(3, 0.0);
  REQUIRE_MSG(r3.p_sobolev == 5.0, "p_S(3)");
  REQUIRE_MSG(r3.p_N == 3.0, "p_N(3)");
  const ExponentReport r3a = exponent_report(3, 2.0);
  REQUIRE_MSG(r3a.p_star_alpha == 9.0, "p*(alpha=2, N=3)");
  const ExponentReport r12 = exponent_report(12, 0.0);
  REQUIRE_MSG(std::abs(r12.p_JL - 3.9266) <= 1e-3, "p_JL(12)");
  const double formula = 1.0 + 4.0 / (8.0 - 2.0 * std::sqrt(11.0));
  REQUIRE_MSG(std::abs(r12.p_JL - formula) <= 1e-12, "p_JL(12) formula");
  char buf[64];
  std::snprintf(buf, sizeof buf, "p0(1)=3, p_S(3)=5, p_N(3)=3, p*(2;3)=9, p_JL(12)=%.4f",
                r12.p_JL);
  detail = buf;
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Hermite eigen-identity (exact arithmetic)", c1},
      {2, "kernel normalization and biorthonormality", c2},
      {3, "mass conservation (periodic, gamma = 0)", c3},
      {4, "energy dissipation (stable sign)", c4},
      {5, "global boundedness at subcritical p", c5},
      {6, "unstable blow-up with correct rate", c6},
      {7, "PDE/ODE profile agreement at p = 3", c7},
      {8, "zero mass and sign change below Fujita", c8},
      {9, "census exactness and divergence", c9},
      {10, "steady-state identities and negative branch", c10},
      {11, "Hardy/JL saturation and double root", c11},
      {12, "Loewner-Nirenberg residual", c12},
      {13, "exponent catalog spot values", c13},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2d %-4s %s  [%s]\n", c.id, ok ? "PASS" : "FAIL", c.name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
