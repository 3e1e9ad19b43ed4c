#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/norms.hpp"
#include "sim/simulate.hpp"

using namespace ch;

namespace {
constexpr double kPi = 3.14159265358979323846;

SimConfig base_config(const Grid& g) {
  SimConfig cfg;
  cfg.grid = g;
  cfg.p = 3.0;
  cfg.gamma = 0.0;
  cfg.sign_stable = true;
  cfg.dt0 = 1e-3;
  cfg.dt_min = 1e-12;
  cfg.t_end = 1.0;
  cfg.blowup_threshold = 1e3;
  cfg.snapshot_stride = 50;
  return cfg;
}
}  // namespace

TEST_CASE("imex step: linear decay multiplier is exact") {
  const Grid g = Grid::line(kPi, 64, Grid::Bc::navier);
  SimConfig cfg = base_config(g);
  cfg.nonlinear = false;
  Field u(g);
  for (int j = 0; j < g.n; ++j) u[j] = std::sin(g.coord(j));
  const double dt = 0.1;
  const Field v = step_imex(u, cfg, dt);
  for (int j = 0; j < g.n; ++j)
    CHECK(v[j] == doctest::Approx(u[j] / 1.1).epsilon(1e-12));

  // each mode decays by exactly 1/(1 + dt kappa^4)
  Field mixed(g);
  for (int j = 0; j < g.n; ++j)
    mixed[j] = std::sin(g.coord(j)) + 0.5 * std::sin(3.0 * g.coord(j));
  const Field w = step_imex(mixed, cfg, dt);
  for (int j = 0; j < g.n; ++j) {
    const double want =
        std::sin(g.coord(j)) / 1.1 + 0.5 * std::sin(3.0 * g.coord(j)) / (1.0 + dt * 81.0);
    CHECK(w[j] == doctest::Approx(want).epsilon(1e-11));
  }
}

TEST_CASE("imex step: zero field and zero-mode growth") {
  const Grid g = Grid::line(2.0 * kPi, 64, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  const Field z = step_imex(Field(g), cfg, 0.05);
  for (int j = 0; j < g.n; ++j) CHECK(z[j] == 0.0);

  // gamma = 1, linear only: a constant grows by (1 + dt gamma) per step
  cfg.gamma = 1.0;
  cfg.nonlinear = false;
  Field c(g);
  for (int j = 0; j < g.n; ++j) c[j] = 0.7;
  const Field cg = step_imex(c, cfg, 0.05);
  for (int j = 0; j < g.n; ++j) CHECK(cg[j] == doctest::Approx(0.7 * 1.05).epsilon(1e-13));

  CHECK_THROWS_AS(step_imex(c, cfg, -0.1), ContractViolation);
}

TEST_CASE("energy values") {
  const Grid g = Grid::line(2.0 * kPi, 256, Grid::Bc::periodic);
  CHECK(energy(Field(g), 3.0, true) == 0.0);
  Field u(g);
  for (int j = 0; j < g.n; ++j) u[j] = std::sin(g.coord(j));
  // int cos^2 = pi, int sin^4 = 3 pi / 4 on (0, 2 pi)
  CHECK(energy(u, 3.0, true) == doctest::Approx(11.0 * kPi / 16.0).epsilon(1e-10));
  CHECK(energy(u, 3.0, false) == doctest::Approx(kPi / 2.0 - 3.0 * kPi / 16.0).epsilon(1e-10));
  // quadratic scaling of the gradient part
  SimConfig cfg = base_config(g);
  (void)cfg;
  Field u2 = u;
  for (auto& v : u2.values) v *= 2.0;
  const double grad_only_1 = energy(u, 1.0, true) - integrate_abs_pow(u, 2.0) / 2.0;
  const double grad_only_2 = energy(u2, 1.0, true) - integrate_abs_pow(u2, 2.0) / 2.0;
  CHECK(grad_only_2 == doctest::Approx(4.0 * grad_only_1).epsilon(1e-10));
}

TEST_CASE("mass values") {
  const Grid g = Grid::line(2.0 * kPi, 128, Grid::Bc::periodic);
  Field u(g);
  for (int j = 0; j < g.n; ++j) u[j] = std::sin(g.coord(j));
  CHECK(std::abs(mass(u)) < 1e-12);
  Field c(g);
  for (int j = 0; j < g.n; ++j) c[j] = 2.0;
  CHECK(mass(c) == doctest::Approx(2.0 * g.length).epsilon(1e-13));

  const Grid gn = Grid::line(kPi, 255, Grid::Bc::navier);
  Field s(gn);
  for (int j = 0; j < gn.n; ++j) s[j] = std::sin(gn.coord(j));
  CHECK(mass(s) == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("stable run decays, zero data stays zero") {
  const Grid g = Grid::line(2.0 * kPi, 128, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  Field u0(g);
  for (int j = 0; j < g.n; ++j) u0[j] = std::sin(g.coord(j));
  cfg.blowup_threshold = 10.0;
  const SimResult res = run(cfg, u0);
  CHECK(res.status == SimStatus::completed);
  // sup-norm non-increasing after the first few records
  for (std::size_t i = 6; i < res.series.size(); ++i)
    CHECK(res.series[i].sup <= res.series[i - 1].sup * (1.0 + 1e-9));

  const SimResult zres = run(cfg, Field(g));
  CHECK(zres.status == SimStatus::completed);
  for (const auto& r : zres.series) {
    CHECK(r.sup == 0.0);
    CHECK(r.mass == 0.0);
    CHECK(r.energy == 0.0);
  }
}

TEST_CASE("series times are strictly increasing") {
  const Grid g = Grid::line(2.0 * kPi, 64, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  cfg.t_end = 0.2;
  Field u0(g);
  for (int j = 0; j < g.n; ++j) u0[j] = std::sin(g.coord(j));
  const SimResult res = run(cfg, u0);
  for (std::size_t i = 1; i < res.series.size(); ++i)
    CHECK(res.series[i].t > res.series[i - 1].t);
}

TEST_CASE("dt underflow is reported when the step collapses early") {
  const Grid g = Grid::line(16.0, 512, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  cfg.sign_stable = false;
  cfg.dt0 = 1e-4;
  cfg.dt_min = 1e-6;       // tight floor: the focusing run must fall through it
  cfg.t_end = 50.0;
  cfg.blowup_threshold = 1e9;  // unreachably high, so the step floor hits first
  Field u0(g);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.centered_coord(j);
    u0[j] = 10.0 * std::exp(-x * x);
  }
  const SimResult res = run(cfg, u0);
  CHECK(res.status == SimStatus::dt_underflow);
  CHECK(!res.series.empty());  // partial series retained
}

TEST_CASE("unstable large data blows up with a sensible rate") {
  const Grid g = Grid::line(16.0, 1024, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  cfg.sign_stable = false;
  cfg.dt0 = 1e-4;
  cfg.dt_min = 1e-15;
  cfg.t_end = 50.0;
  cfg.blowup_threshold = 120.0;
  cfg.snapshot_stride = 5;
  Field u0(g);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.centered_coord(j);
    u0[j] = 10.0 * std::exp(-x * x);
  }
  const SimResult res = run(cfg, u0);
  REQUIRE(res.status == SimStatus::blowup);
  CHECK(res.T_est > res.series.back().t);
  CHECK(res.fit_reliable);
  CHECK(res.fit_exponent == doctest::Approx(0.25).epsilon(0.2));
  CHECK(res.dt_collapsed);
}

TEST_CASE("mass conservation to rounding for periodic gamma = 0") {
  const Grid g = Grid::line(2.0 * kPi, 256, Grid::Bc::periodic);
  for (bool stable : {true, false}) {
    SimConfig cfg = base_config(g);
    cfg.sign_stable = stable;
    Field u0(g);
    for (int j = 0; j < g.n; ++j) u0[j] = 0.2 + 0.1 * std::sin(g.coord(j));
    const SimResult res = run(cfg, u0);
    REQUIRE(res.status == SimStatus::completed);
    const double m0 = res.series.front().mass;
    for (const auto& r : res.series)
      CHECK(std::abs(r.mass - m0) <= 1e-10 * (1.0 + std::abs(m0)));
  }
}

TEST_CASE("energy dissipation per step for the stable sign") {
  const Grid g = Grid::line(2.0 * kPi, 128, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  cfg.dt0 = 5e-4;
  Field u0(g);
  for (int j = 0; j < g.n; ++j)
    u0[j] = std::sin(g.coord(j)) + 0.4 * std::cos(2.0 * g.coord(j));
  const SimResult res = run(cfg, u0);
  REQUIRE(res.status == SimStatus::completed);
  for (std::size_t i = 1; i < res.series.size(); ++i) {
    const double prev = res.series[i - 1].energy;
    CHECK(res.series[i].energy <= prev + 1e-8 * (1.0 + std::abs(prev)));
  }
}

TEST_CASE("no false blow-up for desk-scale stable runs") {
  const Grid g = Grid::line(2.0 * kPi, 128, Grid::Bc::periodic);
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> dist(-1, 1);
  for (int trial = 0; trial < 3; ++trial) {
    Field u0(g);
    double sup = 0;
    for (int k = 1; k <= 6; ++k) {
      const double a = dist(rng), ph = kPi * dist(rng);
      for (int j = 0; j < g.n; ++j) u0[j] += a * std::sin(k * g.coord(j) + ph);
    }
    for (int j = 0; j < g.n; ++j) sup = std::max(sup, std::abs(u0[j]));
    for (int j = 0; j < g.n; ++j) u0[j] /= sup;
    SimConfig cfg = base_config(g);
    cfg.t_end = 10.0;
    cfg.dt0 = 5e-3;
    cfg.blowup_threshold = 10.0;
    const SimResult res = run(cfg, u0);
    CHECK(res.status == SimStatus::completed);
  }
}

TEST_CASE("blow-up rate fit on synthetic data") {
  std::vector<double> t, s;
  for (int i = 0; i < 15; ++i) {
    t.push_back(0.06 * i);
    s.push_back(std::pow(1.0 - t.back(), -0.25));
  }
  const BlowupFit fit = fit_blowup_rate(t, s);
  CHECK(fit.reliable);
  CHECK(fit.T_est == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(fit.exponent == doctest::Approx(0.25).epsilon(1e-6));

  // constant series: unreliable
  std::vector<double> flat(t.size(), 2.0);
  const BlowupFit bad = fit_blowup_rate(t, flat);
  CHECK(!bad.reliable);

  // too few samples: contract violation
  CHECK_THROWS_AS(fit_blowup_rate({0, 0.1}, {1, 2}), ContractViolation);
}

TEST_CASE("config validation") {
  const Grid g = Grid::line(2.0 * kPi, 64, Grid::Bc::periodic);
  SimConfig cfg = base_config(g);
  Field u0(g);
  for (int j = 0; j < g.n; ++j) u0[j] = std::sin(g.coord(j));

  SimConfig bad = cfg;
  bad.dt_min = bad.dt0;
  CHECK_THROWS_AS(run(bad, u0), ContractViolation);

  bad = cfg;
  bad.blowup_threshold = 0.5;  // below ||u0||_inf
  CHECK_THROWS_AS(run(bad, u0), ContractViolation);

  bad = cfg;
  bad.grid = Grid::radial(3, 1.0, 64);
  Field r0(bad.grid);
  CHECK_THROWS_AS(run(bad, r0), ContractViolation);
}
