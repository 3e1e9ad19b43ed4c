#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "rescale/rescale.hpp"
#include "sim/simulate.hpp"

using namespace ch;

TEST_CASE("scaling exponent catalog") {
  // gamma1 = p - 1 - 4/(N-2) vanishes exactly at the critical exponent
  ScalingReport r = scaling_exponents(5.0, 3, 0.0);
  CHECK(r.gamma1 == doctest::Approx(0.0));
  CHECK(r.delta_behavior == DeltaBehavior::unit);
  CHECK(r.p_star == doctest::Approx(5.0));

  r = scaling_exponents(3.0, 3, 0.0);
  CHECK(r.gamma1 == doctest::Approx(-2.0));
  CHECK(r.delta_behavior == DeltaBehavior::vanishes);

  r = scaling_exponents(9.0, 3, 2.0);
  CHECK(r.p_star_alpha == doctest::Approx(9.0));
  CHECK(r.gamma1 == doctest::Approx(9.0 - 1.0 - 2.0 * 4.0 / 1.0));  // = 0, critical
  CHECK(r.delta_behavior == DeltaBehavior::unit);

  // supercritical: delta grows
  r = scaling_exponents(7.0, 3, 0.0);
  CHECK(r.delta_behavior == DeltaBehavior::grows);

  // N <= 2: sobolev rule rejected, p* infinite via the lp1 rule
  CHECK_THROWS_AS(scaling_exponents(3.0, 1, 0.0, ScalingRule::sobolev), ContractViolation);
  r = scaling_exponents(3.0, 1, 0.0, ScalingRule::lp1);
  CHECK(!r.p_star_finite);
  CHECK(std::isinf(r.p_star));
  CHECK(!r.gamma1_defined);
}

TEST_CASE("both exponent rules vanish together at criticality") {
  for (int N : {3, 4, 5, 8, 12}) {
    const double p_star = 1.0 + 4.0 / (N - 2);
    const ScalingReport r = scaling_exponents(p_star, N, 0.0);
    CHECK(r.gamma1 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(r.gamma2 == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("mass-law exponent vanishes exactly at the Fujita exponent") {
  for (int N : {1, 2, 3, 7}) {
    const double p0 = 1.0 + 2.0 / N;
    CHECK(mass_law_exponent(p0, N) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mass_law_exponent(p0 + 0.2, N) > 0.0);
    CHECK(mass_law_exponent(p0 - 0.2, N) < 0.0);
  }
  CHECK_THROWS_AS(mass_law_exponent(0.9, 3), ContractViolation);
}

namespace {

// u built from a known profile through the similarity ansatz
Field similarity_data(const Grid& g, double p, double T, double t, double (*prof)(double)) {
  const double tau = T - t;
  const double amp = std::pow(tau, -1.0 / (2.0 * (p - 1.0)));
  const double len = std::pow(tau, 0.25);
  Field u(g);
  for (int j = 0; j < g.n; ++j) u[j] = amp * prof(g.centered_coord(j) / len);
  return u;
}

double bump(double y) { return std::exp(-0.5 * y * y); }

}  // namespace

TEST_CASE("to_similarity inverts the similarity ansatz") {
  const Grid g = Grid::line(20.0, 2048, Grid::Bc::periodic);
  const Grid yg = Grid::line(12.0, 241, Grid::Bc::periodic);
  const double p = 3.0, T = 1.0, t = 0.99;
  const Field u = similarity_data(g, p, T, t, bump);
  const SimilarityFrame fr = to_similarity(u, p, T, t, yg);
  int nvalid = 0;
  for (int j = 0; j < yg.n; ++j) {
    if (!fr.valid[j]) continue;
    ++nvalid;
    const double y = yg.centered_coord(j);
    CHECK(fr.v[j] == doctest::Approx(bump(y)).epsilon(1e-5));
  }
  CHECK(nvalid > yg.n / 2);
  // zero field maps to zero
  const SimilarityFrame z = to_similarity(Field(g), p, T, t, yg);
  for (int j = 0; j < yg.n; ++j)
    if (z.valid[j]) CHECK(z.v[j] == 0.0);

  CHECK_THROWS_AS(to_similarity(u, p, T, 1.5, yg), ContractViolation);
}

TEST_CASE("out-of-range similarity coordinates are dropped, not extrapolated") {
  const Grid g = Grid::line(4.0, 256, Grid::Bc::periodic);
  const Grid yg = Grid::line(40.0, 201, Grid::Bc::periodic);
  const double p = 3.0, T = 1.0, t = 0.0;  // len = 1, y range needed: +-20 > +-2
  const Field u = similarity_data(g, p, T, t, bump);
  const SimilarityFrame fr = to_similarity(u, p, T, t, yg);
  int valid_count = 0;
  for (int j = 0; j < yg.n; ++j) {
    if (fr.valid[j]) ++valid_count;
    // anything beyond the source cone |y| < 2 must be dropped
    if (std::abs(yg.centered_coord(j)) > 2.0) CHECK(!fr.valid[j]);
  }
  CHECK(valid_count < yg.n);
  CHECK(valid_count > 0);
}

TEST_CASE("extract_profile on a genuine blow-up run") {
  const Grid g = Grid::line(8.0, 2048, Grid::Bc::periodic);
  SimConfig cfg;
  cfg.grid = g;
  cfg.p = 3.0;
  cfg.gamma = 0.0;
  cfg.sign_stable = false;
  cfg.dt0 = 1e-4;
  cfg.dt_min = 1e-15;
  cfg.t_end = 50.0;
  cfg.blowup_threshold = 60.0;
  cfg.snapshot_stride = 2;
  Field u0(g);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.centered_coord(j);
    u0[j] = 2.0 * std::exp(-x * x);
  }
  const SimResult res = run(cfg, u0);
  REQUIRE(res.status == SimStatus::blowup);
  const Grid yg = Grid::line(16.0, 321, Grid::Bc::periodic);
  const ExtractedProfile ep = extract_profile(res, 3.0, yg);
  CHECK(ep.T_est == res.T_est);
  CHECK(ep.convergence_gap < 0.2);
  // positive bell shape near the origin
  double at0 = 0;
  for (int j = 0; j < yg.n; ++j)
    if (yg.centered_coord(j) == 0.0) at0 = ep.f[j];
  CHECK(at0 > 0.5);
  // sup-difference between the last two rescalings decreases in t: the gap
  // is the certificate; re-extraction with a truncated window grows it
  SimResult shorter = res;
  shorter.snapshots.resize(res.snapshots.size() - 6);
  const ExtractedProfile earlier = extract_profile(shorter, 3.0, yg);
  CHECK(ep.convergence_gap <= earlier.convergence_gap * 1.5 + 1e-6);

  // not enough snapshots
  SimResult tiny = res;
  tiny.snapshots.resize(2);
  CHECK_THROWS_AS(extract_profile(tiny, 3.0, yg), NotEnoughData);

  SimResult completed = res;
  completed.status = SimStatus::completed;
  CHECK_THROWS_AS(extract_profile(completed, 3.0, yg), ContractViolation);
}
