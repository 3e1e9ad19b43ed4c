// Exercises the shared-library C API surface end to end: handles, status
// codes, and the error-message channel.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chpde.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("version and status names") {
  CHECK(std::string(ch_version()) == "0.1.0");
  CHECK(std::string(ch_status_name(CH_OK)) == "ok");
  CHECK(std::string(ch_status_name(CH_ERR_CONTRACT)) == "contract-violation");
}

TEST_CASE("grid and field round-trip") {
  ch_grid* g = nullptr;
  REQUIRE(ch_grid_line(2.0 * kPi, 64, CH_BC_PERIODIC, &g) == CH_OK);
  CHECK(ch_grid_points(g) == 64);
  CHECK(ch_grid_spacing(g) == doctest::Approx(2.0 * kPi / 64));

  std::vector<double> x(64), u(64), back(64);
  REQUIRE(ch_grid_coords(g, x.data()) == CH_OK);
  for (int j = 0; j < 64; ++j) u[j] = std::sin(x[j]);
  ch_field* f = nullptr;
  REQUIRE(ch_field_create(g, u.data(), &f) == CH_OK);
  CHECK(ch_field_size(f) == 64);
  REQUIRE(ch_field_values(f, back.data()) == CH_OK);
  for (int j = 0; j < 64; ++j) CHECK(back[j] == u[j]);

  // laplacian of sin = -sin on L = 2 pi
  ch_field* lap = nullptr;
  REQUIRE(ch_laplacian(f, &lap) == CH_OK);
  REQUIRE(ch_field_values(lap, back.data()) == CH_OK);
  for (int j = 0; j < 64; ++j) CHECK(back[j] == doctest::Approx(-u[j]).epsilon(1e-10));

  ch_norms n{};
  REQUIRE(ch_field_norms(f, 3.0, &n) == CH_OK);
  CHECK(n.l2 * n.l2 == doctest::Approx(kPi).epsilon(1e-10));

  ch_field_free(lap);
  ch_field_free(f);
  ch_grid_free(g);
}

TEST_CASE("error channel carries typed failures") {
  ch_grid* g = nullptr;
  CHECK(ch_grid_line(-1.0, 64, CH_BC_NAVIER, &g) == CH_ERR_CONTRACT);
  CHECK(std::strlen(ch_last_error()) > 0);

  REQUIRE(ch_grid_line(2.0, 32, CH_BC_PERIODIC, &g) == CH_OK);
  std::vector<double> ones(32, 1.0);
  ch_field* f = nullptr;
  REQUIRE(ch_field_create(g, ones.data(), &f) == CH_OK);
  ch_field* inv = nullptr;
  CHECK(ch_inverse_laplacian(f, &inv) == CH_ERR_NONINVERTIBLE);
  ch_field_free(f);
  ch_grid_free(g);
}

TEST_CASE("simulate through the C surface") {
  ch_grid* g = nullptr;
  REQUIRE(ch_grid_line(2.0 * kPi, 128, CH_BC_PERIODIC, &g) == CH_OK);
  std::vector<double> x(128), u(128);
  ch_grid_coords(g, x.data());
  for (int j = 0; j < 128; ++j) u[j] = std::sin(x[j]);
  ch_field* u0 = nullptr;
  REQUIRE(ch_field_create(g, u.data(), &u0) == CH_OK);

  ch_sim_config cfg{};
  cfg.p = 3.0;
  cfg.gamma = 0.0;
  cfg.sign_stable = 1;
  cfg.dt0 = 1e-3;
  cfg.dt_min = 1e-12;
  cfg.t_end = 0.2;
  cfg.blowup_threshold = 10.0;
  cfg.snapshot_stride = 20;
  cfg.nonlinear = 1;
  ch_sim_result* res = nullptr;
  REQUIRE(ch_sim_run(&cfg, u0, &res) == CH_OK);
  CHECK(ch_sim_status(res) == CH_SIM_COMPLETED);
  const int len = ch_sim_series_len(res);
  REQUIRE(len > 2);
  std::vector<double> t(len), sup(len), en(len), mass(len), h1(len);
  REQUIRE(ch_sim_series(res, t.data(), sup.data(), en.data(), mass.data(), h1.data()) == CH_OK);
  CHECK(t.front() == 0.0);
  CHECK(t.back() == doctest::Approx(0.2));
  CHECK(ch_sim_snapshot_count(res) >= 1);
  double ts = -1;
  ch_field* snap = nullptr;
  REQUIRE(ch_sim_snapshot(res, 0, &ts, &snap) == CH_OK);
  CHECK(ts == 0.0);
  ch_field_free(snap);
  ch_sim_result_free(res);
  ch_field_free(u0);
  ch_grid_free(g);
}

TEST_CASE("blow-up fit statuses through the C surface") {
  std::vector<double> t, s;
  for (int i = 0; i < 15; ++i) {
    t.push_back(0.06 * i);
    s.push_back(std::pow(1.0 - t.back(), -0.25));
  }
  double T = 0, ex = 0;
  REQUIRE(ch_fit_blowup_rate(t.data(), s.data(), 15, &T, &ex) == CH_OK);
  CHECK(T == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ex == doctest::Approx(0.25).epsilon(1e-6));

  std::vector<double> flat(15, 2.0);
  CHECK(ch_fit_blowup_rate(t.data(), flat.data(), 15, &T, &ex) == CH_ERR_FIT_UNRELIABLE);
  CHECK(ch_fit_blowup_rate(t.data(), s.data(), 3, &T, &ex) == CH_ERR_CONTRACT);
}

TEST_CASE("profiles and spectral through the C surface") {
  double st[4];
  REQUIRE(ch_tail_state(10.0, 3.0, 1.0, 0.0, st) == CH_OK);
  CHECK(st[0] == doctest::Approx(0.1));
  CHECK(ch_tail_state(1.0, 3.0, 1.0, 0.0, st) == CH_ERR_CONTRACT);

  ch_profile* pr = nullptr;
  REQUIRE(ch_solve_profile(3.0, 1, nullptr, nullptr, &pr) == CH_OK);
  double A = 1, C = 0, resid[2];
  REQUIRE(ch_profile_params(pr, &A, &C, resid) == CH_OK);
  CHECK(std::abs(A) < 1e-4);
  const int n = ch_profile_len(pr);
  REQUIRE(n > 10);
  std::vector<double> y(n), f(n);
  REQUIRE(ch_profile_data(pr, y.data(), f.data(), nullptr, nullptr, nullptr) == CH_OK);
  CHECK(f.front() > 1.0);
  double mass = 0;
  int nonint = -1;
  REQUIRE(ch_profile_mass(pr, &mass, &nonint) == CH_OK);
  CHECK(nonint == 0);
  ch_profile_free(pr);

  CHECK(ch_solve_profile(0.5, 1, nullptr, nullptr, &pr) == CH_ERR_CONTRACT);

  int beta = 4;
  ch_hermite* h = nullptr;
  REQUIRE(ch_hermite_create(&beta, 1, &h) == CH_OK);
  int64_t num = 0, den = 0;
  REQUIRE(ch_hermite_eigenvalue(h, &num, &den) == CH_OK);
  CHECK(num == -1);
  CHECK(den == 1);
  CHECK(ch_hermite_beta_factorial(h) == 24);
  CHECK(ch_hermite_identity_exact(h) == 1);
  CHECK(ch_hermite_term_count(h) == 2);
  int exps[3];
  int64_t tn = 0, td = 0;
  REQUIRE(ch_hermite_term(h, 0, exps, &tn, &td) == CH_OK);
  ch_hermite_free(h);

  double gram = 0;
  REQUIRE(ch_biorthonormality(0, 0, &gram) == CH_OK);
  CHECK(gram == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(ch_kernel_moment(4) == doctest::Approx(-24.0));
  CHECK(ch_alpha_beta(0, 4) == doctest::Approx(0.25));
}

TEST_CASE("steady and patterns through the C surface") {
  double lam[3];
  REQUIRE(ch_biharmonic_eigs(kPi, 3, lam) == CH_OK);
  CHECK(lam[0] == doctest::Approx(1.0));
  CHECK(ch_critical_gamma(3.0, 1.0) == doctest::Approx(0.75));

  std::vector<double> nu(4);
  int count = 0;
  REQUIRE(ch_category_census(20.0, kPi, 4, nu.data(), &count) == CH_OK);
  CHECK(count == 2);

  ch_grid* g = nullptr;
  REQUIRE(ch_grid_line(kPi, 128, CH_BC_NAVIER, &g) == CH_OK);
  std::vector<double> x(128), u(128);
  ch_grid_coords(g, x.data());
  for (int j = 0; j < 128; ++j) u[j] = std::sin(x[j]);
  ch_field* seed = nullptr;
  REQUIRE(ch_field_create(g, u.data(), &seed) == CH_OK);
  ch_steady* st = nullptr;
  REQUIRE(ch_solve_steady(kPi, 3.0, 0.0, 64, seed, &st) == CH_OK);
  double rn = 1, cv = 0, F = 0;
  int cls = -1, sc = -1;
  REQUIRE(ch_steady_info(st, &rn, &cv, &F, &cls, &sc) == CH_OK);
  CHECK(rn <= 1e-10);
  CHECK(sc == 0);
  CHECK(cls == CH_FIBERING_UNIQUE_MAX);
  ch_steady_free(st);
  ch_field_free(seed);
  ch_grid_free(g);

  ch_exponents e{};
  REQUIRE(ch_exponent_report(3, 0.0, &e) == CH_OK);
  CHECK(e.p_sobolev == doctest::Approx(5.0));
  ch_singular_state s{};
  REQUIRE(ch_singular_state_get(3.0, 4, &s) == CH_OK);
  CHECK(s.C_star == doctest::Approx(1.0));
  CHECK(ch_singular_state_get(3.0, 3, &s) == CH_ERR_CONTRACT);

  double c = 0, cH = 0;
  int sat = 0;
  REQUIRE(ch_hardy_criterion(4.0, 12, &c, &cH, &sat) == CH_OK);
  CHECK(cH == doctest::Approx(25.0));

  double roots[4];
  int dr = 0, cp = 0;
  REQUIRE(ch_characteristic_roots(25.0, 12, roots, &dr, &cp) == CH_OK);
  CHECK(dr == 1);

  double rho = 0, mu2 = 0;
  char law[64];
  REQUIRE(ch_blowup_rate(-1.0, 2.0, 10, &rho, &mu2, law, sizeof law) == CH_OK);
  CHECK(rho == doctest::Approx(1.0));
  CHECK(mu2 == doctest::Approx(0.5));
}
