#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/errors.hpp"
#include "patterns/patterns.hpp"

using namespace ch;

TEST_CASE("exponent catalog spot values") {
  ExponentReport r = exponent_report(1, 0.0);
  CHECK(r.p0 == doctest::Approx(3.0));
  CHECK(r.p1 == doctest::Approx(2.0));
  CHECK(!r.p_star_finite);
  CHECK(std::isinf(r.p_star));
  CHECK(!r.p_sobolev_defined);
  CHECK(!r.p_N_defined);
  CHECK(!r.p_JL_defined);

  r = exponent_report(3, 0.0);
  CHECK(r.p_sobolev == doctest::Approx(5.0));
  CHECK(r.p_N == doctest::Approx(3.0));
  CHECK(r.p0 == doctest::Approx(5.0 / 3.0));
  CHECK(r.p_star == doctest::Approx(5.0));

  r = exponent_report(3, 2.0);
  CHECK(r.p_star_alpha == doctest::Approx(9.0));

  r = exponent_report(12, 0.0);
  CHECK(r.p_JL_defined);
  CHECK(r.p_JL == doctest::Approx(1.0 + 4.0 / (8.0 - 2.0 * std::sqrt(11.0))).epsilon(1e-12));
  CHECK(r.p_JL == doctest::Approx(3.9266).epsilon(1e-3));

  CHECK(!exponent_report(10, 0.0).p_JL_defined);
}

TEST_CASE("exponent ordering p0 < p_N < p_S for N >= 3") {
  for (int N = 3; N <= 30; ++N) {
    const ExponentReport r = exponent_report(N, 0.0);
    CHECK(r.p0 < r.p_N);
    CHECK(r.p_N < r.p_sobolev);
  }
}

TEST_CASE("Loewner-Nirenberg solution: value, equation residual, decay") {
  CHECK(loewner_nirenberg(0.0, 1.0, 3) == doctest::Approx(1.0));
  CHECK(loewner_nirenberg(0.0, 0.5, 4) == doctest::Approx(0.5));

  // residual of Delta W + W^{p_S} = 0 via high-order finite differences
  for (int N : {3, 4, 5}) {
    for (double d : {0.5, 1.0, 2.0}) {
      const double pS = static_cast<double>(N + 2) / (N - 2);
      const double h = 1e-4;
      for (double r : {0.3, 1.0, 2.7}) {
        auto W = [&](double x) { return loewner_nirenberg(x, d, N); };
        const double d2 = (W(r + h) - 2.0 * W(r) + W(r - h)) / (h * h);
        const double d1 = (W(r + h) - W(r - h)) / (2.0 * h);
        const double lap = d2 + (N - 1) * d1 / r;
        const double res = lap + std::pow(W(r), pS);
        CHECK(std::abs(res) <= 1e-6 * (1.0 + std::pow(W(0.0), pS)));
      }
    }
  }

  // algebraic decay W ~ [N(N-2)]^{(N-2)/2} d^{-1} |xi|^{-(N-2)}
  for (int N : {3, 4}) {
    const double d = 1.0, xi = 1e3;
    const double K = static_cast<double>(N) * (N - 2);
    const double asym = std::pow(K, 0.5 * (N - 2)) / d * std::pow(xi, -(N - 2.0));
    CHECK(loewner_nirenberg(xi, d, N) == doctest::Approx(asym).epsilon(0.01));
  }
  CHECK_THROWS_AS(loewner_nirenberg(1.0, 1.0, 2), ContractViolation);
  CHECK_THROWS_AS(loewner_nirenberg(1.0, 0.0, 3), ContractViolation);
}

TEST_CASE("singular steady state constants and residual") {
  // N = 3, p = 3 sits exactly on the p_N boundary: rejected
  CHECK_THROWS_AS(singular_state(3.0, 3), ContractViolation);

  SingularState s = singular_state(3.0, 4);
  CHECK(s.mu == doctest::Approx(1.0));
  CHECK(s.D == doctest::Approx(1.0));
  CHECK(s.C_star == doctest::Approx(1.0));

  s = singular_state(2.0, 10);
  CHECK(s.mu == doctest::Approx(2.0));
  CHECK(s.D == doctest::Approx(12.0));
  CHECK(s.C_star == doctest::Approx(12.0));

  // U = C |y|^{-mu} solves Delta U + U^p = 0 away from the origin
  for (double r : {0.5, 1.0, 3.0}) {
    const SingularState st = singular_state(3.0, 4);
    auto U = [&](double x) { return st.C_star * std::pow(x, -st.mu); };
    const double h = 1e-5 * r;
    const double d2 = (U(r + h) - 2.0 * U(r) + U(r - h)) / (h * h);
    const double d1 = (U(r + h) - U(r - h)) / (2.0 * h);
    const double res = d2 + (st.N - 1) * d1 / r + std::pow(U(r), st.p);
    CHECK(std::abs(res) <= 1e-5 * std::pow(U(r), st.p));
  }
}

TEST_CASE("Hardy criterion and Joseph-Lundgren saturation") {
  // p_JL(N) D = (N-2)^2/4 to 1e-9 for N = 11..30
  for (int N = 11; N <= 30; ++N) {
    const ExponentReport r = exponent_report(N, 0.0);
    REQUIRE(r.p_JL_defined);
    const HardyCheck h = hardy_criterion(r.p_JL, N);
    CHECK(std::abs(h.c - h.c_H) <= 1e-9 * h.c_H);
    CHECK(h.satisfied);
  }
  // deeper supercritical p keeps the criterion satisfied (c decreasing)
  const ExponentReport r12 = exponent_report(12, 0.0);
  const HardyCheck deeper = hardy_criterion(r12.p_JL + 1.0, 12);
  CHECK(deeper.satisfied);
  CHECK(deeper.c < hardy_criterion(r12.p_JL, 12).c);
  // N = 10: p_JL undefined, pointwise evaluation still works
  const HardyCheck pointwise = hardy_criterion(3.0, 10);
  CHECK(pointwise.c_H == doctest::Approx(16.0));
}

TEST_CASE("characteristic roots: factorization, Vieta, double root") {
  for (int N : {3, 6, 12}) {
    CharacteristicRoots r = characteristic_roots(0.0, N);
    CHECK(r.roots[0] == 2.0);
    CHECK(r.roots[1] == 3.0);
    CHECK(r.roots[2] == doctest::Approx(0.0));
    CHECK(r.roots[3] == doctest::Approx(-(N - 2.0)));

    // Vieta on the quadratic factor for generic c
    const double c = 0.3 * (N - 2) * (N - 2) / 4.0;
    r = characteristic_roots(c, N);
    CHECK(r.roots[2] * r.roots[3] == doctest::Approx(c).epsilon(1e-12));
    CHECK(r.roots[2] + r.roots[3] == doctest::Approx(-(N - 2.0)).epsilon(1e-12));

    const double cH = (N - 2.0) * (N - 2.0) / 4.0;
    r = characteristic_roots(cH, N);
    CHECK(r.double_root);
    CHECK(r.roots[2] == doctest::Approx(-0.5 * (N - 2.0)));

    r = characteristic_roots(cH + 1.0, N);
    CHECK(r.complex_pair);
  }
}

TEST_CASE("type-II blow-up rate formulas") {
  // p_S(10) = 1.5: rho = 4 * 1 / (8 * 0.5) = 1
  BlowupRate b = blowup_rate(-1.0, 2.0, 10);
  CHECK(b.rho == doctest::Approx(1.0));
  CHECK(b.mu_region2 == doctest::Approx(0.5));
  CHECK(b.s_law.find("(p-1)*rho") != std::string::npos);
  // linear in |lambda|
  CHECK(blowup_rate(-2.0, 2.0, 10).rho == doctest::Approx(2.0 * b.rho));
  // requires p > p_S and lambda < 0
  CHECK_THROWS_AS(blowup_rate(-1.0, 1.4, 10), ContractViolation);
  CHECK_THROWS_AS(blowup_rate(0.5, 2.0, 10), ContractViolation);
}

TEST_CASE("final profile exponent and its inequality chain") {
  FinalProfileExponent f = final_profile_exponent(3.0, 4);  // p = p_S(4)
  CHECK(f.gamma == doctest::Approx(0.25));
  CHECK(f.gamma == doctest::Approx((4.0 - 2.0) / (2.0 * 4.0)));
  CHECK(f.below_inv_pm1);
  CHECK(f.below_one);

  f = final_profile_exponent(5.0, 3);
  CHECK(f.gamma == doctest::Approx(1.0 / 6.0));

  // chain holds for sampled supercritical pairs
  for (int N : {3, 4, 6}) {
    const double pS = static_cast<double>(N + 2) / (N - 2);
    for (double dp : {0.0, 0.5, 2.0}) {
      const FinalProfileExponent q = final_profile_exponent(pS + dp, N);
      CHECK(q.below_inv_pm1);
      CHECK(q.below_one);
    }
  }
}

TEST_CASE("perturbation bound: linearity in c and refinement stability") {
  auto bump_field = [](int n) {
    const Grid g = Grid::radial(3, 1.0, n);
    Field u(g);
    for (int j = 0; j < n; ++j) {
      const double r = g.coord(j);
      // smooth bump supported in [0.2, 0.8]
      u[j] = (r > 0.2 && r < 0.8)
                 ? std::exp(-1.0 / ((r - 0.2) * (0.8 - r) + 1e-12))
                 : 0.0;
    }
    return u;
  };
  const Field u = bump_field(400);
  const PerturbationBound b0 = perturbation_bound_check(u, 0.0, 3);
  CHECK(b0.lhs == 0.0);
  const PerturbationBound b1 = perturbation_bound_check(u, 1.0, 3);
  const PerturbationBound b2 = perturbation_bound_check(u, 2.0, 3);
  CHECK(b2.lhs == doctest::Approx(2.0 * b1.lhs).epsilon(1e-12));
  CHECK(b1.ratio > 0.0);
  CHECK(std::isfinite(b1.ratio));
  // ratio stable under grid refinement
  const PerturbationBound fine = perturbation_bound_check(bump_field(800), 1.0, 3);
  CHECK(fine.ratio == doctest::Approx(b1.ratio).epsilon(0.02));

  // data violating the origin condition is rejected
  const Grid g = Grid::radial(3, 1.0, 100);
  Field bad(g);
  for (int j = 0; j < g.n; ++j) bad[j] = 1.0;
  CHECK_THROWS_AS(perturbation_bound_check(bad, 1.0, 3), ContractViolation);
}
