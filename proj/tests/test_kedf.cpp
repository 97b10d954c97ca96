#include <doctest.h>

#include <cmath>
#include <random>

#include "gradpade/kedf.hpp"
#include "support/oracles.hpp"

using namespace gradpade;
using doctest::Approx;

TEST_CASE("contractions of polynomial densities") {
  const Contractions quad = contractions({1.0, 2.0, 2.0, 0.0, 0.0}, 1.0);
  CHECK(quad.lap == Approx(6.0));
  const Contractions quart = contractions({1.0, 4.0, 12.0, 24.0, 24.0}, 1.0);
  CHECK(quart.lap4 == Approx(120.0));
  CHECK_THROWS_AS(contractions({1.0, 0, 0, 0, 0}, 0.0), DomainError);
}

TEST_CASE("Thomas-Fermi term") {
  CHECK(thomas_fermi_constant() == Approx(2.871234).epsilon(1e-7));
  CHECK(std::abs(tau0(1.0) - 2.871234) < 1e-6);
  CHECK(tau0(0.0) == 0.0);
  CHECK(tau0(8.0) == Approx(32.0 * thomas_fermi_constant()).epsilon(1e-14));
  CHECK_THROWS_AS(tau0(-1.0), DomainError);
}

TEST_CASE("second-order term") {
  const Contractions uniform{};
  CHECK(tau2(uniform, 2.0) == 0.0);
  CHECK(tau2(contractions({1.0, -1.0, 1.0, -1.0, 1.0}, 1e-3), 1.0) == Approx(1.0 / 72.0));
  const double r = 1.0;
  const auto g = oracle::analytic_densities()[0];
  CHECK(tau_point(g.eval(r), r).tau2 == Approx(std::exp(-1.0) / 18.0).epsilon(1e-14));
  CHECK_THROWS_WITH(tau2(contractions({0.0, 1.0, 0, 0, 0}, 1.0), 0.0), doctest::Contains("vanishing density"));
}

TEST_CASE("higher orders vanish for uniform density and need rho > 0") {
  const TauPoint p = tau_point({1.0, 0, 0, 0, 0}, 0.5);
  CHECK(p.tau0 == Approx(2.871234).epsilon(1e-6));
  CHECK(p.tau2 == 0.0);
  CHECK(p.tau4 == 0.0);
  CHECK(p.tau6 == 0.0);
  CHECK_THROWS_AS(tau4(Contractions{}, 0.0), DomainError);
  CHECK_THROWS_AS(tau6(Contractions{}, 0.0), DomainError);
  CHECK_THROWS_AS(tau_point({1.0, NAN, 0, 0, 0}, 1.0), NonFiniteError);
}

TEST_CASE("exponential density at r = 2") {
  const auto e = oracle::analytic_densities()[1];
  const TauPoint p = tau_point(e.eval(2.0), 2.0);
  CHECK(p.tau2 == Approx(std::exp(-2.0) / 72.0).epsilon(1e-14));
  CHECK(oracle::oracle_deviation(e, 2.0) < 1e-5);
}

TEST_CASE("Gaussian contractions match the Cartesian stencil") {
  const auto g = oracle::analytic_densities()[0];
  const double r = 0.7;
  const Contractions a = contractions(g.eval(r), r);
  const Contractions b = oracle::cartesian_contractions(oracle::cartesian_field(g), oracle::generic_point(r), 0.02);
  CHECK(a.g2 == Approx(b.g2).epsilon(1e-6));
  CHECK(a.lap == Approx(b.lap).epsilon(1e-6));
  CHECK(a.glap2 == Approx(b.glap2).epsilon(1e-6));
  CHECK(a.lap4 == Approx(b.lap4).epsilon(1e-6));
  CHECK(a.g_dot_glap == Approx(b.g_dot_glap).epsilon(1e-6));
  CHECK(a.g_hess2 == Approx(b.g_hess2).epsilon(1e-6));
  const auto t46 = oracle::cartesian_tau46(b, g.value(r));
  const TauPoint p = tau_point(g.eval(r), r);
  CHECK(p.tau4 == Approx(t46[0]).epsilon(1e-8));
  CHECK(p.tau6 == Approx(t46[1]).epsilon(1e-5));
}

TEST_CASE("spherical reduction agrees with the Cartesian oracle") {
  for (const auto& d : oracle::analytic_densities()) {
    CAPTURE(d.name);
    for (double r : oracle::oracle_radii(d)) {
      CAPTURE(r);
      CHECK(oracle::oracle_deviation(d, r) < 1e-5);
    }
  }
}

TEST_CASE("scaling law") {
  std::mt19937_64 rng(20260417);
  auto densities = oracle::analytic_densities();
  densities.push_back(oracle::hooke_density());
  for (const auto& d : densities) {
    CAPTURE(d.name);
    std::uniform_real_distribution<double> radius(0.05, 4.0);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double r = radius(rng);
      const DensityDerivatives base = d.eval(r);
      const TauPoint p = tau_point(base, r);
      for (double g : {0.125, 8.0}) {
        const TauPoint q = tau_point(base.scaled(g), r);
        const double f = std::cbrt(g);
        worst = std::max(worst, std::abs(q.tau0 / (f * f * f * f * f * p.tau0) - 1.0));
        worst = std::max(worst, std::abs(q.tau2 / (f * f * f * p.tau2) - 1.0));
        worst = std::max(worst, std::abs(q.tau4 / (f * p.tau4) - 1.0));
        worst = std::max(worst, std::abs(q.tau6 * f / p.tau6 - 1.0));
      }
    }
    CHECK(worst < 1e-12);
  }
  const Contractions c = contractions(oracle::hooke_density().eval(1.3), 1.3);
  const Contractions c8 = contractions(oracle::hooke_density().eval(1.3).scaled(8.0), 1.3);
  const double rho = oracle::hooke_density().value(1.3);
  CHECK(tau4(c8, 8.0 * rho) / tau4(c, rho) == Approx(2.0).epsilon(1e-14));
  CHECK(tau6(c8, 8.0 * rho) / tau6(c, rho) == Approx(0.5).epsilon(1e-14));
}

TEST_CASE("Hooke density has a window where the series looks convergent") {
  const auto h = oracle::hooke_density();
  int inside = 0;
  for (double r = 0.01; r < 6.0; r += 0.01) {
    const TauPoint p = tau_point(h.eval(r), r);
    CHECK(p.tau0 >= 0.0);
    CHECK(p.tau2 >= 0.0);
    if (std::abs(p.tau6) < std::abs(p.tau4) && std::abs(p.tau4) < std::abs(p.tau2) && std::abs(p.tau2) < p.tau0) ++inside;
  }
  CHECK(inside > 0);
}

TEST_CASE("far tail stays finite") {
  const auto h = oracle::hooke_density();
  for (double r : {20.0, 30.0, 36.0}) {
    const TauPoint p = tau_point(h.eval(r), r);
    CHECK(std::isfinite(p.tau6));
    CHECK(std::isfinite(p.tau4));
  }
}
