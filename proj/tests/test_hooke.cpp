#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gradpade/hooke.hpp"
#include "gradpade/resum.hpp"

using namespace gradpade;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double n0sq() { return 1.0 / (4.0 * std::pow(kPi, 2.5) * (8.0 + 5.0 * std::sqrt(kPi))); }

double electrons(const DensityModel& d) {
  return integrate_radial([&d](double r) { return d.eval(r).rho; }, kinetic_grid(d));
}

}  // namespace

TEST_CASE("closed form: normalization and rescale") {
  const DensityPtr d = hooke::omega_half_density();
  CHECK(std::abs(electrons(*d) - 2.0) < 1e-9);
  CHECK(hooke::omega_half_rescale() == Approx(8.0 * kPi).epsilon(1e-14));
  const double raw = integrate_radial([](double r) { return hooke::omega_half_unscaled(Jet(r)).value(); },
                                      kinetic_grid(*d));
  CHECK(raw * hooke::omega_half_rescale() == Approx(2.0).epsilon(1e-10));
}

TEST_CASE("closed form: origin and tail") {
  const double rho0 = hooke::density_omega_half(0.0).rho;
  CHECK(rho0 == Approx(8.0 * kPi * n0sq() * (std::sqrt(kPi / 2.0) * 1.75 + 2.0)).epsilon(1e-13));
  CHECK(hooke::density_omega_half(0.0).d1 == Approx(0.0).scale(1.0));
  for (double r : {8.0, 15.0, 25.0}) {
    const double lead = 8.0 * kPi * n0sq() * std::sqrt(kPi / 2.0) / 4.0 *
                        (1.0 + 4.0 / r + 7.0 / (r * r) + 4.0 / (r * r * r));
    CHECK(hooke::density_omega_half(r).rho * std::exp(r * r / 2.0) / (r * r) == Approx(lead).epsilon(1e-10));
  }
  CHECK_THROWS_AS(hooke::density_omega_half(-0.1), DomainError);
}

TEST_CASE("closed form: derivatives against finite differences") {
  const double h = 1e-3;
  for (double r : {0.3, 1.0, 2.5}) {
    auto f = [](double x) { return hooke::density_omega_half(x).rho; };
    const auto d = hooke::density_omega_half(r);
    const double fd1 = (f(r - 2 * h) - 8 * f(r - h) + 8 * f(r + h) - f(r + 2 * h)) / (12 * h);
    const double fd2 = (-f(r - 2 * h) + 16 * f(r - h) - 30 * f(r) + 16 * f(r + h) - f(r + 2 * h)) / (12 * h * h);
    CHECK(d.d1 == Approx(fd1).epsilon(1e-8));
    CHECK(d.d2 == Approx(fd2).epsilon(1e-6));
    auto g = [](double x) { return hooke::density_omega_half(x).d2; };
    const double fd4 = (-g(r - 2 * h) + 16 * g(r - h) - 30 * g(r) + 16 * g(r + h) - g(r + 2 * h)) / (12 * h * h);
    CHECK(d.d4 == Approx(fd4).epsilon(1e-5));
  }
}

TEST_CASE("closed form: monotone tail") {
  double prev = hooke::density_omega_half(0.0).rho;
  double r_peak = 0.0;
  for (double r = 0.01; r < 10.0; r += 0.01) {
    const double v = hooke::density_omega_half(r).rho;
    if (v > prev) r_peak = r;
    prev = v;
  }
  prev = hooke::density_omega_half(r_peak).rho;
  for (double r = r_peak + 0.01; r < 12.0; r += 0.01) {
    const double v = hooke::density_omega_half(r).rho;
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("numeric solver reproduces the omega = 1/2 solution") {
  const hooke::HookeSolution s = hooke::solve_general({0.5, true});
  CHECK(std::abs(s.relative_energy - 1.25) < 1e-9);
  CHECK(std::abs(s.E_total - 2.0) < 1e-6);
  CHECK(std::abs(electrons(*s.density) - 2.0) < 1e-8);
  CHECK(s.density->electron_count() == 2.0);
  double worst = 0.0;
  for (double r = 0.0; r <= 5.0; r += 0.05) {
    const double a = s.density->eval(r).rho;
    const double b = hooke::density_omega_half(r).rho;
    worst = std::max(worst, std::abs(a - b) / b);
  }
  CHECK(worst < 1e-6);
  CHECK(std::abs(hooke::kinetic_exact(s) - 0.63525) < 2e-4);
  const DensityPtr closed = hooke::omega_half_density();
  CHECK(hooke::kinetic_exact(s) == Approx(hooke::von_weizsacker_energy(*closed, kinetic_grid(*closed))).epsilon(1e-8));
}

TEST_CASE("interacting kinetic energy exceeds the Kohn-Sham value") {
  const hooke::HookeSolution s = hooke::solve_general({0.5, true});
  CHECK(s.T_interacting > s.T_exact);
  // The wavefunction expectation value does not reproduce the tabulated 0.63525.
  CHECK(std::abs(s.T_interacting - 0.63525) > 0.02);
}

TEST_CASE("tabulated kinetic energies at other frequencies") {
  CHECK(std::abs(hooke::solve_general({0.25, true}).T_exact - 0.30036) < 3e-4);
  CHECK(std::abs(hooke::solve_general({1.0, true}).T_exact - 1.32757) < 5e-4);
  CHECK(std::abs(hooke::solve_general({4.0, true}).T_exact - 5.62884) < 6e-3);
}

TEST_CASE("non-interacting oscillators") {
  for (double w : {0.5, 1.0}) {
    const hooke::HookeSolution s = hooke::solve_general({w, false});
    CHECK(s.T_exact == Approx(1.5 * w).epsilon(1e-9));
    CHECK(s.E_total == Approx(3.0 * w).epsilon(1e-9));
    CHECK(std::abs(electrons(*s.density) - 2.0) < 1e-8);
    const double a = 2.0 * std::pow(w / kPi, 1.5) * std::exp(-w);
    CHECK(s.density->eval(1.0).rho == Approx(a).epsilon(1e-8));
  }
}

TEST_CASE("solver input validation") {
  CHECK_THROWS_AS(hooke::solve_general({0.0, true}), DomainError);
  CHECK_THROWS_AS(hooke::solve_general({-1.0, true}), DomainError);
  hooke::SolverControls c;
  c.collocation_order = 4;
  CHECK_THROWS_AS(hooke::solve_general({1.0, true}, c), DomainError);
}
