#include <doctest.h>

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "gradpade/error.hpp"
#include "gradpade/hooke.hpp"
#include "gradpade/kedf.hpp"
#include "gradpade/kernels.hpp"
#include "gradpade/radial.hpp"
#include "gradpade/resum.hpp"

using namespace gradpade;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("panel evaluation is bitwise identical serial and parallel") {
  const auto f = [](double r) { return std::exp(-r) * std::sin(3.0 * r) * r * r; };
  std::vector<Panel> a, b;
  for (int i = 0; i < 257; ++i) a.push_back({0.1 * i, 0.1 * (i + 1)});
  b = a;
  evaluate_panels(f, a, Execution::serial);
  evaluate_panels(f, b, Execution::parallel);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(same_bits(a[i].value, b[i].value));
    CHECK(same_bits(a[i].error, b[i].error));
  }
}

TEST_CASE("kinetic integrals are reproducible across execution modes") {
  const DensityPtr dm = hooke::omega_half_density();
  const RadialGrid grid = kinetic_grid(*dm);
  for (ResumMethod m : kAllMethods) {
    IntegrationOptions s, p;
    s.quad.exec = Execution::serial;
    p.quad.exec = Execution::parallel;
    const KineticReport rs = integrate_method(*dm, m, grid, 1.0, s);
    const KineticReport rp = integrate_method(*dm, m, grid, 1.0, p);
    CHECK(same_bits(rs.T, rp.T));
    REQUIRE(rs.poles.size() == rp.poles.size());
    for (std::size_t i = 0; i < rs.poles.size(); ++i) CHECK(same_bits(rs.poles[i], rp.poles[i]));
  }
}

TEST_CASE("tau profile matches pointwise evaluation") {
  const DensityPtr dm = hooke::omega_half_density();
  std::vector<double> radii;
  for (int i = 1; i <= 300; ++i) radii.push_back(0.02 * i);
  const auto serial = tau_profile(*dm, radii, Execution::serial);
  const auto parallel = tau_profile(*dm, radii, Execution::parallel);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    CHECK(same_bits(serial[i].tau6, parallel[i].tau6));
    CHECK(same_bits(serial[i].tau4, parallel[i].tau4));
  }
}

TEST_CASE("worker exceptions reach the caller") {
  CHECK_THROWS_AS(for_each_index(100, Execution::parallel,
                                 [](std::size_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
                  std::runtime_error);
  CHECK(parallel_threads() >= 1);
}

TEST_CASE("non-finite integrand is reported with its radius") {
  std::vector<Panel> panels{{0.0, 1.0}};
  try {
    evaluate_panels([](double r) { return r > 0.5 ? NAN : 1.0; }, panels, Execution::serial);
    FAIL("expected NonFiniteError");
  } catch (const NonFiniteError& e) {
    CHECK(e.radius() > 0.5);
    CHECK(e.radius() <= 1.0);
  }
}
