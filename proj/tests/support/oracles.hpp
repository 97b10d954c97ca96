#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner.

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "gradpade/hooke.hpp"
#include "gradpade/kedf.hpp"
#include "gradpade/radial.hpp"

namespace oracle {

using gradpade::Jet;

struct TestDensity {
  std::string name;
  std::function<Jet(const Jet&)> radial;

  gradpade::DensityDerivatives eval(double r) const {
    return gradpade::DensityDerivatives::from_jet(radial(Jet::variable(r)));
  }
  double value(double r) const { return radial(Jet(r)).value(); }
};

inline std::vector<TestDensity> analytic_densities() {
  return {
      {"gaussian", [](const Jet& r) { return exp(-(r * r)); }},
      {"exponential", [](const Jet& r) { return exp(-r); }},
      {"gaussian*(1+r^2)", [](const Jet& r) { return (1.0 + r * r) * exp(-(r * r)); }},
  };
}

inline TestDensity hooke_density() {
  return {"hooke", [](const Jet& r) { return gradpade::hooke::omega_half_rescale() * gradpade::hooke::omega_half_unscaled(r); }};
}

// Eighth-order central stencils.
inline constexpr std::array<double, 9> kFirst = {1.0 / 280, -4.0 / 105, 1.0 / 5, -4.0 / 5, 0.0,
                                                 4.0 / 5,   -1.0 / 5,   4.0 / 105, -1.0 / 280};
inline constexpr std::array<double, 9> kSecond = {-1.0 / 560, 8.0 / 315, -1.0 / 5, 8.0 / 5, -205.0 / 72,
                                                  8.0 / 5,    -1.0 / 5,  8.0 / 315, -1.0 / 560};

using Vec3 = std::array<double, 3>;
using Field3 = std::function<double(const Vec3&)>;

inline double stencil(const Field3& f, Vec3 p, int axis, double h, const std::array<double, 9>& w, int power) {
  const double x0 = p[axis];
  double s = 0.0;
  for (int k = -4; k <= 4; ++k) {
    if (w[k + 4] == 0.0) continue;
    p[axis] = x0 + k * h;
    s += w[k + 4] * f(p);
  }
  return s / std::pow(h, power);
}

inline double d1(const Field3& f, const Vec3& p, int i, double h) { return stencil(f, p, i, h, kFirst, 1); }
inline double d2(const Field3& f, const Vec3& p, int i, double h) { return stencil(f, p, i, h, kSecond, 2); }

inline double laplacian(const Field3& f, const Vec3& p, double h) {
  return d2(f, p, 0, h) + d2(f, p, 1, h) + d2(f, p, 2, h);
}

/// Cartesian invariants of a 3D field at p, by brute-force finite differences.
inline gradpade::Contractions cartesian_contractions(const Field3& f, const Vec3& p, double h) {
  Vec3 g{};
  for (int i = 0; i < 3; ++i) g[i] = d1(f, p, i, h);
  double H[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        H[i][j] = d2(f, p, i, h);
      } else {
        const Field3 fj = [&f, j, h](const Vec3& q) { return d1(f, q, j, h); };
        H[i][j] = d1(fj, p, i, h);
      }
    }
  const Field3 lap = [&f, h](const Vec3& q) { return laplacian(f, q, h); };
  Vec3 glap{};
  for (int i = 0; i < 3; ++i) glap[i] = d1(lap, p, i, h);
  Vec3 Hg{};
  for (int i = 0; i < 3; ++i) Hg[i] = H[i][0] * g[0] + H[i][1] * g[1] + H[i][2] * g[2];
  auto dot = [](const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  return {
      .g2 = dot(g, g),
      .lap = H[0][0] + H[1][1] + H[2][2],
      .glap2 = dot(glap, glap),
      .lap4 = laplacian(lap, p, h),
      .g_dot_glap = dot(g, glap),
      .g_hess2 = dot(Hg, Hg),
  };
}

/// tau4 and tau6 assembled directly from the three-dimensional expressions.
inline std::array<double, 2> cartesian_tau46(const gradpade::Contractions& c, double rho) {
  const double k = 3.0 * M_PI * M_PI;
  const double l = c.lap / rho;
  const double s = c.g2 / (rho * rho);
  const double t4 = std::pow(k, -2.0 / 3.0) / 540.0 * std::cbrt(rho) * (l * l - 9.0 / 8.0 * l * s + s * s / 3.0);
  const double bracket = 13.0 * c.glap2 / (rho * rho) + 2575.0 / 144.0 * std::pow(c.lap / rho, 3) +
                         249.0 / 16.0 * (c.g2 / (rho * rho)) * (c.lap4 / rho) +
                         1499.0 / 18.0 * (c.g2 / (rho * rho)) * std::pow(c.lap / rho, 2) -
                         1307.0 / 36.0 * (c.g2 / (rho * rho)) * (c.g_dot_glap / (rho * rho)) +
                         343.0 / 18.0 * c.g_hess2 / std::pow(rho, 4) +
                         8341.0 / 72.0 * (c.lap / rho) * std::pow(c.g2 / (rho * rho), 2) -
                         1600495.0 / 2592.0 * std::pow(c.g2 / (rho * rho), 3);
  const double t6 = std::pow(k, -4.0 / 3.0) / 45360.0 / std::cbrt(rho) * bracket;
  return {t4, t6};
}

/// A direction with no special symmetry, so every Cartesian component is exercised.
inline Vec3 generic_point(double r) { return {0.48 * r, 0.6 * r, 0.64 * r}; }

inline Field3 cartesian_field(const TestDensity& d) {
  return [d](const Vec3& q) { return d.value(std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2])); };
}

/// Largest relative deviation between the spherical-reduction tau4, tau6 and
/// the Cartesian assembly at radius r.
inline double oracle_deviation(const TestDensity& d, double r, double h = 0.02) {
  const auto c = cartesian_contractions(cartesian_field(d), generic_point(r), h);
  const auto ref = cartesian_tau46(c, d.value(r));
  const gradpade::TauPoint t = gradpade::tau_point(d.eval(r), r);
  return std::max(std::abs(t.tau4 - ref[0]) / std::abs(ref[0]), std::abs(t.tau6 - ref[1]) / std::abs(ref[1]));
}

inline std::vector<double> oracle_radii(const TestDensity& d) {
  std::vector<double> out;
  for (double r : {0.3, 0.5, 0.7, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 5.0, 8.0, 12.0})
    if (d.value(r) > 1e-6) out.push_back(r);
  return out;
}

}  // namespace oracle
