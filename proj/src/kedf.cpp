#include "gradpade/kedf.hpp"

#include <cmath>
#include <numbers>

#include "gradpade/error.hpp"

namespace gradpade {

namespace {

const double kThreePiSq = 3.0 * std::numbers::pi * std::numbers::pi;
const double kCtf = 0.3 * std::cbrt(kThreePiSq * kThreePiSq);
const double kTau4Prefactor = 1.0 / (540.0 * std::cbrt(kThreePiSq * kThreePiSq));
const double kTau6Prefactor = 1.0 / (45360.0 * kThreePiSq * std::cbrt(kThreePiSq));

void require_positive(double rho, const char* what) {
  if (!(rho > 0.0)) throw DomainError(std::string(what) + ": vanishing density");
}

}  // namespace

double thomas_fermi_constant() { return kCtf; }

Contractions contractions(const DensityDerivatives& d, double r) {
  if (!(r > 0.0)) throw DomainError("contractions require r > 0");
  const double lap = d.d2 + 2.0 * d.d1 / r;
  const double dlap = d.d3 + 2.0 * d.d2 / r - 2.0 * d.d1 / (r * r);
  const double hess_grad = d.d1 * d.d2;
  return {
      .g2 = d.d1 * d.d1,
      .lap = lap,
      .glap2 = dlap * dlap,
      .lap4 = d.d4 + 4.0 * d.d3 / r,
      .g_dot_glap = d.d1 * dlap,
      .g_hess2 = hess_grad * hess_grad,
  };
}

double tau0(double rho) {
  if (rho < 0.0) throw DomainError("tau0: negative density");
  return kCtf * rho * std::cbrt(rho * rho);
}

double tau2(const Contractions& c, double rho) {
  if (rho < 0.0) throw DomainError("tau2: negative density");
  if (rho == 0.0) {
    if (c.g2 > 0.0) throw DomainError("tau2: vanishing density");
    return 0.0;
  }
  return c.g2 / (72.0 * rho);
}

double tau4(const Contractions& c, double rho) {
  require_positive(rho, "tau4");
  const double l = c.lap / rho;
  const double s = c.g2 / (rho * rho);
  return kTau4Prefactor * std::cbrt(rho) * (l * l - 9.0 / 8.0 * l * s + s * s / 3.0);
}

double tau6(const Contractions& c, double rho) {
  require_positive(rho, "tau6");
  const double rho2 = rho * rho;
  const double l = c.lap / rho;
  const double s = c.g2 / rho2;
  const double bracket = 13.0 * c.glap2 / rho2 + 2575.0 / 144.0 * l * l * l +
                         249.0 / 16.0 * s * (c.lap4 / rho) + 1499.0 / 18.0 * s * l * l -
                         1307.0 / 36.0 * s * (c.g_dot_glap / rho2) +
                         343.0 / 18.0 * c.g_hess2 / (rho2 * rho2) + 8341.0 / 72.0 * l * s * s -
                         1600495.0 / 2592.0 * s * s * s;
  return kTau6Prefactor / std::cbrt(rho) * bracket;
}

TauPoint tau_point(const DensityDerivatives& d, double r) {
  if (!d.finite()) throw NonFiniteError("density derivatives are not finite", r);
  if (d.rho <= 0.0) {
    const Contractions c = contractions(d, r);
    return {tau0(d.rho), tau2(c, d.rho), tau4(c, d.rho), tau6(c, d.rho)};
  }
  // The gradient brackets are invariant under rho -> g rho. Working with
  // rho-normalized derivatives keeps far-tail products from underflowing.
  const DensityDerivatives n{1.0, d.d1 / d.rho, d.d2 / d.rho, d.d3 / d.rho, d.d4 / d.rho};
  const Contractions c = contractions(n, r);
  const double cr = std::cbrt(d.rho);
  return {tau0(d.rho), d.rho * tau2(c, 1.0), cr * tau4(c, 1.0), tau6(c, 1.0) / cr};
}

std::vector<TauPoint> tau_profile(const DensityModel& density, std::span<const double> radii,
                                  Execution exec) {
  std::vector<TauPoint> out(radii.size());
  for_each_index(radii.size(), exec, [&](std::size_t i) { out[i] = tau_point(density.eval(radii[i]), radii[i]); });
  return out;
}

}  // namespace gradpade
