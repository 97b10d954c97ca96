#pragma once

// Gradient-expansion kinetic-energy densities through sixth order for a
// spherically symmetric density. The vector and tensor contractions of the
// three-dimensional expressions are reduced to radial derivatives.

#include <span>
#include <vector>

#include "gradpade/radial.hpp"

namespace gradpade {

/// Thomas-Fermi constant (3/10)(3 pi^2)^(2/3).
double thomas_fermi_constant();

/// Scalar invariants of the density derivatives entering tau_2..tau_6.
struct Contractions {
  double g2 = 0.0;          // (grad rho)^2
  double lap = 0.0;         // laplacian of rho
  double glap2 = 0.0;       // (grad lap rho)^2
  double lap4 = 0.0;        // biharmonic lap(lap rho)
  double g_dot_glap = 0.0;  // grad rho . grad lap rho
  double g_hess2 = 0.0;     // |Hessian(rho) grad rho|^2
};

/// Kinetic-energy density coefficients of the series in x at one radius.
struct TauPoint {
  double tau0 = 0.0;
  double tau2 = 0.0;
  double tau4 = 0.0;
  double tau6 = 0.0;
};

/// Spherical reduction; with L = rho'' + 2 rho'/r and
/// L' = rho''' + 2 rho''/r - 2 rho'/r^2:
/// g2 = rho'^2, lap = L, glap2 = L'^2, lap4 = rho'''' + 4 rho'''/r,
/// g_dot_glap = rho' L', g_hess2 = (rho' rho'')^2. Requires r > 0.
Contractions contractions(const DensityDerivatives& d, double r);

double tau0(double rho);
double tau2(const Contractions& c, double rho);
double tau4(const Contractions& c, double rho);
double tau6(const Contractions& c, double rho);

TauPoint tau_point(const DensityDerivatives& d, double r);

/// tau_point at every radius of a density model (radii must be > 0).
std::vector<TauPoint> tau_profile(const DensityModel& density, std::span<const double> radii,
                                  Execution exec = Execution::parallel);

}  // namespace gradpade
