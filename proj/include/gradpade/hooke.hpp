#pragma once

// Hooke's-law two-electron atom: H = -1/2 (lap_1 + lap_2) + w^2/2 (r_1^2 + r_2^2) + 1/r_12.
// In centre-of-mass / relative coordinates the Hamiltonian separates into a
// Gaussian centre-of-mass ground state and a radial relative-motion problem,
// which is solved numerically for arbitrary w.

#include <memory>
#include <vector>

#include "gradpade/radial.hpp"
#include "gradpade/resum.hpp"

namespace gradpade::hooke {

struct HookeParams {
  double omega = 0.5;
  bool interacting = true;
};

struct SolverControls {
  /// Chebyshev collocation order for the relative-motion equation.
  int collocation_order = 96;
  /// The relative coordinate is truncated at s_max = s_max_factor / sqrt(omega).
  double s_max_factor = 12.0;
  /// Gauss-Legendre panels (and points per panel) for the density reconstruction.
  int s_panels = 40;
  int gauss_points = 16;
};

struct HookeSolution {
  HookeParams params;
  DensityPtr density;
  /// Kohn-Sham kinetic energy of the exact density (1/8 \int |grad rho|^2 / rho).
  double T_exact = 0.0;
  /// Kinetic energy expectation value of the interacting wavefunction.
  double T_interacting = 0.0;
  double E_total = 0.0;
  double relative_energy = 0.0;
};

/// Density of the w = 1/2 ground state (closed form), normalized to two electrons.
DensityDerivatives density_omega_half(double r);

/// The closed form as a density model.
DensityPtr omega_half_density();

/// Density of the closed form before the global two-electron rescale.
Jet omega_half_unscaled(const Jet& r);

/// Constant multiplying the closed form so that it integrates to two electrons.
double omega_half_rescale();

/// Exact (to solver tolerance) ground state for arbitrary w.
HookeSolution solve_general(const HookeParams& params, const SolverControls& controls = {});

double kinetic_exact(const HookeSolution& sol);

/// 1/8 \int |grad rho|^2 / rho d^3r, the exact non-interacting kinetic energy
/// of any two-electron singlet density.
double von_weizsacker_energy(const DensityModel& density, const RadialGrid& grid,
                             const QuadOptions& opt = {});

}  // namespace gradpade::hooke
