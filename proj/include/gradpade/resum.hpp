#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gradpade/kedf.hpp"
#include "gradpade/radial.hpp"

namespace gradpade {

/// How the series tau0 + tau2 x + tau4 x^2 + tau6 x^3 is summed at x = 1.
enum class ResumMethod { T0, T02, T024, Pade11, Pade21 };

inline constexpr std::array<ResumMethod, 5> kAllMethods = {
    ResumMethod::T0, ResumMethod::T02, ResumMethod::T024, ResumMethod::Pade11, ResumMethod::Pade21};

/// Short token used on the command line and in CSV headers ("T0", "T02", ...).
std::string_view method_token(ResumMethod m);
/// Human-readable column label ("T0+T2", "[1/1]", ...).
std::string_view method_label(ResumMethod m);
std::optional<ResumMethod> parse_method(std::string_view token);

bool is_pade(ResumMethod m);

/// tau0, tau0 + tau2 or tau0 + tau2 + tau4 for order 0, 2, 4.
double partial_sum(const TauPoint& p, int order);

// The Pade evaluators return std::nullopt at a pole of the approximant (zero
// denominator with nonzero numerator). A vanishing numerator and denominator
// is a removable singularity and yields the corresponding partial sum.

/// tau0 + tau2^2 / (tau2 - tau4).
std::optional<double> pade11(const TauPoint& p);
/// tau0 + tau2 + tau4^2 / (tau4 - tau6).
std::optional<double> pade21(const TauPoint& p);
/// The [2/1] approximant as a function of the expansion variable x.
std::optional<double> pade21_of_x(const TauPoint& p, double x);

std::optional<double> resummed(const TauPoint& p, ResumMethod m);

/// Denominator whose sign changes mark poles (tau2 - tau4 or tau4 - tau6).
/// Zero for partial sums.
double pole_denominator(const TauPoint& p, ResumMethod m);

double percent_error(double T, double T_ref);

struct KineticReport {
  ResumMethod method = ResumMethod::T0;
  double T = 0.0;
  double T_ref = 0.0;
  double percent_error = 0.0;
  std::vector<double> poles;
};

struct GridOptions {
  /// 4 pi r^2 (tau0 + tau2 + |tau4|) at r_max stays below this (hartree/bohr).
  double tail_tol = 1e-12;
  double r_min = 1e-5;
  double r_switch = 1.0;
  std::size_t n_log = 80;
  double step = 0.25;
  /// Overrides the tail search when positive.
  double r_max = 0.0;
};

/// Radial grid covering the support of the density for every method.
RadialGrid kinetic_grid(const DensityModel& dm, const GridOptions& opt = {});

struct IntegrationOptions {
  QuadOptions quad{};
  /// Grid intervals are split this many times when scanning for poles.
  std::size_t pole_search_refinement = 16;
};

/// Pointwise resummed kinetic-energy density at r (zero in vacuum, NaN at an exact pole).
double resummed_density(const DensityModel& dm, ResumMethod m, double r);

/// 4 pi \int r^2 tau_m dr; principal value across poles of the Pade methods.
KineticReport integrate_method(const DensityModel& dm, ResumMethod m, const RadialGrid& grid,
                               double T_ref, const IntegrationOptions& opt = {});

/// Least-squares slope of ln|tau^[1/1] - tau0| against ln rho over radii in
/// [r_lo, r_hi]; a diagnostic of how fast the [1/1] correction decays.
double pade11_tail_exponent(const DensityModel& dm, double r_lo, double r_hi, std::size_t samples = 64);

}  // namespace gradpade
