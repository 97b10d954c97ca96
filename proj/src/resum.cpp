#include "gradpade/resum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gradpade/error.hpp"

namespace gradpade {

std::string_view method_token(ResumMethod m) {
  switch (m) {
    case ResumMethod::T0: return "T0";
    case ResumMethod::T02: return "T02";
    case ResumMethod::T024: return "T024";
    case ResumMethod::Pade11: return "Pade11";
    case ResumMethod::Pade21: return "Pade21";
  }
  return "?";
}

std::string_view method_label(ResumMethod m) {
  switch (m) {
    case ResumMethod::T0: return "T0";
    case ResumMethod::T02: return "T0+T2";
    case ResumMethod::T024: return "T0+T2+T4";
    case ResumMethod::Pade11: return "[1/1]";
    case ResumMethod::Pade21: return "[2/1]";
  }
  return "?";
}

std::optional<ResumMethod> parse_method(std::string_view token) {
  for (ResumMethod m : kAllMethods)
    if (token == method_token(m) || token == method_label(m)) return m;
  return std::nullopt;
}

bool is_pade(ResumMethod m) { return m == ResumMethod::Pade11 || m == ResumMethod::Pade21; }

double partial_sum(const TauPoint& p, int order) {
  switch (order) {
    case 0: return p.tau0;
    case 2: return p.tau0 + p.tau2;
    case 4: return p.tau0 + p.tau2 + p.tau4;
    default: throw DomainError("partial sum order must be 0, 2 or 4");
  }
}

std::optional<double> pade11(const TauPoint& p) {
  const double den = p.tau2 - p.tau4;
  if (den == 0.0) {
    if (p.tau2 == 0.0) return p.tau0;
    return std::nullopt;
  }
  return p.tau0 + p.tau2 * p.tau2 / den;
}

std::optional<double> pade21(const TauPoint& p) { return pade21_of_x(p, 1.0); }

std::optional<double> pade21_of_x(const TauPoint& p, double x) {
  const double den = p.tau4 - p.tau6 * x;
  const double base = p.tau0 + p.tau2 * x;
  // tau4^2 x^2 / tau4 can differ from tau4 x^2 in the last bit.
  if (p.tau6 == 0.0) return base + p.tau4 * x * x;
  if (den == 0.0) {
    if (p.tau4 == 0.0 || x == 0.0) return base;
    return std::nullopt;
  }
  return base + p.tau4 * p.tau4 * x * x / den;
}

std::optional<double> resummed(const TauPoint& p, ResumMethod m) {
  switch (m) {
    case ResumMethod::T0: return partial_sum(p, 0);
    case ResumMethod::T02: return partial_sum(p, 2);
    case ResumMethod::T024: return partial_sum(p, 4);
    case ResumMethod::Pade11: return pade11(p);
    case ResumMethod::Pade21: return pade21(p);
  }
  return std::nullopt;
}

double pole_denominator(const TauPoint& p, ResumMethod m) {
  switch (m) {
    case ResumMethod::Pade11: return p.tau2 - p.tau4;
    case ResumMethod::Pade21: return p.tau4 - p.tau6;
    default: return 0.0;
  }
}

double percent_error(double T, double T_ref) {
  if (T_ref == 0.0) throw DomainError("percent error needs a nonzero reference");
  return 100.0 * (T - T_ref) / T_ref;
}

RadialGrid kinetic_grid(const DensityModel& dm, const GridOptions& opt) {
  double r_max = opt.r_max;
  if (!(r_max > 0.0)) {
    const ScalarField weight = [&dm](double r) {
      const DensityDerivatives d = dm.eval(r);
      if (d.rho <= 0.0) return 0.0;
      const TauPoint p = tau_point(d, r);
      return 4.0 * std::numbers::pi * r * r * (p.tau0 + p.tau2 + std::abs(p.tau4));
    };
    r_max = tail_radius(weight, opt.tail_tol);
  }
  r_max = std::min(r_max, dm.support_radius());
  return RadialGrid::log_linear(opt.r_min, opt.r_switch, r_max, opt.n_log, opt.step);
}

double resummed_density(const DensityModel& dm, ResumMethod m, double r) {
  const DensityDerivatives d = dm.eval(r);
  if (d.rho == 0.0) return 0.0;
  const auto v = resummed(tau_point(d, r), m);
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

KineticReport integrate_method(const DensityModel& dm, ResumMethod m, const RadialGrid& grid,
                               double T_ref, const IntegrationOptions& opt) {
  KineticReport report;
  report.method = m;
  report.T_ref = T_ref;
  const ScalarField f = [&dm, m](double r) { return resummed_density(dm, m, r); };
  if (is_pade(m)) {
    const ScalarField D = [&dm, m](double r) {
      const DensityDerivatives d = dm.eval(r);
      if (d.rho == 0.0) return 0.0;
      return pole_denominator(tau_point(d, r), m);
    };
    report.poles = find_poles(D, grid.refined(opt.pole_search_refinement), opt.quad.exec);
    report.T = principal_value_integrate(f, report.poles, grid, opt.quad);
  } else {
    report.T = integrate_radial(f, grid, opt.quad);
  }
  report.percent_error = percent_error(report.T, T_ref);
  return report;
}

double pade11_tail_exponent(const DensityModel& dm, double r_lo, double r_hi, std::size_t samples) {
  if (!(r_hi > r_lo && r_lo > 0.0) || samples < 2) throw DomainError("invalid tail range");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    const DensityDerivatives d = dm.eval(r);
    if (d.rho <= 0.0) continue;
    const TauPoint p = tau_point(d, r);
    const auto v = pade11(p);
    if (!v || *v == p.tau0) continue;
    const double x = std::log(d.rho);
    const double y = std::log(std::abs(*v - p.tau0));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw NumericalError("not enough tail samples for a slope");
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace gradpade
