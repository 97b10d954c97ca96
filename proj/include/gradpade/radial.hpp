#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gradpade/error.hpp"
#include "gradpade/jet.hpp"
#include "gradpade/kernels.hpp"

namespace gradpade {

/// A scalar function of the radius. Must be safe to call concurrently.
using ScalarField = std::function<double(double)>;

/// rho and its first four radial derivatives at one radius (atomic units).
struct DensityDerivatives {
  double rho = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;

  static DensityDerivatives from_jet(const Jet& j) {
    return {j.derivative(0), j.derivative(1), j.derivative(2), j.derivative(3), j.derivative(4)};
  }

  DensityDerivatives scaled(double g) const { return {g * rho, g * d1, g * d2, g * d3, g * d4}; }

  bool finite() const;
};

enum class DensityKind { analytic, tabulated };

/// A spherically symmetric electron density with derivatives up to fourth order.
/// Implementations are immutable and may be evaluated from several threads.
class DensityModel {
 public:
  virtual ~DensityModel() = default;

  virtual DensityDerivatives eval(double r) const = 0;
  virtual double electron_count() const = 0;
  virtual DensityKind kind() const = 0;
  virtual std::string name() const = 0;

  /// Radius beyond which the model is identically zero (infinity if unbounded).
  virtual double support_radius() const;
};

using DensityPtr = std::shared_ptr<const DensityModel>;

/// Density given by a closed-form expression written against Jet arithmetic.
class AnalyticDensity final : public DensityModel {
 public:
  using Expression = std::function<Jet(const Jet&)>;

  AnalyticDensity(std::string name, Expression rho, double electron_count);

  DensityDerivatives eval(double r) const override;
  double electron_count() const override { return electron_count_; }
  DensityKind kind() const override { return DensityKind::analytic; }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  Expression rho_;
  double electron_count_;
};

/// Strictly increasing radial nodes starting at r >= 0; the last node is r_max.
class RadialGrid {
 public:
  explicit RadialGrid(std::vector<double> nodes);

  /// n + 1 evenly spaced nodes on [0, r_max].
  static RadialGrid uniform(double r_max, std::size_t n);

  /// 0, then geometric nodes from r_min up to r_switch, then spacing
  /// `step` up to r_max.
  static RadialGrid log_linear(double r_min, double r_switch, double r_max, std::size_t n_log,
                               double step);

  /// Each interval split into `factor` equal parts.
  RadialGrid refined(std::size_t factor) const;

  std::span<const double> nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  double r_min() const { return nodes_.front(); }
  double r_max() const { return nodes_.back(); }

 private:
  std::vector<double> nodes_;
};

struct QuadOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  std::size_t max_panels = 200000;
  Execution exec = Execution::parallel;
};

/// Adaptive Gauss-Kronrod (7/15) integral of f over [breaks.front(), breaks.back()],
/// starting from the panels delimited by `breaks`.
double integrate_adaptive(const ScalarField& f, std::span<const double> breaks,
                          const QuadOptions& opt = {});

/// 4 pi \int_0^{r_max} r^2 f(r) dr over the grid's span.
double integrate_radial(const ScalarField& f, const RadialGrid& grid, const QuadOptions& opt = {});

/// Simple roots of D located by sign changes between adjacent positive nodes,
/// bisected to machine precision. Sorted ascending.
std::vector<double> find_poles(const ScalarField& D, const RadialGrid& grid,
                               Execution exec = Execution::parallel);

struct PoleWindow {
  double pole;
  double half_width;
  double residue;
};

struct PrincipalValue {
  double value;
  std::vector<PoleWindow> windows;
};

/// Residue lim (r - pole) g(r) by Richardson extrapolation of symmetric samples.
double estimate_residue(const ScalarField& g, double pole, double half_width);

/// Cauchy principal value of 4 pi \int r^2 f dr across simple poles of f.
/// Near each pole the singular part A/(r - pole) is subtracted over a symmetric
/// window, whose principal value vanishes.
PrincipalValue principal_value_detail(const ScalarField& f, std::span<const double> poles,
                                      const RadialGrid& grid, const QuadOptions& opt = {});

double principal_value_integrate(const ScalarField& f, std::span<const double> poles,
                                 const RadialGrid& grid, const QuadOptions& opt = {});

/// Outermost radius at which `weight` still exceeds `tol`, scanned outward
/// geometrically from `r_start`; the scan stops once the weight stays below tol
/// over a factor-of-two span.
double tail_radius(const ScalarField& weight, double tol, double r_start = 0.5,
                   double r_limit = 1000.0);

}  // namespace gradpade
