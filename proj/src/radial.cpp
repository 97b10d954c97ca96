#include "gradpade/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gradpade/error.hpp"

namespace gradpade {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double sign_of(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

// Shrinks a sign-change bracket until no representable midpoint remains.
double bisect(const ScalarField& D, double a, double fa, double b) {
  for (int it = 0; it < 200; ++it) {
    const double m = a + 0.5 * (b - a);
    if (m <= a || m >= b) break;
    const double fm = D(m);
    if (fm == 0.0) return m;
    if (sign_of(fm) == sign_of(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return a + 0.5 * (b - a);
}

std::vector<double> breaks_between(const RadialGrid& grid, double lo, double hi) {
  std::vector<double> out{lo};
  for (double r : grid.nodes())
    if (r > lo && r < hi) out.push_back(r);
  out.push_back(hi);
  return out;
}

}  // namespace

bool DensityDerivatives::finite() const {
  return std::isfinite(rho) && std::isfinite(d1) && std::isfinite(d2) && std::isfinite(d3) &&
         std::isfinite(d4);
}

double DensityModel::support_radius() const { return std::numeric_limits<double>::infinity(); }

AnalyticDensity::AnalyticDensity(std::string name, Expression rho, double electron_count)
    : name_(std::move(name)), rho_(std::move(rho)), electron_count_(electron_count) {
  if (!(electron_count_ > 0.0)) throw DomainError("electron count must be positive");
}

DensityDerivatives AnalyticDensity::eval(double r) const {
  if (r < 0.0) throw DomainError("density evaluated at negative radius");
  return DensityDerivatives::from_jet(rho_(Jet::variable(r)));
}

RadialGrid::RadialGrid(std::vector<double> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw DomainError("radial grid needs at least two nodes");
  if (!(nodes_.front() >= 0.0)) throw DomainError("radial grid must start at r >= 0");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i] > nodes_[i - 1])) throw DomainError("radial grid nodes must be strictly increasing");
  if (!std::isfinite(nodes_.back())) throw DomainError("radial grid must be finite");
}

RadialGrid RadialGrid::uniform(double r_max, std::size_t n) {
  if (n < 1 || !(r_max > 0.0)) throw DomainError("uniform grid needs r_max > 0 and n >= 1");
  std::vector<double> nodes(n + 1);
  for (std::size_t i = 0; i <= n; ++i) nodes[i] = r_max * static_cast<double>(i) / static_cast<double>(n);
  nodes.back() = r_max;
  return RadialGrid(std::move(nodes));
}

RadialGrid RadialGrid::log_linear(double r_min, double r_switch, double r_max, std::size_t n_log,
                                  double step) {
  if (!(r_min > 0.0 && r_switch > r_min && step > 0.0 && n_log >= 2))
    throw DomainError("invalid log-linear grid parameters");
  std::vector<double> nodes{0.0};
  const double top = std::min(r_switch, r_max);
  const double ratio = std::log(r_switch / r_min) / static_cast<double>(n_log - 1);
  for (std::size_t i = 0; i < n_log; ++i) {
    const double r = r_min * std::exp(ratio * static_cast<double>(i));
    if (r >= top) break;
    nodes.push_back(r);
  }
  if (r_max > top) {
    const auto n_lin = static_cast<std::size_t>(std::ceil((r_max - top) / step));
    for (std::size_t i = 0; i < n_lin; ++i) nodes.push_back(top + (r_max - top) * i / n_lin);
  }
  nodes.push_back(r_max);
  return RadialGrid(std::move(nodes));
}

RadialGrid RadialGrid::refined(std::size_t factor) const {
  if (factor <= 1) return *this;
  std::vector<double> out;
  out.reserve((nodes_.size() - 1) * factor + 1);
  for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
    const double a = nodes_[i];
    const double h = (nodes_[i + 1] - a) / static_cast<double>(factor);
    for (std::size_t k = 0; k < factor; ++k) out.push_back(a + h * static_cast<double>(k));
  }
  out.push_back(nodes_.back());
  return RadialGrid(std::move(out));
}

double integrate_adaptive(const ScalarField& f, std::span<const double> breaks,
                          const QuadOptions& opt) {
  if (breaks.size() < 2) throw DomainError("integration needs at least two breakpoints");
  std::vector<Panel> panels;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i]) panels.push_back({breaks[i], breaks[i + 1]});
  if (panels.empty()) return 0.0;
  evaluate_panels(f, panels, opt.exec);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (;;) {
    double total = 0.0;
    double error = 0.0;
    for (const Panel& p : panels) {
      total += p.value;
      error += p.error;
    }
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
    if (error <= tol) return total;

    const double share = tol / static_cast<double>(panels.size());
    std::vector<Panel> next;
    std::vector<Panel> fresh;
    std::vector<std::size_t> fresh_slot;
    next.reserve(panels.size() * 2);
    for (const Panel& p : panels) {
      const double width = p.b - p.a;
      const bool splittable = width > 64.0 * eps * std::max(std::abs(p.a), std::abs(p.b));
      if (p.error > share && splittable) {
        const double m = p.a + 0.5 * width;
        fresh_slot.push_back(next.size());
        next.push_back({p.a, m});
        fresh.push_back({p.a, m});
        fresh_slot.push_back(next.size());
        next.push_back({m, p.b});
        fresh.push_back({m, p.b});
      } else {
        next.push_back(p);
      }
    }
    if (fresh.empty())
      throw QuadratureError("adaptive quadrature cannot subdivide further", total, error);
    if (next.size() > opt.max_panels)
      throw QuadratureError("adaptive quadrature exceeded its panel budget", total, error);
    evaluate_panels(f, fresh, opt.exec);
    for (std::size_t k = 0; k < fresh.size(); ++k) next[fresh_slot[k]] = fresh[k];
    panels = std::move(next);
  }
}

double integrate_radial(const ScalarField& f, const RadialGrid& grid, const QuadOptions& opt) {
  const ScalarField weighted = [&f](double r) { return kFourPi * r * r * f(r); };
  return integrate_adaptive(weighted, grid.nodes(), opt);
}

std::vector<double> find_poles(const ScalarField& D, const RadialGrid& grid, Execution exec) {
  std::vector<double> radii;
  for (double r : grid.nodes())
    if (r > 0.0) radii.push_back(r);
  const std::vector<double> values = evaluate_field(D, radii, exec);

  std::vector<double> poles;
  std::size_t last = radii.size();  // index of the last nonzero sample
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (values[i] == 0.0 || !std::isfinite(values[i])) continue;
    if (last < radii.size() && sign_of(values[i]) != sign_of(values[last])) {
      if (last + 1 == i) {
        poles.push_back(bisect(D, radii[last], values[last], radii[i]));
      } else {
        for (std::size_t k = last + 1; k < i; ++k)
          if (values[k] == 0.0) {
            poles.push_back(radii[k]);
            break;
          }
      }
    }
    last = i;
  }
  return poles;
}

double estimate_residue(const ScalarField& g, double pole, double half_width) {
  constexpr int kLevels = 10;
  double table[kLevels][kLevels];
  double scale = 0.0;
  double h = 0.5 * half_width;
  for (int k = 0; k < kLevels; ++k, h *= 0.5) {
    const double right = pole + h;
    const double left = pole - h;
    const double m = 0.5 * ((right - pole) * g(right) + (left - pole) * g(left));
    if (!std::isfinite(m)) throw NonFiniteError("residue sample is not finite", pole);
    scale = std::max(scale, std::abs(m));
    table[k][0] = m;
    double factor = 1.0;
    for (int j = 1; j <= k; ++j) {
      factor *= 4.0;
      table[k][j] = table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
    }
    if (k >= 2) {
      const double change = std::abs(table[k][k] - table[k - 1][k - 1]);
      if (change <= 1e-10 * std::max(std::abs(table[k][k]), 1e-3 * scale)) return table[k][k];
    }
  }
  std::ostringstream msg;
  msg.precision(17);
  msg << "residue estimate did not converge at pole r = " << pole;
  throw NumericalError(msg.str());
}

PrincipalValue principal_value_detail(const ScalarField& f, std::span<const double> poles_in,
                                      const RadialGrid& grid, const QuadOptions& opt) {
  std::vector<double> poles(poles_in.begin(), poles_in.end());
  std::sort(poles.begin(), poles.end());
  const double r0 = grid.r_min();
  const double r_max = grid.r_max();
  const ScalarField g = [&f](double r) { return kFourPi * r * r * f(r); };

  PrincipalValue out{0.0, {}};
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const double p = poles[i];
    if (!(p > r0 && p < r_max)) throw DomainError("pole must lie strictly inside the grid");
    const double below = i == 0 ? p - r0 : p - poles[i - 1];
    const double above = i + 1 == poles.size() ? r_max - p : poles[i + 1] - p;
    const double delta = std::min({0.05 * p, 0.5 * below, 0.5 * above});
    if (!(delta > 1e-12 * r_max)) {
      std::ostringstream msg;
      msg << "poles too close to resolve near r = " << p;
      throw NumericalError(msg.str());
    }
    out.windows.push_back({p, delta, estimate_residue(g, p, delta)});
  }

  double lo = r0;
  for (const PoleWindow& w : out.windows) {
    const double hi = w.pole - w.half_width;
    if (hi > lo) {
      const auto breaks = breaks_between(grid, lo, hi);
      out.value += integrate_adaptive(g, breaks, opt);
    }
    const double p = w.pole;
    const double a = w.residue;
    const ScalarField regular = [&g, p, a](double r) { return g(r) - a / (r - p); };
    const double window[3] = {p - w.half_width, p, p + w.half_width};
    out.value += integrate_adaptive(regular, window, opt);
    lo = p + w.half_width;
  }
  if (r_max > lo) {
    const auto breaks = breaks_between(grid, lo, r_max);
    out.value += integrate_adaptive(g, breaks, opt);
  }
  return out;
}

double principal_value_integrate(const ScalarField& f, std::span<const double> poles,
                                 const RadialGrid& grid, const QuadOptions& opt) {
  return principal_value_detail(f, poles, grid, opt).value;
}

double tail_radius(const ScalarField& weight, double tol, double r_start, double r_limit) {
  double last_above = 0.0;
  for (double r = r_start; r <= r_limit; r *= 1.02) {
    const double w = weight(r);
    if (!std::isfinite(w) || std::abs(w) > tol) last_above = r;
    else if (last_above > 0.0 && r > 2.0 * last_above + 5.0) break;
  }
  if (last_above >= r_limit / 1.02) throw NumericalError("density tail does not decay within the radius limit");
  return last_above > 0.0 ? last_above * 1.02 : r_start;
}

}  // namespace gradpade
