#include "gradpade/hooke.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>

#include "gradpade/error.hpp"

namespace gradpade::hooke {

namespace {

constexpr double kPi = std::numbers::pi;

// erf(a r)/r, even in r; Maclaurin series near the origin.
Jet erf_over_r(const Jet& r, double a) {
  if (r.value() < 1.0) {
    const Jet z = (a * a) * (r * r);
    constexpr int kTerms = 22;
    Jet sum(0.0);
    double fact = 1.0;
    std::array<double, kTerms> coeff{};
    for (int n = 0; n < kTerms; ++n) {
      if (n > 0) fact *= n;
      coeff[n] = (n % 2 == 0 ? 1.0 : -1.0) / (fact * (2 * n + 1));
    }
    for (int n = kTerms - 1; n >= 0; --n) sum = sum * z + Jet(coeff[n]);
    return (2.0 * a / std::sqrt(kPi)) * sum;
  }
  return erf(a * r) / r;
}

// sinh(x)/x as a power series in x^2, used for |x| < 1.
Jet sinhc_series(const Jet& x) {
  const Jet z = x * x;
  Jet sum(0.0);
  constexpr int kTerms = 12;
  std::array<double, kTerms> coeff{};
  double fact = 1.0;
  for (int n = 0; n < kTerms; ++n) {
    if (n > 0) fact *= (2.0 * n) * (2.0 * n + 1.0);
    coeff[n] = 1.0 / fact;
  }
  for (int n = kTerms - 1; n >= 0; --n) sum = sum * z + Jet(coeff[n]);
  return sum;
}

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule gauss_legendre(int n) {
  GaussRule g{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    g.x[i] = x;
    g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

// Chebyshev-Lobatto points x_j = cos(pi j / N) and the differentiation matrix.
Eigen::MatrixXd chebyshev_matrix(int N, Eigen::VectorXd& x) {
  x.resize(N + 1);
  for (int j = 0; j <= N; ++j) x[j] = std::cos(kPi * j / N);
  Eigen::VectorXd c(N + 1);
  for (int j = 0; j <= N; ++j) c[j] = ((j == 0 || j == N) ? 2.0 : 1.0) * (j % 2 == 0 ? 1.0 : -1.0);
  Eigen::MatrixXd D(N + 1, N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) D(i, j) = i == j ? 0.0 : (c[i] / c[j]) / (x[i] - x[j]);
  for (int i = 0; i <= N; ++i) D(i, i) = -D.row(i).sum();
  return D;
}

// Clenshaw-Curtis weights on [-1, 1] for the Lobatto points.
Eigen::VectorXd clenshaw_curtis(int N) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(N + 1);
  Eigen::VectorXd v = Eigen::VectorXd::Ones(N - 1);
  auto theta = [N](int j) { return kPi * j / N; };
  if (N % 2 == 0) {
    w[0] = w[N] = 1.0 / (N * N - 1.0);
    for (int k = 1; k < N / 2; ++k)
      for (int j = 1; j < N; ++j) v[j - 1] -= 2.0 * std::cos(2.0 * k * theta(j)) / (4.0 * k * k - 1.0);
    for (int j = 1; j < N; ++j) v[j - 1] -= std::cos(N * theta(j)) / (N * N - 1.0);
  } else {
    w[0] = w[N] = 1.0 / (N * N);
    for (int k = 1; k <= (N - 1) / 2; ++k)
      for (int j = 1; j < N; ++j) v[j - 1] -= 2.0 * std::cos(2.0 * k * theta(j)) / (4.0 * k * k - 1.0);
  }
  for (int j = 1; j < N; ++j) w[j] = 2.0 * v[j - 1] / N;
  return w;
}

// Barycentric interpolation on Chebyshev-Lobatto points.
double barycentric(const Eigen::VectorXd& x, const Eigen::VectorXd& f, double t) {
  const int N = static_cast<int>(x.size()) - 1;
  double num = 0.0;
  double den = 0.0;
  for (int j = 0; j <= N; ++j) {
    const double diff = t - x[j];
    if (diff == 0.0) return f[j];
    double wj = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == N) wj *= 0.5;
    num += wj * f[j] / diff;
    den += wj / diff;
  }
  return num / den;
}

// rho(r) = 2 (2w/pi)^(3/2) \int u(s)^2 exp(-2w r^2 - w s^2/2) sinh(2wrs)/(2wrs) ds.
class ReconstructedDensity final : public DensityModel {
 public:
  ReconstructedDensity(double omega, std::vector<double> s, std::vector<double> weight)
      : omega_(omega), s_(std::move(s)), weight_(std::move(weight)) {
    prefactor_ = 2.0 * std::pow(2.0 * omega / kPi, 1.5);
  }

  DensityDerivatives eval(double r) const override {
    if (r < 0.0) throw DomainError("density evaluated at negative radius");
    const Jet rj = Jet::variable(r);
    const Jet r2 = rj * rj;
    Jet sum(0.0);
    const double w = omega_;
    for (std::size_t k = 0; k < s_.size(); ++k) {
      const double s = s_[k];
      const double x = 2.0 * w * r * s;
      Jet kernel;
      if (x < 1.0) {
        kernel = exp(-2.0 * w * r2 - Jet(0.5 * w * s * s)) * sinhc_series((2.0 * w * s) * rj);
      } else {
        const Jet a = rj - Jet(0.5 * s);
        const Jet b = rj + Jet(0.5 * s);
        kernel = (exp(-2.0 * w * (a * a)) - exp(-2.0 * w * (b * b))) / ((4.0 * w * s) * rj);
      }
      sum += weight_[k] * kernel;
    }
    return DensityDerivatives::from_jet(prefactor_ * sum);
  }

  double electron_count() const override { return 2.0; }
  DensityKind kind() const override { return DensityKind::analytic; }
  std::string name() const override {
    std::ostringstream os;
    os << "hooke(omega=" << omega_ << ")";
    return os.str();
  }

 private:
  double omega_;
  double prefactor_ = 0.0;
  std::vector<double> s_;
  std::vector<double> weight_;
};

}  // namespace

double omega_half_rescale() { return 8.0 * kPi; }

Jet omega_half_unscaled(const Jet& r) {
  const double n0sq = 1.0 / (4.0 * std::pow(kPi, 2.5) * (8.0 + 5.0 * std::sqrt(kPi)));
  const double a = 1.0 / std::numbers::sqrt2;
  const Jet gauss = exp(-0.5 * (r * r));
  const Jet bracket = Jet(1.75) + 0.25 * (r * r) + r * erf(a * r) + erf_over_r(r, a);
  return n0sq * gauss * (std::sqrt(0.5 * kPi) * bracket + gauss);
}

DensityDerivatives density_omega_half(double r) {
  if (r < 0.0) throw DomainError("density evaluated at negative radius");
  return DensityDerivatives::from_jet(omega_half_rescale() * omega_half_unscaled(Jet::variable(r)));
}

DensityPtr omega_half_density() {
  return std::make_shared<AnalyticDensity>(
      "hooke(omega=0.5, closed form)",
      [](const Jet& r) { return omega_half_rescale() * omega_half_unscaled(r); }, 2.0);
}

double von_weizsacker_energy(const DensityModel& density, const RadialGrid& grid, const QuadOptions& opt) {
  return integrate_radial(
      [&density](double r) {
        const DensityDerivatives d = density.eval(r);
        return d.rho > 0.0 ? d.d1 * d.d1 / (8.0 * d.rho) : 0.0;
      },
      grid, opt);
}

HookeSolution solve_general(const HookeParams& params, const SolverControls& controls) {
  const double w = params.omega;
  if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("omega must be positive");
  const int N = controls.collocation_order;
  if (N < 16) throw DomainError("collocation order too small");
  const double L = controls.s_max_factor / std::sqrt(w);
  const double lambda = params.interacting ? 1.0 : 0.0;

  // -u'' + (w^2/4) s^2 u + lambda u / s = eps u on (0, L), u(0) = u(L) = 0,
  // with s = L (1 - x) / 2 so that x_0 = 1 is the origin.
  Eigen::VectorXd x;
  const Eigen::MatrixXd D = chebyshev_matrix(N, x);
  const Eigen::MatrixXd Ds = (-2.0 / L) * D;
  const Eigen::MatrixXd D2s = Ds * Ds;
  Eigen::VectorXd s(N + 1);
  for (int j = 0; j <= N; ++j) s[j] = 0.5 * L * (1.0 - x[j]);

  const int m = N - 1;
  Eigen::MatrixXd A = -D2s.block(1, 1, m, m);
  for (int i = 0; i < m; ++i) {
    const double si = s[i + 1];
    A(i, i) += 0.25 * w * w * si * si + lambda / si;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(A);
  if (solver.info() != Eigen::Success) throw NumericalError("relative-motion eigensolver failed");
  const auto& evals = solver.eigenvalues();
  int best = -1;
  for (int i = 0; i < m; ++i) {
    if (std::abs(evals[i].imag()) > 1e-9 * std::abs(evals[i].real())) continue;
    if (best < 0 || evals[i].real() < evals[best].real()) best = i;
  }
  if (best < 0) throw NumericalError("no real relative-motion eigenvalue bracketed");
  const double eps = evals[best].real();

  Eigen::VectorXd u = Eigen::VectorXd::Zero(N + 1);
  u.segment(1, m) = solver.eigenvectors().col(best).real();
  const Eigen::VectorXd cc = 0.5 * L * clenshaw_curtis(N);
  const double norm = std::sqrt((cc.array() * u.array().square()).sum());
  u /= norm;
  if (u.segment(1, m).sum() < 0.0) u = -u;
  const double umax = u.cwiseAbs().maxCoeff();
  for (int j = 1; j < N; ++j)
    if (u[j] < -1e-6 * umax) throw NumericalError("relative-motion solution is not nodeless");

  const Eigen::VectorXd du = Ds * u;
  const double t_rel = (cc.array() * du.array().square()).sum();

  // Squared relative wavefunction on composite Gauss-Legendre panels.
  const GaussRule g = gauss_legendre(controls.gauss_points);
  std::vector<double> s_nodes;
  std::vector<double> weights;
  const double h = L / controls.s_panels;
  for (int p = 0; p < controls.s_panels; ++p) {
    for (int k = 0; k < controls.gauss_points; ++k) {
      const double sk = h * p + 0.5 * h * (g.x[k] + 1.0);
      const double xk = 1.0 - 2.0 * sk / L;
      const double uk = barycentric(x, u, xk);
      const double wk = 0.5 * h * g.w[k] * uk * uk;
      if (wk == 0.0) continue;
      s_nodes.push_back(sk);
      weights.push_back(wk);
    }
  }

  HookeSolution sol;
  sol.params = params;
  sol.density = std::make_shared<ReconstructedDensity>(w, std::move(s_nodes), std::move(weights));
  sol.relative_energy = eps;
  sol.E_total = 1.5 * w + eps;
  sol.T_interacting = 0.75 * w + t_rel;

  const RadialGrid grid = kinetic_grid(*sol.density);
  const double count = integrate_radial([&sol](double r) { return sol.density->eval(r).rho; }, grid);
  if (std::abs(count - 2.0) > 1e-6) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "reconstructed density integrates to " << count << " electrons";
    throw NumericalError(msg.str());
  }
  sol.T_exact = von_weizsacker_energy(*sol.density, grid);
  return sol;
}

double kinetic_exact(const HookeSolution& sol) { return sol.T_exact; }

}  // namespace gradpade::hooke
