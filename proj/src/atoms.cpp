#include "gradpade/atoms.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

namespace gradpade::atoms {

namespace {

using nlohmann::json;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// \int_0^inf r^k exp(-alpha r) dr
double radial_moment(int k, double alpha) { return factorial(k) / std::pow(alpha, k + 1); }

// exp(-zeta r) r^p as a Jet around r.
Jet sto_jet(const STOPrimitive& p, double r) {
  Jet e;
  const double base = std::exp(-p.zeta * r);
  double term = base;
  for (int k = 0; k <= Jet::order; ++k) {
    e[k] = term;
    term *= -p.zeta / (k + 1);
  }
  return p.normalization() * ipow(Jet::variable(r), p.n - 1) * e;
}

Jet orbital_jet(const RHFOrbital& orb, double r) {
  Jet R(0.0);
  for (std::size_t k = 0; k < orb.primitives.size(); ++k) R += orb.coeffs[k] * sto_jet(orb.primitives[k], r);
  return R;
}

template <class T>
T field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw SchemaError(where + "." + key + ": " + e.what());
  }
}

double overlap_between(const RHFOrbital& a, const RHFOrbital& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.primitives.size(); ++i)
    for (std::size_t j = 0; j < b.primitives.size(); ++j)
      s += a.coeffs[i] * b.coeffs[j] * sto_overlap(a.primitives[i], b.primitives[j]);
  return s;
}

class AtomDensity final : public DensityModel {
 public:
  explicit AtomDensity(STOBasisSet basis) : basis_(std::move(basis)) {}

  DensityDerivatives eval(double r) const override { return density_derivs(basis_, r); }
  double electron_count() const override { return basis_.electron_count; }
  DensityKind kind() const override { return DensityKind::analytic; }
  std::string name() const override { return basis_.element; }

 private:
  STOBasisSet basis_;
};

}  // namespace

double STOPrimitive::normalization() const {
  return std::pow(2.0 * zeta, n + 0.5) / std::sqrt(factorial(2 * n));
}

std::vector<STOPrimitive> STOBasisSet::primitives_for_l(int l) const {
  for (const RHFOrbital& o : orbitals)
    if (o.l == l) return o.primitives;
  return {};
}

double sto_overlap(const STOPrimitive& a, const STOPrimitive& b) {
  return a.normalization() * b.normalization() * radial_moment(a.n + b.n, a.zeta + b.zeta);
}

double sto_kinetic(const STOPrimitive& a, const STOPrimitive& b, int l) {
  // chi_b'' + 2 chi_b'/r - l(l+1) chi_b/r^2 for chi_b = r^p e^{-z r}:
  // [p(p+1) - l(l+1)] r^(p-2) - 2 z (p+1) r^(p-1) + z^2 r^p.
  const int pa = a.n - 1;
  const int pb = b.n - 1;
  const double alpha = a.zeta + b.zeta;
  const double zb = b.zeta;
  const double centrifugal = pb * (pb + 1.0) - l * (l + 1.0);
  double lap = -2.0 * zb * (pb + 1.0) * radial_moment(pa + pb + 1, alpha) + zb * zb * radial_moment(pa + pb + 2, alpha);
  if (centrifugal != 0.0) lap += centrifugal * radial_moment(pa + pb, alpha);
  return -0.5 * a.normalization() * b.normalization() * lap;
}

double orbital_norm(const RHFOrbital& orb) { return overlap_between(orb, orb); }

STOBasisSet parse_sto_text(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(source + ": invalid JSON: " + e.what());
  }
  STOBasisSet basis;
  basis.element = field<std::string>(doc, "element", source);
  basis.electron_count = field<double>(doc, "electron_count", source);
  if (doc.contains("kinetic_energy")) basis.published_kinetic = field<double>(doc, "kinetic_energy", source);
  if (!(basis.electron_count > 0.0)) throw SchemaError(source + ".electron_count: must be positive");
  const auto shells = field<std::vector<json>>(doc, "shells", source);
  if (shells.empty()) throw SchemaError(source + ".shells: no orbitals");

  double occupied = 0.0;
  for (std::size_t i = 0; i < shells.size(); ++i) {
    const std::string where = source + ".shells[" + std::to_string(i) + "]";
    RHFOrbital orb;
    orb.l = field<int>(shells[i], "l", where);
    orb.occ = field<double>(shells[i], "occ", where);
    orb.label = shells[i].contains("label") ? field<std::string>(shells[i], "label", where) : where;
    if (orb.l < 0) throw SchemaError(where + ".l: must be non-negative");
    if (!(orb.occ > 0.0 && orb.occ <= 2.0 * (2 * orb.l + 1)))
      throw SchemaError(where + ".occ: must lie in (0, 2(2l+1)]");
    const auto prims = field<std::vector<json>>(shells[i], "primitives", where);
    orb.coeffs = field<std::vector<double>>(shells[i], "coeffs", where);
    if (prims.empty()) throw SchemaError(where + ".primitives: empty");
    if (prims.size() != orb.coeffs.size())
      throw SchemaError(where + ": " + std::to_string(prims.size()) + " primitives but " +
                        std::to_string(orb.coeffs.size()) + " coefficients");
    for (std::size_t k = 0; k < prims.size(); ++k) {
      const std::string pw = where + ".primitives[" + std::to_string(k) + "]";
      STOPrimitive p{field<int>(prims[k], "n", pw), field<double>(prims[k], "zeta", pw)};
      if (p.n < orb.l + 1) throw SchemaError(pw + ".n: must be at least l + 1");
      if (!(p.zeta > 0.0)) throw SchemaError(pw + ".zeta: must be positive");
      orb.primitives.push_back(p);
    }
    const double norm = orbital_norm(orb);
    if (std::abs(norm - 1.0) > 1e-6) {
      std::ostringstream msg;
      msg.precision(10);
      msg << where << " (" << orb.label << "): orbital norm " << norm << " differs from 1";
      throw NormalizationError(msg.str());
    }
    for (double& c : orb.coeffs) c /= std::sqrt(norm);
    occupied += orb.occ;
    basis.orbitals.push_back(std::move(orb));
  }
  if (std::abs(occupied - basis.electron_count) > 1e-9) {
    std::ostringstream msg;
    msg << source << ": electron count mismatch: occupations sum to " << occupied << " but "
        << basis.element << " declares " << basis.electron_count;
    throw ElectronCountError(msg.str());
  }
  for (std::size_t i = 0; i < basis.orbitals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const RHFOrbital& a = basis.orbitals[i];
      const RHFOrbital& b = basis.orbitals[j];
      if (a.l != b.l) continue;
      const double s = overlap_between(a, b);
      if (std::abs(s) > 1e-5) {
        std::ostringstream msg;
        msg << source << ": orbitals " << b.label << " and " << a.label << " overlap by " << s;
        throw NormalizationError(msg.str());
      }
    }
  return basis;
}

STOBasisSet parse_sto(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open basis file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sto_text(buffer.str(), path.string());
}

DensityDerivatives density_derivs(const STOBasisSet& basis, double r) {
  if (r < 0.0) throw DomainError("density evaluated at negative radius");
  Jet rho(0.0);
  for (const RHFOrbital& orb : basis.orbitals) {
    const Jet R = orbital_jet(orb, r);
    rho += orb.occ * (R * R);
  }
  return DensityDerivatives::from_jet(rho / (4.0 * std::numbers::pi));
}

DensityPtr atom_density(const STOBasisSet& basis) { return std::make_shared<AtomDensity>(basis); }

double hf_kinetic(const STOBasisSet& basis) {
  double total = 0.0;
  for (const RHFOrbital& orb : basis.orbitals) {
    double t = 0.0;
    for (std::size_t i = 0; i < orb.primitives.size(); ++i)
      for (std::size_t j = 0; j < orb.primitives.size(); ++j)
        t += orb.coeffs[i] * orb.coeffs[j] * sto_kinetic(orb.primitives[i], orb.primitives[j], orb.l);
    total += orb.occ * t;
  }
  return total;
}

double hf_kinetic_quadrature(const STOBasisSet& basis) {
  double zeta_min = INFINITY;
  for (const RHFOrbital& orb : basis.orbitals)
    for (const STOPrimitive& p : orb.primitives) zeta_min = std::min(zeta_min, p.zeta);
  const RadialGrid grid = RadialGrid::log_linear(1e-6, 1.0, 90.0 / zeta_min, 80, 0.5);
  const QuadOptions opt{.rel_tol = 1e-13, .abs_tol = 1e-15};
  double total = 0.0;
  for (const RHFOrbital& orb : basis.orbitals) {
    const double ll = orb.l * (orb.l + 1.0);
    const ScalarField integrand = [&orb, ll](double r) {
      const Jet R = orbital_jet(orb, r);
      const double v = R.derivative(0);
      const double lap = R.derivative(2) + 2.0 * R.derivative(1) / r - ll * v / (r * r);
      return -0.5 * v * lap * r * r;
    };
    total += orb.occ * integrate_adaptive(integrand, grid.nodes(), opt);
  }
  return total;
}

double cusp_ratio(const STOBasisSet& basis) {
  const DensityDerivatives d = density_derivs(basis, 0.0);
  return -d.d1 / (2.0 * d.rho);
}

}  // namespace gradpade::atoms
