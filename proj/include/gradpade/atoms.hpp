#pragma once

// Roothaan-Hartree-Fock atomic densities expanded in Slater-type orbitals.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gradpade/error.hpp"
#include "gradpade/radial.hpp"

namespace gradpade::atoms {

/// Raised when a basis file does not follow the JSON schema.
class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

/// Raised when an orbital is not normalized or orbitals of equal l overlap.
class NormalizationError : public DataError {
 public:
  using DataError::DataError;
};

/// Raised when occupations do not add up to the declared electron count.
class ElectronCountError : public DataError {
 public:
  using DataError::DataError;
};

/// Normalized radial STO N r^(n-1) exp(-zeta r), N = (2 zeta)^(n+1/2) / sqrt((2n)!).
struct STOPrimitive {
  int n = 1;
  double zeta = 1.0;

  double normalization() const;
};

struct RHFOrbital {
  int l = 0;
  double occ = 0.0;
  std::string label;
  std::vector<STOPrimitive> primitives;
  std::vector<double> coeffs;
};

struct STOBasisSet {
  std::string element;
  double electron_count = 0.0;
  std::vector<RHFOrbital> orbitals;
  /// Total kinetic energy quoted with the tabulated wavefunction, if present.
  std::optional<double> published_kinetic;

  /// Primitives of the first orbital with angular momentum l.
  std::vector<STOPrimitive> primitives_for_l(int l) const;
};

/// Overlap of two normalized radial STOs, \int chi_a chi_b r^2 dr.
double sto_overlap(const STOPrimitive& a, const STOPrimitive& b);

/// \int chi_a [-1/2 (chi_b'' + 2 chi_b'/r - l(l+1) chi_b / r^2)] r^2 dr.
double sto_kinetic(const STOPrimitive& a, const STOPrimitive& b, int l);

/// \int R^2 r^2 dr of an orbital from its coefficients.
double orbital_norm(const RHFOrbital& orb);

/// Parses and validates a basis from JSON text; `source` names it in errors.
/// Orbitals within 1e-6 of unit norm are renormalized exactly.
STOBasisSet parse_sto_text(const std::string& text, const std::string& source = "<string>");
STOBasisSet parse_sto(const std::filesystem::path& path);

/// rho = (1/4pi) sum_i occ_i R_i(r)^2 and its derivatives.
DensityDerivatives density_derivs(const STOBasisSet& basis, double r);

DensityPtr atom_density(const STOBasisSet& basis);

/// Sum of orbital kinetic energies from closed-form STO integrals.
double hf_kinetic(const STOBasisSet& basis);

/// The same sum by adaptive radial quadrature of the Laplacian form.
double hf_kinetic_quadrature(const STOBasisSet& basis);

/// -rho'(0) / (2 rho(0)); close to the nuclear charge for a good basis.
double cusp_ratio(const STOBasisSet& basis);

}  // namespace gradpade::atoms
