#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <vector>

#include "gradpade/radial.hpp"
#include "gradpade/spline.hpp"

namespace gradpade {

/// Samples (r_i, rho_i) of a radial density.
struct DensityTable {
  std::vector<double> r;
  std::vector<double> rho;
};

/// Reads a plain-text density table: two leading columns "r rho" in atomic
/// units, separated by whitespace or commas. Lines starting with '#' are
/// comments; a non-numeric first line is taken as a header. Extra columns
/// are ignored, so CSV dumps can be read back.
DensityTable read_density_table(const std::filesystem::path& path);

struct TableOptions {
  /// Fit the mirrored samples (-r_i, rho_i) as well, making the density even
  /// about the origin. Suitable for smooth densities without a nuclear cusp.
  bool even_extension = false;
};

/// Density interpolated by a quintic spline of ln(rho); derivatives of rho
/// follow from the chain rule. Zero beyond the last sample.
class TabulatedDensity final : public DensityModel {
 public:
  static constexpr std::size_t min_samples = 12;

  explicit TabulatedDensity(const DensityTable& table, TableOptions options = {},
                            std::string name = "table");

  DensityDerivatives eval(double r) const override;
  double electron_count() const override { return electron_count_; }
  DensityKind kind() const override { return DensityKind::tabulated; }
  std::string name() const override { return name_; }
  double support_radius() const override { return r_last_; }

 private:
  std::unique_ptr<QuinticSpline> log_rho_;
  std::array<double, 5> noise_floor_{};
  double r_last_ = 0.0;
  double electron_count_ = 0.0;
  std::string name_;
};

/// Builds a tabulated density model from samples.
DensityPtr tabulated_derivatives(const DensityTable& table, TableOptions options = {});

}  // namespace gradpade
