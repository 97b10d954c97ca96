#pragma once

#include <array>
#include <span>
#include <vector>

namespace gradpade {

/// Interpolating B-spline of degree 5 with not-a-knot end conditions: the
/// interior knots are the data abscissae with the two outermost on each side
/// removed, so the coefficient count equals the sample count.
class QuinticSpline {
 public:
  static constexpr int degree = 5;

  QuinticSpline(std::span<const double> x, std::span<const double> y);

  /// Value and derivatives 1..4 at x (polynomial extension outside the data).
  std::array<double, 5> derivatives(double x) const;
  double operator()(double x) const { return derivatives(x)[0]; }

  double x_min() const { return knots_.front(); }
  double x_max() const { return knots_.back(); }

 private:
  std::size_t span_index(double x) const;

  std::vector<double> knots_;
  std::vector<double> coeffs_;
};

}  // namespace gradpade
