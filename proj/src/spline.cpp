#include "gradpade/spline.hpp"

#include <algorithm>
#include <cmath>

#include "gradpade/error.hpp"

namespace gradpade {

namespace {

constexpr int kP = QuinticSpline::degree;
constexpr int kMaxDeriv = 4;

// Nonzero basis functions of degree kP and their derivatives at x for knot
// span `span` (The NURBS Book, algorithm A2.3). ders[k][j] is the k-th
// derivative of basis function span - kP + j.
void basis_derivatives(std::span<const double> knots, std::size_t span, double x,
                       double ders[kMaxDeriv + 1][kP + 1]) {
  double ndu[kP + 1][kP + 1];
  double left[kP + 1];
  double right[kP + 1];
  ndu[0][0] = 1.0;
  for (int j = 1; j <= kP; ++j) {
    left[j] = x - knots[span + 1 - j];
    right[j] = knots[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu[j][r] = right[r + 1] + left[j - r];
      const double temp = ndu[r][j - 1] / ndu[j][r];
      ndu[r][j] = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu[j][j] = saved;
  }
  for (int j = 0; j <= kP; ++j) ders[0][j] = ndu[j][kP];

  double a[2][kP + 1];
  for (int r = 0; r <= kP; ++r) {
    int s1 = 0;
    int s2 = 1;
    a[0][0] = 1.0;
    for (int k = 1; k <= kMaxDeriv; ++k) {
      double d = 0.0;
      const int rk = r - k;
      const int pk = kP - k;
      if (r >= k) {
        a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
        d = a[s2][0] * ndu[rk][pk];
      }
      const int j1 = rk >= -1 ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : kP - r;
      for (int j = j1; j <= j2; ++j) {
        a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][rk + j];
        d += a[s2][j] * ndu[rk + j][pk];
      }
      if (r <= pk) {
        a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
        d += a[s2][k] * ndu[r][pk];
      }
      ders[k][r] = d;
      std::swap(s1, s2);
    }
  }
  double factor = kP;
  for (int k = 1; k <= kMaxDeriv; ++k) {
    for (int j = 0; j <= kP; ++j) ders[k][j] *= factor;
    factor *= kP - k;
  }
}

}  // namespace

QuinticSpline::QuinticSpline(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) throw DomainError("spline abscissae and ordinates differ in length");
  if (n < static_cast<std::size_t>(kP + 1)) throw DomainError("insufficient samples for a quintic spline");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x[i] > x[i - 1])) throw DomainError("spline abscissae must be strictly increasing");

  knots_.assign(kP + 1, x.front());
  for (std::size_t i = (kP + 1) / 2; i < n - (kP + 1) / 2; ++i) knots_.push_back(x[i]);
  knots_.insert(knots_.end(), kP + 1, x.back());

  // Collocation matrix in band storage; row i holds columns [i - lower, i + upper].
  std::vector<std::size_t> first(n);
  std::size_t lower = 0;
  std::size_t upper = 0;
  for (std::size_t i = 0; i < n; ++i) {
    first[i] = span_index(x[i]) - kP;
    lower = std::max<std::size_t>(lower, i > first[i] ? i - first[i] : 0);
    upper = std::max<std::size_t>(upper, first[i] + kP > i ? first[i] + kP - i : 0);
  }
  const std::size_t width = lower + upper + 1;
  std::vector<double> band(n * width, 0.0);
  auto at = [&](std::size_t row, std::size_t col) -> double& { return band[row * width + (col + lower - row)]; };
  for (std::size_t i = 0; i < n; ++i) {
    double ders[kMaxDeriv + 1][kP + 1];
    basis_derivatives(knots_, first[i] + kP, x[i], ders);
    for (int j = 0; j <= kP; ++j) {
      const std::size_t col = first[i] + j;
      if (col + lower >= i && col <= i + upper) at(i, col) = ders[0][j];
    }
  }

  // B-spline collocation matrices are totally positive: elimination without
  // pivoting is stable and keeps the band structure.
  coeffs_.assign(y.begin(), y.end());
  for (std::size_t k = 0; k < n; ++k) {
    const double pivot = at(k, k);
    if (pivot == 0.0) throw NumericalError("singular spline collocation matrix");
    const std::size_t row_end = std::min(n, k + lower + 1);
    const std::size_t col_end = std::min(n, k + upper + 1);
    for (std::size_t i = k + 1; i < row_end; ++i) {
      const double m = at(i, k) / pivot;
      if (m == 0.0) continue;
      for (std::size_t j = k; j < col_end; ++j) at(i, j) -= m * at(k, j);
      coeffs_[i] -= m * coeffs_[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = coeffs_[k];
    const std::size_t col_end = std::min(n, k + upper + 1);
    for (std::size_t j = k + 1; j < col_end; ++j) s -= at(k, j) * coeffs_[j];
    coeffs_[k] = s / at(k, k);
  }
}

std::size_t QuinticSpline::span_index(double x) const {
  const std::size_t n_coeffs = knots_.size() - kP - 1;
  if (x < knots_[kP + 1]) return kP;
  if (x >= knots_[n_coeffs - 1]) return n_coeffs - 1;
  const auto it = std::upper_bound(knots_.begin() + kP, knots_.begin() + static_cast<long>(n_coeffs) + 1, x);
  return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

std::array<double, 5> QuinticSpline::derivatives(double x) const {
  const std::size_t span = span_index(x);
  double ders[kMaxDeriv + 1][kP + 1];
  basis_derivatives(knots_, span, x, ders);
  std::array<double, 5> out{};
  for (int k = 0; k <= kMaxDeriv; ++k) {
    double s = 0.0;
    for (int j = 0; j <= kP; ++j) s += ders[k][j] * coeffs_[span - kP + j];
    out[k] = s;
  }
  return out;
}

}  // namespace gradpade
