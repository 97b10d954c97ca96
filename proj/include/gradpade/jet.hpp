#pragma once

// Truncated Taylor-series arithmetic. A Taylor<N> holds the normalized
// coefficients c_k = f^(k)(r0)/k! for k = 0..N of a function around a
// fixed expansion point; arithmetic and elementary functions propagate them
// exactly (up to rounding), which gives analytic derivatives of composite
// densities without symbolic differentiation.

#include <array>
#include <cmath>
#include <numbers>

namespace gradpade {

template <int N>
class Taylor {
  static_assert(N >= 0);

 public:
  static constexpr int order = N;

  constexpr Taylor() = default;
  constexpr Taylor(double value) { c_[0] = value; }  // NOLINT: implicit constant

  /// The independent variable expanded around x0.
  static constexpr Taylor variable(double x0) {
    Taylor t(x0);
    if constexpr (N >= 1) t.c_[1] = 1.0;
    return t;
  }

  constexpr double operator[](int k) const { return c_[k]; }
  constexpr double& operator[](int k) { return c_[k]; }
  constexpr double value() const { return c_[0]; }

  /// k-th derivative at the expansion point.
  constexpr double derivative(int k) const {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f * c_[k];
  }

  constexpr Taylor operator-() const {
    Taylor r;
    for (int k = 0; k <= N; ++k) r.c_[k] = -c_[k];
    return r;
  }

  constexpr Taylor& operator+=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  constexpr Taylor& operator-=(const Taylor& o) {
    for (int k = 0; k <= N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  constexpr Taylor& operator*=(double s) {
    for (int k = 0; k <= N; ++k) c_[k] *= s;
    return *this;
  }
  constexpr Taylor& operator/=(double s) {
    for (int k = 0; k <= N; ++k) c_[k] /= s;
    return *this;
  }
  constexpr Taylor& operator*=(const Taylor& o) { return *this = *this * o; }
  constexpr Taylor& operator/=(const Taylor& o) { return *this = *this / o; }

  friend constexpr Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
  friend constexpr Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
  friend constexpr Taylor operator*(Taylor a, double s) { return a *= s; }
  friend constexpr Taylor operator*(double s, Taylor a) { return a *= s; }
  friend constexpr Taylor operator/(Taylor a, double s) { return a /= s; }

  friend constexpr Taylor operator*(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend constexpr Taylor operator/(const Taylor& a, const Taylor& b) {
    Taylor r;
    for (int k = 0; k <= N; ++k) {
      double s = a.c_[k];
      for (int j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }

  friend constexpr Taylor operator/(double s, const Taylor& b) { return Taylor(s) / b; }

 private:
  std::array<double, N + 1> c_{};
};

namespace detail {

// Solves k h_k = sum_{j=1..k} j g_j w_{k-j}, i.e. h' = w g', given h_0.
template <int N>
Taylor<N> integrate_chain(double h0, const Taylor<N>& g, const Taylor<N>& w) {
  Taylor<N> h(h0);
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * g[j] * w[k - j];
    h[k] = s / k;
  }
  return h;
}

}  // namespace detail

template <int N>
Taylor<N> exp(const Taylor<N>& g) {
  Taylor<N> e(std::exp(g[0]));
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * g[j] * e[k - j];
    e[k] = s / k;
  }
  return e;
}

template <int N>
Taylor<N> log(const Taylor<N>& g) {
  Taylor<N> l(std::log(g[0]));
  for (int k = 1; k <= N; ++k) {
    double s = g[k];
    for (int j = 1; j < k; ++j) s -= (static_cast<double>(j) / k) * l[j] * g[k - j];
    l[k] = s / g[0];
  }
  return l;
}

/// g^a for g(x0) > 0.
template <int N>
Taylor<N> pow(const Taylor<N>& g, double a) {
  Taylor<N> p(std::pow(g[0], a));
  for (int k = 1; k <= N; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((a + 1.0) * j - k) * g[j] * p[k - j];
    p[k] = s / (k * g[0]);
  }
  return p;
}

template <int N>
Taylor<N> sqrt(const Taylor<N>& g) {
  return pow(g, 0.5);
}

template <int N>
Taylor<N> erf(const Taylor<N>& g) {
  const Taylor<N> w = (2.0 / std::sqrt(std::numbers::pi)) * exp(-(g * g));
  return detail::integrate_chain(std::erf(g[0]), g, w);
}

/// Integer power by repeated multiplication (exact for p = 0).
template <int N>
Taylor<N> ipow(const Taylor<N>& g, int p) {
  Taylor<N> r(1.0);
  for (int i = 0; i < p; ++i) r *= g;
  return r;
}

using Jet = Taylor<4>;

}  // namespace gradpade
