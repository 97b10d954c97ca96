#include "gradpade/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gradpade/error.hpp"

namespace gradpade {

namespace {

// Kronrod abscissae and weights of the 15-point rule; Gauss 7-point weights
// for the embedded rule (QUADPACK qk15).
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

double checked(const std::function<double(double)>& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand is not finite at r = " << x;
    throw NonFiniteError(msg.str(), x);
  }
  return v;
}

void gauss_kronrod_15(const std::function<double(double)>& f, Panel& p) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  const double centre = 0.5 * (p.a + p.b);
  const double half = 0.5 * (p.b - p.a);

  double fv1[7];
  double fv2[7];
  const double fc = checked(f, centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const double f1 = checked(f, centre - dx);
    const double f2 = checked(f, centre + dx);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    resg += kWg[j] * (f1 + f2);
    resk += kWgk[jtw] * (f1 + f2);
    resabs += kWgk[jtw] * (std::abs(f1) + std::abs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    const double f1 = checked(f, centre - dx);
    const double f2 = checked(f, centre + dx);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    resk += kWgk[jtwm1] * (f1 + f2);
    resabs += kWgk[jtwm1] * (std::abs(f1) + std::abs(f2));
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double ah = std::abs(half);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (resabs > tiny / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);

  p.value = resk * half;
  p.error = err;
}

}  // namespace

int parallel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void evaluate_panels(const std::function<double(double)>& f, std::span<Panel> panels,
                     Execution exec) {
  for_each_index(panels.size(), exec, [&](std::size_t i) { gauss_kronrod_15(f, panels[i]); });
}

std::vector<double> evaluate_field(const std::function<double(double)>& f,
                                   std::span<const double> x, Execution exec) {
  std::vector<double> out(x.size());
  for_each_index(x.size(), exec, [&](std::size_t i) { out[i] = f(x[i]); });
  return out;
}

}  // namespace gradpade
