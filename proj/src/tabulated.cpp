#include "gradpade/tabulated.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <fstream>
#include <sstream>
#include <string>

#include "gradpade/error.hpp"

namespace gradpade {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool parse_double(const std::string& s, double& out) {
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

DensityTable read_density_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open density table " + path.string());
  DensityTable table;
  std::string line;
  std::size_t line_no = 0;
  bool seen_data_line = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto fields = split_fields(line);
    double r = 0.0;
    double rho = 0.0;
    const bool numeric = fields.size() >= 2 && parse_double(fields[0], r) && parse_double(fields[1], rho);
    if (!numeric) {
      if (!seen_data_line && table.r.empty()) {
        seen_data_line = true;  // header
        continue;
      }
      std::ostringstream msg;
      msg << path.string() << ":" << line_no << ": expected two numeric columns 'r rho'";
      throw DataError(msg.str());
    }
    seen_data_line = true;
    table.r.push_back(r);
    table.rho.push_back(rho);
  }
  return table;
}

TabulatedDensity::TabulatedDensity(const DensityTable& table, TableOptions options, std::string name)
    : name_(std::move(name)) {
  if (table.r.size() != table.rho.size()) throw DataError("density table columns differ in length");
  std::size_t n = table.r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(table.r[i]) || !std::isfinite(table.rho[i]) || table.rho[i] < 0.0)
      throw DataError("density table has a negative or non-finite sample at row " + std::to_string(i + 1));
    if (i > 0 && !(table.r[i] > table.r[i - 1]))
      throw DataError("density table radii must be strictly increasing");
  }
  if (n > 0 && table.r.front() < 0.0) throw DataError("density table radii must be non-negative");
  // Trailing vacuum samples carry no information for a log spline.
  while (n > 0 && table.rho[n - 1] == 0.0) --n;
  if (n < min_samples) throw DataError("insufficient samples: a tabulated density needs at least 12 points");
  for (std::size_t i = 0; i < n; ++i)
    if (table.rho[i] == 0.0) throw DataError("density table has a zero sample inside its support");

  std::vector<double> x;
  std::vector<double> y;
  if (options.even_extension) {
    for (std::size_t i = n; i-- > 0;) {
      if (table.r[i] == 0.0) continue;
      x.push_back(-table.r[i]);
      y.push_back(std::log(table.rho[i]));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(table.r[i]);
    y.push_back(std::log(table.rho[i]));
  }
  log_rho_ = std::make_unique<QuinticSpline>(x, y);
  r_last_ = table.r[n - 1];

  // Derivatives of the log spline below what rounding in the fit can produce
  // are set to zero, so flat stretches of data give exactly vanishing
  // gradient terms.
  double y_scale = 1.0;
  double h_min = INFINITY;
  for (std::size_t i = 0; i < y.size(); ++i) {
    y_scale = std::max(y_scale, std::abs(y[i]));
    if (i > 0) h_min = std::min(h_min, x[i] - x[i - 1]);
  }
  for (std::size_t k = 1; k < noise_floor_.size(); ++k)
    noise_floor_[k] = 1e3 * std::numeric_limits<double>::epsilon() * y_scale / std::pow(h_min, static_cast<double>(k));

  std::vector<double> breaks{0.0};
  for (std::size_t i = 0; i < n; ++i)
    if (table.r[i] > 0.0) breaks.push_back(table.r[i]);
  if (breaks.size() < 2) throw DataError("density table has no positive radius");
  const RadialGrid grid(std::move(breaks));
  electron_count_ = integrate_radial([this](double r) { return eval(r).rho; }, grid,
                                     QuadOptions{.rel_tol = 1e-10, .abs_tol = 1e-14, .exec = Execution::serial});
}

DensityDerivatives TabulatedDensity::eval(double r) const {
  if (r < 0.0) throw DomainError("density evaluated at negative radius");
  if (r > r_last_) return {};
  auto l = log_rho_->derivatives(r);
  for (std::size_t k = 1; k < l.size(); ++k)
    if (std::abs(l[k]) < noise_floor_[k]) l[k] = 0.0;
  Jet lj;
  lj[0] = l[0];
  lj[1] = l[1];
  lj[2] = l[2] / 2.0;
  lj[3] = l[3] / 6.0;
  lj[4] = l[4] / 24.0;
  return DensityDerivatives::from_jet(exp(lj));
}

DensityPtr tabulated_derivatives(const DensityTable& table, TableOptions options) {
  return std::make_shared<TabulatedDensity>(table, options);
}

}  // namespace gradpade
