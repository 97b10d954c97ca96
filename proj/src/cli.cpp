#include "gradpade/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "gradpade/atoms.hpp"
#include "gradpade/hooke.hpp"
#include "gradpade/resum.hpp"
#include "gradpade/tabulated.hpp"

namespace gradpade::cli {

namespace {

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string energy(double v) { return fmt("%.6g", v); }
std::string percent(double v) { return fmt("%.2f", v); }

std::vector<ResumMethod> resolve_methods(const std::vector<std::string>& tokens) {
  std::vector<ResumMethod> out;
  for (const std::string& t : tokens) {
    if (t == "all") {
      out.assign(kAllMethods.begin(), kAllMethods.end());
      return out;
    }
    const auto m = parse_method(t);
    if (!m) throw CLI::ValidationError("--methods", "unknown method '" + t + "'");
    if (std::find(out.begin(), out.end(), *m) == out.end()) out.push_back(*m);
  }
  if (out.empty()) throw CLI::ValidationError("--methods", "no methods selected");
  return out;
}

struct Row {
  std::string key_name;
  std::string key;
  std::string ref_name;
  double T_ref;
  std::vector<KineticReport> reports;
};

Row evaluate(const DensityModel& dm, double T_ref, const std::vector<ResumMethod>& methods) {
  Row row;
  row.T_ref = T_ref;
  const RadialGrid grid = kinetic_grid(dm);
  for (ResumMethod m : methods) row.reports.push_back(integrate_method(dm, m, grid, T_ref));
  return row;
}

void print_row(const Row& row, std::ostream& out) {
  std::ostringstream head, body;
  auto cell = [](std::ostringstream& s, const std::string& v) { s << std::left << std::setw(11) << v; };
  cell(head, row.key_name);
  cell(head, row.ref_name);
  cell(body, row.key);
  cell(body, energy(row.T_ref));
  for (const KineticReport& r : row.reports) {
    cell(head, std::string(method_label(r.method)));
    cell(body, percent(r.percent_error));
  }
  out << head.str() << '\n' << body.str() << '\n';
  for (const KineticReport& r : row.reports) {
    if (!is_pade(r.method)) continue;
    out << "# " << method_label(r.method) << " T = " << energy(r.T) << ", poles at r =";
    if (r.poles.empty()) out << " none";
    for (double p : r.poles) out << ' ' << fmt("%.6g", p);
    out << '\n';
  }
}

void write_row_csv(const Row& row, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write " + path);
  f << row.key_name << ',' << row.ref_name;
  for (const KineticReport& r : row.reports) f << ',' << method_token(r.method);
  for (const KineticReport& r : row.reports) f << ",T_" << method_token(r.method);
  f << '\n' << row.key << ',' << fmt("%.10g", row.T_ref);
  for (const KineticReport& r : row.reports) f << ',' << fmt("%.6f", r.percent_error);
  for (const KineticReport& r : row.reports) f << ',' << fmt("%.10g", r.T);
  f << '\n';
}

struct HookeModel {
  DensityPtr density;
  double T_ref;
};

HookeModel hooke_model(double omega, bool interacting) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw CLI::ValidationError("--omega", "must be positive");
  if (omega == 0.5 && interacting) {
    const DensityPtr d = hooke::omega_half_density();
    return {d, hooke::von_weizsacker_energy(*d, kinetic_grid(*d))};
  }
  const hooke::HookeSolution sol = hooke::solve_general({omega, interacting});
  return {sol.density, hooke::kinetic_exact(sol)};
}

std::string dump_flags(const TauPoint& p, const TauPoint* prev, const TauPoint* next) {
  std::string flags;
  auto add = [&flags](const char* f) {
    if (!flags.empty()) flags += '|';
    flags += f;
  };
  auto near_pole = [&](ResumMethod m) {
    const double d = pole_denominator(p, m);
    if (d == 0.0) return true;
    for (const TauPoint* q : {prev, next})
      if (q && std::signbit(pole_denominator(*q, m)) != std::signbit(d)) return true;
    return false;
  };
  if (near_pole(ResumMethod::Pade11)) add("pole11");
  if (near_pole(ResumMethod::Pade21)) add("pole21");
  if (std::abs(p.tau6) < std::abs(p.tau4) && std::abs(p.tau4) < std::abs(p.tau2) && std::abs(p.tau2) < std::abs(p.tau0))
    add("convergent");
  return flags.empty() ? "-" : flags;
}

void write_dump(const DensityModel& dm, double r_max, std::size_t points, const std::string& path) {
  // Quadratic spacing resolves the nuclear region while reaching the tail.
  std::vector<double> radii(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i + 1) / static_cast<double>(points);
    radii[i] = r_max * t * t;
  }
  std::vector<DensityDerivatives> d(points);
  std::vector<TauPoint> tau(points);
  for_each_index(points, Execution::parallel, [&](std::size_t i) {
    d[i] = dm.eval(radii[i]);
    if (d[i].rho > 0.0) tau[i] = tau_point(d[i], radii[i]);
  });
  std::ofstream f(path);
  if (!f) throw DataError("cannot write " + path);
  f << "r,rho,tau0,tau2,tau4,tau6,sum2,sum4,pade11,pade21,flags\n";
  auto num = [](std::optional<double> v) { return v ? fmt("%.12e", *v) : std::string("nan"); };
  for (std::size_t i = 0; i < points; ++i) {
    const TauPoint& p = tau[i];
    f << fmt("%.12e", radii[i]) << ',' << fmt("%.12e", d[i].rho) << ',' << fmt("%.12e", p.tau0) << ','
      << fmt("%.12e", p.tau2) << ',' << fmt("%.12e", p.tau4) << ',' << fmt("%.12e", p.tau6) << ','
      << fmt("%.12e", partial_sum(p, 2)) << ',' << fmt("%.12e", partial_sum(p, 4)) << ',' << num(pade11(p))
      << ',' << num(pade21(p)) << ',';
    if (d[i].rho > 0.0)
      f << dump_flags(p, i > 0 ? &tau[i - 1] : nullptr, i + 1 < points ? &tau[i + 1] : nullptr);
    else
      f << "vacuum";
    f << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gradient expansion of the kinetic energy with Pade resummation"};
  app.require_subcommand(1);

  double omega = 0.5;
  bool non_interacting = false;
  std::vector<std::string> method_tokens{"all"};
  std::string csv_path;
  std::string basis_path;
  std::string table_path;
  double dump_rmax = 0.0;
  std::size_t dump_points = 400;

  auto* hooke_cmd = app.add_subcommand("hooke", "Hooke's-law atom: kinetic energy errors per method");
  hooke_cmd->add_option("--omega", omega, "confinement frequency")->required();
  hooke_cmd->add_flag("--non-interacting", non_interacting, "drop the electron repulsion");
  hooke_cmd->add_option("--methods", method_tokens, "all, or a comma list of T0,T02,T024,Pade11,Pade21")
      ->delimiter(',');
  hooke_cmd->add_option("--csv", csv_path, "also write the row as CSV");

  auto* atom_cmd = app.add_subcommand("atom", "Hartree-Fock atom from an STO basis file");
  atom_cmd->add_option("--basis", basis_path, "JSON basis file")->required();
  atom_cmd->add_option("--methods", method_tokens, "all, or a comma list")->delimiter(',');
  atom_cmd->add_option("--csv", csv_path, "also write the row as CSV");

  auto* dump_cmd = app.add_subcommand("dump", "Per-radius tau diagnostics as CSV");
  auto* src_omega = dump_cmd->add_option("--omega", omega, "Hooke's-law density");
  auto* src_basis = dump_cmd->add_option("--basis", basis_path, "atomic basis file");
  auto* src_table = dump_cmd->add_option("--table", table_path, "tabulated density file");
  src_omega->excludes(src_basis)->excludes(src_table);
  src_basis->excludes(src_table);
  dump_cmd->add_flag("--non-interacting", non_interacting, "with --omega, drop the electron repulsion");
  dump_cmd->add_option("--rmax", dump_rmax, "outer radius (default: density tail)");
  dump_cmd->add_option("--points", dump_points, "number of radii")->check(CLI::Range(std::size_t{2}, std::size_t{10000000}));
  dump_cmd->add_option("--csv", csv_path, "output file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  try {
    if (*hooke_cmd) {
      const auto methods = resolve_methods(method_tokens);
      const HookeModel model = hooke_model(omega, !non_interacting);
      Row row = evaluate(*model.density, model.T_ref, methods);
      row.key_name = "omega";
      row.key = fmt("%.6g", omega);
      row.ref_name = "T_s";
      print_row(row, out);
      if (!csv_path.empty()) write_row_csv(row, csv_path);
    } else if (*atom_cmd) {
      const auto methods = resolve_methods(method_tokens);
      const atoms::STOBasisSet basis = atoms::parse_sto(basis_path);
      Row row = evaluate(*atoms::atom_density(basis), atoms::hf_kinetic(basis), methods);
      row.key_name = "atom";
      row.key = basis.element;
      row.ref_name = "T_HF";
      print_row(row, out);
      if (!csv_path.empty()) write_row_csv(row, csv_path);
    } else if (*dump_cmd) {
      DensityPtr dm;
      if (*src_omega) dm = hooke_model(omega, !non_interacting).density;
      else if (*src_basis) dm = atoms::atom_density(atoms::parse_sto(basis_path));
      else if (*src_table) dm = tabulated_derivatives(read_density_table(table_path));
      else throw CLI::ValidationError("dump", "one of --omega, --basis, --table is required");
      const double r_max = dump_rmax > 0.0 ? dump_rmax : kinetic_grid(*dm).r_max();
      write_dump(*dm, r_max, dump_points, csv_path);
      out << "wrote " << dump_points << " radii up to r = " << energy(r_max) << " to " << csv_path << '\n';
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return data;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return numerical;
  }
  return ok;
}

}  // namespace gradpade::cli
