#include "wracah/cli.hpp"

#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wracah/errors.hpp"
#include "wracah/operator_matrices.hpp"
#include "wracah/output.hpp"
#include "wracah/reconstruction.hpp"
#include "wracah/verify.hpp"
#include "wracah/wilson.hpp"

namespace wracah::cli {

namespace {

using output::format_number;
using output::Table;

struct RunConfig {
  double lambda = 0.2;
  std::optional<double> mu, nu, a, b;
  std::string parity = "even";
  int size = 30;
  std::string format = "csv";
  std::string out_path;
  std::string svg_path;
  double denominator_floor = kDefaultDenominatorFloor;

  double ymin = 0.1, ymax = 10.0;
  int y_points = 200;
  std::string what;
  int method = 1;
  std::optional<int> column;
  std::optional<double> xmin, xmax;
  int points = 401;
  std::vector<int> scan;
  double energy = 0.0;
  std::optional<int> terms;
  std::string suite = "all";
};

WilsonParams wilson_params(const RunConfig& c) {
  if (!c.mu) throw ParameterError("--mu is required for this command");
  if (!c.a) throw ParameterError("--a is required for this command");
  WilsonParams p{*c.mu, c.nu.value_or(*c.mu), *c.a, c.b.value_or(*c.a), c.lambda};
  p.validate();
  return p;
}

std::vector<std::pair<std::string, std::string>> parameter_line(const RunConfig& c,
                                                                const std::string& command) {
  const WilsonParams p = wilson_params(c);
  return {{"command", command},
          {"lambda", format_number(p.lambda)},
          {"mu", format_number(p.mu)},
          {"nu", format_number(p.nu)},
          {"a", format_number(p.a)},
          {"b", format_number(p.b)},
          {"parity", c.parity},
          {"size", std::to_string(c.size)}};
}

std::vector<double> x_grid(const RunConfig& c) {
  const double lo = c.xmin.value_or(-5.0 / c.lambda);
  const double hi = c.xmax.value_or(5.0 / c.lambda);
  return uniform_grid(lo, hi, c.points);
}

void emit_table(const RunConfig& c, const Table& t, std::ostream& out) {
  std::ostringstream buf;
  if (c.format == "json") {
    output::write_json(t, buf);
  } else {
    output::write_csv(t, buf);
  }
  if (c.out_path.empty()) {
    out << buf.str();
  } else {
    output::write_file(c.out_path, buf.str());
  }
}

void emit_svg(const RunConfig& c, const output::Plot& plot) {
  if (c.svg_path.empty()) return;
  std::ostringstream buf;
  output::write_svg(plot, buf);
  output::write_file(c.svg_path, buf.str());
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const auto p = wilson_params(c);
  const auto spectrum = wilson::bound_state_energies(p);
  Table t;
  t.parameters = parameter_line(c, "spectrum");
  t.parameters.emplace_back("edge_level_excluded", spectrum.edge_level_excluded ? "true" : "false");
  t.columns = {"m", "E"};
  output::Plot plot{"Bound-state energies", "", "E (a.u.)", {}, {}};
  for (const auto& s : spectrum.states) {
    t.rows.push_back({double(s.m), s.energy});
    plot.levels.push_back({"m = " + std::to_string(s.m), s.energy});
  }
  emit_table(c, t, out);
  emit_svg(c, plot);
  return 0;
}

int cmd_phase_shift(const RunConfig& c, std::ostream& out) {
  const auto p = wilson_params(c);
  if (!(c.ymin > 0.0) || !(c.ymax > c.ymin)) {
    throw ParameterError("phase-shift: requires 0 < ymin < ymax");
  }
  const auto ys = uniform_grid(c.ymin, c.ymax, c.y_points);
  std::vector<double> principal;
  for (double y : ys) principal.push_back(wilson::phase_shift(y, p));
  const auto unwrapped = wilson::unwrap_phase(principal);
  Table t;
  t.parameters = parameter_line(c, "phase-shift");
  t.columns = {"y", "E", "delta", "delta_unwrapped", "abs_A"};
  for (std::size_t i = 0; i < ys.size(); ++i) {
    t.rows.push_back({ys[i], SpectralPoint::from_y(ys[i], p.lambda).energy, principal[i],
                      unwrapped[i], wilson::scattering_amplitude_abs(ys[i], p)});
  }
  emit_table(c, t, out);
  emit_svg(c, {"Scattering phase shift", "y", "delta (unwrapped)", {{"delta", ys, unwrapped}}, {}});
  return 0;
}

int cmd_matrix(const RunConfig& c, std::ostream& out) {
  const SystemSpec spec(wilson_params(c), parse_parity(c.parity), c.size);
  TridiagonalMatrix m;
  if (c.what == "kinetic") {
    m = kinetic_matrix(spec.basis());
  } else if (c.what == "hamiltonian") {
    m = hamiltonian_matrix(spec);
  } else if (c.what == "potential") {
    m = potential_matrix(spec);
  } else {
    throw ParameterError("--what must be kinetic, hamiltonian or potential");
  }
  Table t;
  t.parameters = parameter_line(c, "matrix");
  t.parameters.emplace_back("what", c.what);
  t.columns = {"row", "col", "value"};
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) t.rows.push_back({double(i), double(j), m.at(i, j)});
  }
  emit_table(c, t, out);
  return 0;
}

int cmd_potential(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const WilsonParams p = wilson_params(c);
  const Parity parity = parse_parity(c.parity);
  if (c.method != 1 && c.method != 2) throw ParameterError("--method must be 1 or 2");
  const Method method = c.method == 1 ? Method::one : Method::two;
  const auto grid = x_grid(c);
  Table t;
  t.parameters = parameter_line(c, "potential");
  t.parameters.emplace_back("method", std::to_string(c.method));
  if (method == Method::two) t.parameters.emplace_back("column", std::to_string(c.column.value_or(0)));
  t.parameters.emplace_back("denominator_floor", format_number(c.denominator_floor));
  output::Plot plot{"Reconstructed potential", "x", "V(x)", {}, {}};

  if (c.scan.empty()) {
    const SystemSpec spec(p, parity, c.size);
    const auto tilde = reconstruct({spec, method, c.column, grid, c.denominator_floor});
    const auto full = full_potential(tilde, p.lambda);
    t.columns = {"x", "V_tilde", "V", "trusted"};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.rows.push_back({grid[i], tilde.curve.values[i], full.curve.values[i], tilde.mask[i] ? 1.0 : 0.0});
    }
    plot.series.push_back({"N = " + std::to_string(c.size), grid, full.curve.values});
  } else {
    if (method == Method::two && c.column) {
      throw ParameterError("--scan uses the default column for method 2");
    }
    const SystemSpec spec(p, parity, c.scan.front());
    const auto report = stability_scan(spec, grid, c.scan, method, c.denominator_floor);
    t.columns = {"x"};
    for (int n : c.scan) t.columns.push_back("V_N" + std::to_string(n));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::vector<double> row{grid[i]};
      for (const auto& curve : report.curves) row.push_back(curve.curve.values[i]);
      t.rows.push_back(std::move(row));
    }
    for (const auto& curve : report.curves) {
      plot.series.push_back({"N = " + std::to_string(curve.size_N), grid, curve.curve.values});
    }
    for (const auto& e : report.extrema) {
      err << "N=" << e.size_N << " argmin=" << format_number(e.argmin)
          << " min=" << format_number(e.min) << " argmax=" << format_number(e.argmax)
          << " max=" << format_number(e.max) << '\n';
    }
    for (const auto& cmp : report.comparisons) {
      err << "sup|V_N" << cmp.size_a << " - V_N" << cmp.size_b
          << "|=" << format_number(cmp.sup_difference) << " points=" << cmp.compared_points << '\n';
    }
  }
  emit_table(c, t, out);
  emit_svg(c, plot);
  return 0;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out) {
  const SystemSpec spec(wilson_params(c), parse_parity(c.parity), c.size);
  const auto grid = x_grid(c);
  const int terms = c.terms.value_or(c.size);
  const auto wf = assemble_wavefunction(spec, c.energy, grid, terms);
  Table t;
  t.parameters = parameter_line(c, "wavefunction");
  t.parameters.emplace_back("energy", format_number(c.energy));
  t.parameters.emplace_back("terms", std::to_string(terms));
  t.parameters.emplace_back("weight", format_number(wf.weight));
  t.parameters.emplace_back("tail", format_number(wf.tail));
  t.columns = {"x", "psi"};
  for (std::size_t i = 0; i < grid.size(); ++i) t.rows.push_back({grid[i], wf.psi.values[i]});
  emit_table(c, t, out);
  emit_svg(c, {"Continuum wavefunction", "x", "psi(E, x)", {{"psi", grid, wf.psi.values}}, {}});
  return 0;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto report = verify::run_suite(c.suite);
  std::ostringstream buf;
  for (const auto& check : report.checks) {
    buf << (check.passed ? "PASS" : "FAIL") << "  " << check.name
        << "  measured=" << format_number(check.measured)
        << "  threshold=" << format_number(check.threshold) << '\n';
  }
  buf << "suite " << report.suite << ": " << (report.overall() ? "PASS" : "FAIL") << '\n';
  if (c.out_path.empty()) {
    out << buf.str();
  } else {
    output::write_file(c.out_path, buf.str());
  }
  return report.overall() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Wilson-Racah potential reconstruction"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value parameter file; flags win");

  app.add_option("--lambda", c.lambda, "Inverse length scale")->capture_default_str();
  app.add_option("--mu", c.mu, "Wilson parameter mu");
  app.add_option("--nu", c.nu, "Wilson parameter nu (default mu)");
  app.add_option("--a", c.a, "Wilson parameter a");
  app.add_option("--b", c.b, "Wilson parameter b (default a)");
  app.add_option("--parity", c.parity, "Oscillator sub-basis")
      ->check(CLI::IsMember({"even", "odd"}))
      ->capture_default_str();
  app.add_option("--size", c.size, "Basis / matrix size")->capture_default_str();
  app.add_option("--format", c.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", c.out_path, "Output file (default stdout)");
  app.add_option("--svg", c.svg_path, "Also write an SVG plot");
  app.add_option("--denominator-floor", c.denominator_floor, "Reconstruction mask floor")
      ->capture_default_str();

  auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies");
  auto* phase = app.add_subcommand("phase-shift", "Scattering phase shift on a y grid");
  phase->add_option("--ymin", c.ymin)->capture_default_str();
  phase->add_option("--ymax", c.ymax)->capture_default_str();
  phase->add_option("--points", c.y_points)->capture_default_str();
  auto* matrix = app.add_subcommand("matrix", "Kinetic, Hamiltonian or potential matrix");
  matrix->add_option("--what", c.what)
      ->required()
      ->check(CLI::IsMember({"kinetic", "hamiltonian", "potential"}));
  auto* potential = app.add_subcommand("potential", "Reconstruct V(x)");
  potential->add_option("--method", c.method)->check(CLI::IsMember({1, 2}))->capture_default_str();
  potential->add_option("--column", c.column, "Method 2 column");
  potential->add_option("--scan", c.scan, "Sizes for a stability scan")->delimiter(',');
  auto* wavefunction = app.add_subcommand("wavefunction", "Continuum wavefunction");
  wavefunction->add_option("--energy", c.energy)->required();
  wavefunction->add_option("--terms", c.terms, "Expansion terms (default size)");
  for (auto* sub : {potential, wavefunction}) {
    sub->add_option("--xmin", c.xmin, "Grid start (default -5/lambda)");
    sub->add_option("--xmax", c.xmax, "Grid end (default 5/lambda)");
    sub->add_option("--points", c.points)->capture_default_str();
  }
  auto* verify = app.add_subcommand("verify", "Run self-checks");
  verify->add_option("--suite", c.suite)
      ->check(CLI::IsMember({"specfun", "wilson", "racah", "matrices", "reconstruction", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(c, out);
    if (phase->parsed()) return cmd_phase_shift(c, out);
    if (matrix->parsed()) return cmd_matrix(c, out);
    if (potential->parsed()) return cmd_potential(c, out, err);
    if (wavefunction->parsed()) return cmd_wavefunction(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
  } catch (const ParameterError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return 2;
  } catch (const output::IoError& e) {
    err << e.what() << '\n';
    return 3;
  }
  return 2;
}

}  // namespace wracah::cli
