#include "wracah/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wracah/errors.hpp"

namespace wracah {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw ParameterError("reconstruction: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw ParameterError("reconstruction: grid must be increasing");
  }
}

void check_inputs(const TridiagonalMatrix& v, const OscillatorBasis& basis,
                  const std::vector<double>& grid, double floor) {
  if (v.size() != static_cast<std::size_t>(basis.size())) {
    throw ParameterError("reconstruction: matrix size differs from basis size");
  }
  if (!(floor > 0.0)) throw ParameterError("reconstruction: denominator floor must be positive");
  check_grid(grid);
}

PotentialCurve empty_curve(Method method, int size, const std::vector<double>& grid) {
  PotentialCurve c;
  c.method = method;
  c.size_N = size;
  c.curve.xs = grid;
  c.curve.values.assign(grid.size(), kNaN);
  c.mask.assign(grid.size(), false);
  return c;
}

}  // namespace

std::string_view to_string(Method m) { return m == Method::one ? "1" : "2"; }

std::size_t PotentialCurve::trusted_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

PotentialCurve reconstruct_method1(const TridiagonalMatrix& v, const OscillatorBasis& basis,
                                   const std::vector<double>& grid, double denominator_floor) {
  check_inputs(v, basis, grid, denominator_floor);
  PotentialCurve out = empty_curve(Method::one, basis.size(), grid);
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto phi = basis.eval_all(grid[i]);
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      num += v.diag[k] * phi[k] * phi[k];
      den += phi[k] * phi[k];
    }
    for (std::size_t k = 0; k + 1 < n; ++k) num += 2.0 * v.offdiag[k] * phi[k] * phi[k + 1];
    if (den >= denominator_floor) {
      out.curve.values[i] = num / den;
      out.mask[i] = true;
    }
  }
  return out;
}

PotentialCurve reconstruct_method2(const TridiagonalMatrix& v, const OscillatorBasis& basis,
                                   int column, const std::vector<double>& grid,
                                   double denominator_floor) {
  check_inputs(v, basis, grid, denominator_floor);
  const int n = basis.size();
  if (column < 0 || column >= n) {
    throw ParameterError("reconstruct_method2: column " + std::to_string(column) +
                             " outside 0.." + std::to_string(n - 1),
                         column);
  }
  PotentialCurve out = empty_curve(Method::two, n, grid);
  out.column = column;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto phi = basis.eval_all(grid[i]);
    const double pivot = phi[column];
    if (!(std::abs(pivot) >= denominator_floor)) continue;
    double num = v.diag[column] * pivot;
    if (column > 0) num += v.offdiag[column - 1] * phi[column - 1];
    if (column + 1 < n) num += v.offdiag[column] * phi[column + 1];
    out.curve.values[i] = num / pivot;
    out.mask[i] = true;
  }
  return out;
}

PotentialCurve reconstruct_method1(const ReconstructionRequest& req) {
  return reconstruct_method1(potential_matrix(req.spec), req.spec.basis(), req.grid,
                             req.denominator_floor);
}

PotentialCurve reconstruct_method2(const ReconstructionRequest& req) {
  return reconstruct_method2(potential_matrix(req.spec), req.spec.basis(), req.column.value_or(0),
                             req.grid, req.denominator_floor);
}

PotentialCurve reconstruct(const ReconstructionRequest& req) {
  return req.method == Method::one ? reconstruct_method1(req) : reconstruct_method2(req);
}

double counterterm(double x, double lambda) {
  const double l2 = lambda * lambda;
  return 0.5 * l2 * l2 * x * x;
}

PotentialCurve full_potential(const PotentialCurve& curve, double lambda) {
  PotentialCurve out = curve;
  for (std::size_t i = 0; i < out.curve.xs.size(); ++i) {
    if (out.mask[i]) out.curve.values[i] += counterterm(out.curve.xs[i], lambda);
  }
  return out;
}

CurveExtremum curve_extremum(const PotentialCurve& curve) {
  CurveExtremum e;
  e.size_N = curve.size_N;
  bool seen = false;
  for (std::size_t i = 0; i < curve.curve.xs.size(); ++i) {
    if (!curve.mask[i]) continue;
    const double x = curve.curve.xs[i], v = curve.curve.values[i];
    if (!seen || v < e.min) e.min = v, e.argmin = x;
    if (!seen || v > e.max) e.max = v, e.argmax = x;
    seen = true;
  }
  if (!seen) throw ParameterError("curve_extremum: no trusted points");
  return e;
}

CurveComparison compare_curves(const PotentialCurve& a, const PotentialCurve& b) {
  if (a.curve.xs != b.curve.xs) throw ParameterError("compare_curves: grids differ");
  CurveComparison c;
  c.size_a = a.size_N;
  c.size_b = b.size_N;
  for (std::size_t i = 0; i < a.curve.xs.size(); ++i) {
    if (!a.mask[i] || !b.mask[i]) continue;
    c.sup_difference = std::max(c.sup_difference, std::abs(a.curve.values[i] - b.curve.values[i]));
    ++c.compared_points;
  }
  return c;
}

const CurveComparison& StabilityReport::compare(int size_a, int size_b) const {
  for (const auto& c : comparisons) {
    if (c.size_a == size_a && c.size_b == size_b) return c;
  }
  throw ParameterError("StabilityReport: no comparison for sizes " + std::to_string(size_a) +
                       ", " + std::to_string(size_b));
}

StabilityReport stability_scan(const SystemSpec& spec, const std::vector<double>& grid,
                               const std::vector<int>& sizes, Method method,
                               double denominator_floor) {
  if (sizes.empty()) throw ParameterError("stability_scan: no sizes");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw ParameterError("stability_scan: sizes must be ascending");
  }
  StabilityReport report;
  for (int n : sizes) {
    ReconstructionRequest req{spec.with_size(n), method, std::nullopt, grid, denominator_floor};
    report.curves.push_back(full_potential(reconstruct(req), spec.lambda()));
    report.extrema.push_back(curve_extremum(report.curves.back()));
  }
  for (std::size_t i = 0; i < report.curves.size(); ++i) {
    for (std::size_t j = i + 1; j < report.curves.size(); ++j) {
      report.comparisons.push_back(compare_curves(report.curves[i], report.curves[j]));
    }
  }
  return report;
}

Wavefunction assemble_wavefunction(const SystemSpec& spec, double energy,
                                   const std::vector<double>& grid, int n_terms,
                                   std::optional<double> weight) {
  if (!(energy > 0.0)) throw ParameterError("assemble_wavefunction: requires E > 0");
  if (n_terms < 1) throw ParameterError("assemble_wavefunction: n_terms must be positive");
  check_grid(grid);
  const SpectralPoint point = SpectralPoint::from_energy(energy, spec.lambda());
  const auto w = wilson::wilson_orthonormal_sequence(n_terms, point.y * point.y, spec.wilson());

  Wavefunction out;
  out.weight = weight ? *weight : wilson::weight_continuous(point.y, spec.wilson());
  if (!(out.weight >= 0.0)) throw ParameterError("assemble_wavefunction: weight must be >= 0");
  const double amplitude = std::sqrt(out.weight);
  const OscillatorBasis basis(spec.lambda(), spec.basis().parity(), n_terms + 1);

  out.psi.xs = grid;
  out.psi.values.resize(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto phi = basis.eval_all(grid[i]);
    double acc = 0.0;
    for (int n = 0; n < n_terms; ++n) acc += w[n] * phi[n];
    out.psi.values[i] = amplitude * acc;
    out.tail = std::max(out.tail, amplitude * std::abs(w[n_terms] * phi[n_terms]));
  }
  return out;
}

}  // namespace wracah
