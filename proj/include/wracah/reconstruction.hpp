#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "wracah/operator_matrices.hpp"

namespace wracah {

enum class Method { one, two };

std::string_view to_string(Method m);

inline constexpr double kDefaultDenominatorFloor = 1e-8;

struct ReconstructionRequest {
  SystemSpec spec;
  Method method = Method::one;
  std::optional<int> column;  ///< Method 2 only; defaults to 0
  std::vector<double> grid;
  double denominator_floor = kDefaultDenominatorFloor;
};

/// Sampled potential. values[i] is NaN wherever mask[i] is false.
struct PotentialCurve {
  GridFunction curve;
  Method method = Method::one;
  int size_N = 0;
  std::optional<int> column;
  std::vector<bool> mask;

  std::size_t trusted_count() const;
};

/// sum_{nm} V_nm phi_n(x) phi_m(x) / sum_n phi_n(x)^2; masked where the denominator is
/// below the floor.
PotentialCurve reconstruct_method1(const TridiagonalMatrix& v, const OscillatorBasis& basis,
                                   const std::vector<double>& grid,
                                   double denominator_floor = kDefaultDenominatorFloor);

/// sum_m phi_m(x) V_{nm} / phi_n(x) for one column n; masked where |phi_n(x)| is below
/// the floor.
PotentialCurve reconstruct_method2(const TridiagonalMatrix& v, const OscillatorBasis& basis,
                                   int column, const std::vector<double>& grid,
                                   double denominator_floor = kDefaultDenominatorFloor);

/// Reconstruct the potential-matrix curve of the request's system.
PotentialCurve reconstruct(const ReconstructionRequest& req);
PotentialCurve reconstruct_method1(const ReconstructionRequest& req);
PotentialCurve reconstruct_method2(const ReconstructionRequest& req);

/// 1/2 lambda^4 x^2
double counterterm(double x, double lambda);

/// Adds the counterterm on trusted points.
PotentialCurve full_potential(const PotentialCurve& curve, double lambda);

struct CurveComparison {
  int size_a = 0;
  int size_b = 0;
  double sup_difference = 0.0;  ///< over jointly trusted points
  std::size_t compared_points = 0;
};

struct CurveExtremum {
  int size_N = 0;
  double argmin = 0.0;
  double min = 0.0;
  double argmax = 0.0;
  double max = 0.0;
};

struct StabilityReport {
  std::vector<PotentialCurve> curves;  ///< full potential per size
  std::vector<CurveComparison> comparisons;
  std::vector<CurveExtremum> extrema;

  /// Comparison for a given pair of sizes; throws if absent.
  const CurveComparison& compare(int size_a, int size_b) const;
};

CurveExtremum curve_extremum(const PotentialCurve& curve);
CurveComparison compare_curves(const PotentialCurve& a, const PotentialCurve& b);

/// Reconstructs the full potential for every size (strictly ascending) and compares
/// all pairs.
StabilityReport stability_scan(const SystemSpec& spec, const std::vector<double>& grid,
                               const std::vector<int>& sizes, Method method = Method::one,
                               double denominator_floor = kDefaultDenominatorFloor);

struct Wavefunction {
  GridFunction psi;
  double weight = 0.0;     ///< rho(y) used as prefactor squared
  double tail = 0.0;       ///< sup_x sqrt(weight) |W_{n_terms} phi_{n_terms}(x)|
};

/// Continuous-spectrum wavefunction sqrt(rho(y)) sum_{n < n_terms} W_n(y^2) phi_n(x),
/// y = sqrt(2E)/lambda. `weight` overrides rho(y) when given.
Wavefunction assemble_wavefunction(const SystemSpec& spec, double energy,
                                   const std::vector<double>& grid, int n_terms,
                                   std::optional<double> weight = std::nullopt);

}  // namespace wracah
