#pragma once

#include <complex>
#include <span>
#include <vector>

#include "wracah/specfun.hpp"

namespace wracah {

/// Wilson polynomial parameters (mu, nu, a, b) and the inverse length scale lambda
/// (atomic units, hbar = m = 1).
struct WilsonParams {
  double mu = 0.0;
  double nu = 0.0;
  double a = 0.0;
  double b = 0.0;
  double lambda = 1.0;

  /// mu + nu + a + b
  double total() const { return mu + nu + a + b; }

  /// Finite parameters and lambda > 0; throws ParameterError otherwise.
  void validate() const;
  /// All six pairwise sums positive: the continuous weight is a probability density.
  bool orthogonality_mode() const;
  void require_orthogonality_mode() const;
  /// mu < 0 with mu+nu, mu+a, mu+b > 0.
  bool bound_state_mode() const;
};

/// Dimensionless energy variable y = sqrt(2E)/lambda paired with the energy E.
struct SpectralPoint {
  double y = 0.0;
  double energy = 0.0;

  static SpectralPoint from_energy(double energy, double lambda);
  static SpectralPoint from_y(double y, double lambda);
};

namespace wilson {

/// Coefficients of the monic-normalized three-term relation
///   y^2 W~_n = diag W~_n - lower W~_{n-1} - upper W~_{n+1}.
struct RecursionRow {
  double diag = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

RecursionRow recursion_row(int n, const WilsonParams& p);

/// W~_n(y^2) from its terminating 4F3 representation. The alternating sum cancels
/// heavily for n >~ 10, so the series is summed in extended precision by default.
double wilson_tilde(int n, double y_sq, const WilsonParams& p,
                    specfun::Precision precision = specfun::Precision::extended);

/// [W~_0, ..., W~_{n_max}] from the three-term recursion.
std::vector<double> wilson_sequence(int n_max, double y_sq, const WilsonParams& p);

/// Factor N_n with W_n = N_n W~_n; evaluated in log space.
double orthonormal_factor(int n, const WilsonParams& p);

double wilson_orthonormal(int n, double y_sq, const WilsonParams& p,
                          specfun::Precision precision = specfun::Precision::extended);

/// Jacobi-matrix entries of the orthonormal recursion
///   y^2 W_n = diagonal(n) W_n - offdiagonal(n-1) W_{n-1} - offdiagonal(n) W_{n+1}.
double jacobi_diagonal(int n, const WilsonParams& p);
double jacobi_offdiagonal(int n, const WilsonParams& p);

std::vector<double> wilson_orthonormal_sequence(int n_max, double y_sq, const WilsonParams& p);

/// Normalized continuous weight rho(y), y > 0.
double weight_continuous(double y, const WilsonParams& p);

/// A(iy) = Gamma(2iy) / (Gamma(mu+iy) Gamma(nu+iy) Gamma(a+iy) Gamma(b+iy)).
std::complex<double> scattering_amplitude(double y, const WilsonParams& p);
double scattering_amplitude_abs(double y, const WilsonParams& p);

/// arg A(iy) reduced to (-pi, pi].
double phase_shift(double y, const WilsonParams& p);

/// Continuity-based unwrapping of a sampled phase curve.
std::vector<double> unwrap_phase(std::span<const double> principal);

struct BoundState {
  int m = 0;
  double energy = 0.0;
};

struct BoundSpectrum {
  std::vector<BoundState> states;
  /// True when -mu is an integer, i.e. the zero-energy level m = -mu exists but is
  /// not listed.
  bool edge_level_excluded = false;
};

/// E_m = -(lambda^2/2)(m+mu)^2 for every m >= 0 with m + mu < 0. Empty for mu >= 0.
BoundSpectrum bound_state_energies(const WilsonParams& p);

/// Leading large-n behaviour of W~_n and its envelope (cosine replaced by 1).
double asymptotic_wilson_tilde(int n, double y, const WilsonParams& p);
double asymptotic_envelope_tilde(int n, double y, const WilsonParams& p);
/// Leading large-n behaviour of the orthonormal W_n.
double asymptotic_wilson_orthonormal(int n, double y, const WilsonParams& p);

struct InnerProduct {
  double value = 0.0;
  double error_estimate = 0.0;
  double upper_limit = 0.0;
};

/// Integral of rho(y) W_n(y^2) W_m(y^2) over y in (0, infinity).
InnerProduct continuous_inner_product(int n, int m, const WilsonParams& p,
                                      double tail_tolerance = 1e-14);

}  // namespace wilson
}  // namespace wracah
