#pragma once

#include <vector>

#include "wracah/specfun.hpp"

#include "wracah/wilson.hpp"

namespace wracah {

/// Discrete Racah family on the grid m = 0..N.
struct RacahParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  int N = 1;

  /// Finite parameters, N >= 1, nonsingular 4F3 denominators. Enough for evaluation.
  void validate() const;
  /// delta == -(N + beta + 1)
  bool is_delta_consistent(double tol = 1e-12) const;
  /// alpha > -1, beta > -1, gamma > alpha + beta + N: the weight is positive on the
  /// whole grid and the orthonormal radicands are positive.
  bool orthogonality_domain() const;
  void validate_orthogonality() const;
};

namespace racah {

/// alpha = mu+a-1, gamma = mu+b-1, beta = nu+b-1, delta = mu-b.
RacahParams wilson_to_racah(const WilsonParams& p, int N);
WilsonParams racah_to_wilson(const RacahParams& r, double lambda = 1.0);

/// The bare 4F3(-n, -m, n+alpha+beta+1, m-beta+gamma-N; alpha+1, gamma+1, -N; 1),
/// summed in extended precision by default.
double racah_kernel(int n, int m, const RacahParams& r,
                    specfun::Precision precision = specfun::Precision::extended);

/// R~_n(m): Pochhammer prefactor times racah_kernel.
double racah_tilde(int n, int m, const RacahParams& r);

/// [R~_0(m), ..., R~_N(m)] from the three-term recursion, R~_{-1} = 0.
std::vector<double> racah_sequence(int m, const RacahParams& r);

/// Unnormalized weight (the m-dependent factor of the normalized weight).
double racah_weight_unnormalized(int m, const RacahParams& r);

/// Normalized weight rho^N(m); sums to 1 over m. Throws ParameterError if the
/// weight comes out non-positive.
double racah_weight(int m, const RacahParams& r);

/// Squared norm of the bare kernel under the unnormalized weight, in closed form.
double racah_kernel_norm(int n, const RacahParams& r);

/// Orthonormal R_n(m).
double racah_orthonormal(int n, int m, const RacahParams& r);

}  // namespace racah
}  // namespace wracah
