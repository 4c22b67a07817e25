#pragma once

#include <vector>

#include "wracah/oscillator_basis.hpp"
#include "wracah/tridiagonal.hpp"
#include "wracah/wilson.hpp"

namespace wracah {

/// Wilson parameters restricted to mu = nu, a = b, with the matching oscillator basis.
class SystemSpec {
 public:
  SystemSpec(const WilsonParams& wilson, Parity parity, int size);

  const WilsonParams& wilson() const { return wilson_; }
  const OscillatorBasis& basis() const { return basis_; }
  int size() const { return basis_.size(); }
  double lambda() const { return wilson_.lambda; }

  SystemSpec with_size(int size) const { return {wilson_, basis_.parity(), size}; }

 private:
  WilsonParams wilson_;
  OscillatorBasis basis_;
};

/// Sampled function on a strictly increasing grid.
struct GridFunction {
  std::vector<double> xs;
  std::vector<double> values;

  void validate() const;
};

/// `points` equally spaced values from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, int points);

/// Hamiltonian of the mu = nu, a = b system in closed form.
TridiagonalMatrix hamiltonian_matrix(const SystemSpec& spec);

struct RecursionCheck {
  double energy = 0.0;
  double max_residual = 0.0;  ///< over rows n < n_max - 1
  double scale = 0.0;         ///< max |W_n|
  bool passed = false;
};

/// Substitutes W_n(y^2), y = sqrt(2E)/lambda, into H w = E w row by row.
RecursionCheck recursion_to_hamiltonian_check(const SystemSpec& spec, double energy, int n_max,
                                              double tolerance = 1e-8);

/// H - T in the parity sub-basis.
TridiagonalMatrix potential_matrix(const SystemSpec& spec);

/// The `count` smallest eigenvalues, ascending (Sturm bisection).
std::vector<double> eigen_spectrum(const TridiagonalMatrix& m, int count);

/// Lowest eigenvalues of -1/2 psi'' + V psi on a uniform grid, psi = 0 at both ends.
std::vector<double> fd_schrodinger_spectrum(const GridFunction& potential, int count);

}  // namespace wracah
