#include "wracah/operator_matrices.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "wracah/errors.hpp"

namespace wracah {

SystemSpec::SystemSpec(const WilsonParams& wilson, Parity parity, int size)
    : wilson_(wilson), basis_(wilson.lambda, parity, size) {
  wilson_.validate();
  if (size < 2) throw ParameterError("SystemSpec: size must be at least 2");
  if (wilson_.mu != wilson_.nu || wilson_.a != wilson_.b) {
    throw ParameterError("SystemSpec: the closed-form Hamiltonian requires mu = nu and a = b");
  }
}

void GridFunction::validate() const {
  if (xs.empty()) throw ParameterError("GridFunction: empty grid");
  if (xs.size() != values.size()) throw ParameterError("GridFunction: length mismatch");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) throw ParameterError("GridFunction: grid must be strictly increasing");
  }
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw ParameterError("uniform_grid: need points >= 2 and hi > lo");
  std::vector<double> xs(static_cast<std::size_t>(points));
  const double h = (hi - lo) / (points - 1);
  for (int i = 0; i < points; ++i) xs[i] = lo + i * h;
  xs.back() = hi;
  return xs;
}

TridiagonalMatrix hamiltonian_matrix(const SystemSpec& spec) {
  const double lam2 = spec.lambda() * spec.lambda();
  const double mu = spec.wilson().mu, a = spec.wilson().a;
  const int size = spec.size();
  std::vector<double> diag(size), off(size - 1);
  for (int n = 0; n < size; ++n) {
    const double q = n + mu + a;
    diag[n] = 0.25 * lam2 *
              ((q - 0.5) * (q - 0.5) - (mu - 0.5) * (mu - 0.5) - (a - 0.5) * (a - 0.5) + 0.25);
  }
  for (int n = 0; n + 1 < size; ++n) {
    const double q = n + mu + a;
    const double den = q * q - 0.25;
    if (den == 0.0) {
      throw ZeroDenominatorError("hamiltonian_matrix: (n+mu+a)^2 = 1/4 at n = " + std::to_string(n),
                                 n);
    }
    const double radicand = (n + 1) * (n + 2 * mu) * (n + 2 * a) * (n + 2 * mu + 2 * a - 1) / den;
    if (radicand < 0.0) {
      throw ZeroDenominatorError(
          "hamiltonian_matrix: negative radicand at n = " + std::to_string(n), n);
    }
    off[n] = -0.125 * lam2 * q * std::sqrt(radicand);
  }
  return {std::move(diag), std::move(off), MatrixMeaning::hamiltonian};
}

RecursionCheck recursion_to_hamiltonian_check(const SystemSpec& spec, double energy, int n_max,
                                              double tolerance) {
  if (n_max < 2) throw ParameterError("recursion_to_hamiltonian_check: n_max must be >= 2");
  const SpectralPoint point = SpectralPoint::from_energy(energy, spec.lambda());
  const auto w = wilson::wilson_orthonormal_sequence(n_max - 1, point.y * point.y, spec.wilson());
  const TridiagonalMatrix h = hamiltonian_matrix(spec.with_size(n_max));
  const auto hw = h.multiply(w);

  RecursionCheck check;
  check.energy = energy;
  for (double v : w) check.scale = std::max(check.scale, std::abs(v));
  for (int n = 0; n < n_max - 1; ++n) {
    check.max_residual = std::max(check.max_residual, std::abs(hw[n] - energy * w[n]));
  }
  check.passed = check.max_residual <= tolerance * check.scale;
  return check;
}

TridiagonalMatrix potential_matrix(const SystemSpec& spec) {
  TridiagonalMatrix v = hamiltonian_matrix(spec) - kinetic_matrix(spec.basis());
  v.meaning = MatrixMeaning::potential;
  return v;
}

std::vector<double> eigen_spectrum(const TridiagonalMatrix& m, int count) {
  const auto n = static_cast<lapack_int>(m.size());
  if (count < 1 || count > n) {
    throw ParameterError("eigen_spectrum: count must lie in 1.." + std::to_string(n));
  }
  std::vector<double> d = m.diag;
  std::vector<double> e = m.offdiag;
  if (e.empty()) e.push_back(0.0);
  std::vector<double> w(n);
  std::vector<lapack_int> iblock(n), isplit(n);
  lapack_int found = 0, nsplit = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info =
      LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, count, abstol, d.data(), e.data(), &found, &nsplit,
                     w.data(), iblock.data(), isplit.data());
  if (info != 0 || found != count) {
    throw ParameterError("eigen_spectrum: bisection failed (info " + std::to_string(info) + ")");
  }
  w.resize(count);
  return w;
}

std::vector<double> fd_schrodinger_spectrum(const GridFunction& potential, int count) {
  potential.validate();
  const auto& xs = potential.xs;
  const std::size_t points = xs.size();
  if (points < 3) throw ParameterError("fd_schrodinger_spectrum: need at least 3 grid points");
  const double h = (xs.back() - xs.front()) / static_cast<double>(points - 1);
  for (std::size_t i = 1; i < points; ++i) {
    if (std::abs((xs[i] - xs[i - 1]) - h) > 1e-9 * h) {
      throw ParameterError("fd_schrodinger_spectrum: grid spacing must be uniform");
    }
  }
  for (double v : potential.values) {
    if (!std::isfinite(v)) throw ParameterError("fd_schrodinger_spectrum: potential not finite");
  }
  const std::size_t interior = points - 2;
  std::vector<double> diag(interior), off(interior - 1, -0.5 / (h * h));
  for (std::size_t i = 0; i < interior; ++i) diag[i] = 1.0 / (h * h) + potential.values[i + 1];
  return eigen_spectrum({std::move(diag), std::move(off)}, count);
}

}  // namespace wracah
