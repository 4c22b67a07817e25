#include "wracah/oscillator_basis.hpp"

#include <cmath>
#include <string>

#include "wracah/errors.hpp"
#include "wracah/specfun.hpp"

namespace wracah {

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw ParameterError("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

OscillatorBasis::OscillatorBasis(double lambda, Parity parity, int size)
    : lambda_(lambda), parity_(parity), size_(size) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("OscillatorBasis: lambda must be positive");
  }
  if (size < 1) throw ParameterError("OscillatorBasis: size must be positive");
}

double OscillatorBasis::eval(int k, double x) const {
  if (k < 0 || k >= size_) throw ParameterError("OscillatorBasis::eval: index out of range", k);
  return std::sqrt(lambda_) * specfun::hermite_function(hermite_index(k), lambda_ * x);
}

std::vector<double> OscillatorBasis::eval_all(double x) const {
  const auto h = specfun::hermite_function_sequence(hermite_index(size_ - 1), lambda_ * x);
  const double scale = std::sqrt(lambda_);
  std::vector<double> out(static_cast<std::size_t>(size_));
  for (int k = 0; k < size_; ++k) out[k] = scale * h[hermite_index(k)];
  return out;
}

namespace {

TridiagonalMatrix band_matrix(const OscillatorBasis& basis, double off_sign, MatrixMeaning m) {
  const double q = 0.25 * basis.lambda() * basis.lambda();
  const int n = basis.size();
  std::vector<double> diag(n), off(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = q * (2.0 * basis.hermite_index(k) + 1.0);
  for (int k = 0; k + 1 < n; ++k) {
    const double up = basis.hermite_index(k + 1);
    off[k] = off_sign * q * std::sqrt(up * (up - 1.0));
  }
  return {std::move(diag), std::move(off), m};
}

}  // namespace

TridiagonalMatrix kinetic_matrix(const OscillatorBasis& basis) {
  return band_matrix(basis, -1.0, MatrixMeaning::kinetic);
}

TridiagonalMatrix position_sq_matrix(const OscillatorBasis& basis) {
  return band_matrix(basis, 1.0, MatrixMeaning::position_sq);
}

}  // namespace wracah
