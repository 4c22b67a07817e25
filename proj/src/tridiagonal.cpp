#include "wracah/tridiagonal.hpp"

#include <cmath>

#include "wracah/errors.hpp"

namespace wracah {

std::string_view to_string(MatrixMeaning m) {
  switch (m) {
    case MatrixMeaning::kinetic: return "kinetic";
    case MatrixMeaning::position_sq: return "position_sq";
    case MatrixMeaning::hamiltonian: return "hamiltonian";
    case MatrixMeaning::potential: return "potential";
    case MatrixMeaning::generic: break;
  }
  return "generic";
}

TridiagonalMatrix::TridiagonalMatrix(std::vector<double> d, std::vector<double> off,
                                     MatrixMeaning m)
    : diag(std::move(d)), offdiag(std::move(off)), meaning(m) {
  if (diag.empty()) throw ParameterError("TridiagonalMatrix: empty diagonal");
  if (offdiag.size() + 1 != diag.size()) {
    throw ParameterError("TridiagonalMatrix: off-diagonal must have size-1 entries");
  }
  for (double v : diag) {
    if (!std::isfinite(v)) throw ParameterError("TridiagonalMatrix: non-finite entry");
  }
  for (double v : offdiag) {
    if (!std::isfinite(v)) throw ParameterError("TridiagonalMatrix: non-finite entry");
  }
}

double TridiagonalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= size() || j >= size()) throw ParameterError("TridiagonalMatrix::at: index out of range");
  if (i == j) return diag[i];
  if (i + 1 == j) return offdiag[i];
  if (j + 1 == i) return offdiag[j];
  return 0.0;
}

std::vector<double> TridiagonalMatrix::multiply(std::span<const double> v) const {
  if (v.size() != size()) throw ParameterError("TridiagonalMatrix::multiply: size mismatch");
  const std::size_t n = size();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * v[i];
    if (i > 0) acc += offdiag[i - 1] * v[i - 1];
    if (i + 1 < n) acc += offdiag[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

TridiagonalMatrix TridiagonalMatrix::truncated(std::size_t n) const {
  if (n == 0 || n > size()) throw ParameterError("TridiagonalMatrix::truncated: bad size");
  return {std::vector<double>(diag.begin(), diag.begin() + n),
          std::vector<double>(offdiag.begin(), offdiag.begin() + (n - 1)), meaning};
}

namespace {

TridiagonalMatrix combine(const TridiagonalMatrix& lhs, const TridiagonalMatrix& rhs, double sign) {
  if (lhs.size() != rhs.size()) throw ParameterError("TridiagonalMatrix: size mismatch");
  TridiagonalMatrix out = lhs;
  out.meaning = MatrixMeaning::generic;
  for (std::size_t i = 0; i < out.diag.size(); ++i) out.diag[i] += sign * rhs.diag[i];
  for (std::size_t i = 0; i < out.offdiag.size(); ++i) out.offdiag[i] += sign * rhs.offdiag[i];
  return out;
}

}  // namespace

TridiagonalMatrix operator+(const TridiagonalMatrix& lhs, const TridiagonalMatrix& rhs) {
  return combine(lhs, rhs, 1.0);
}

TridiagonalMatrix operator-(const TridiagonalMatrix& lhs, const TridiagonalMatrix& rhs) {
  return combine(lhs, rhs, -1.0);
}

TridiagonalMatrix scaled_identity(std::size_t size, double c) {
  if (size == 0) throw ParameterError("scaled_identity: empty matrix");
  return {std::vector<double>(size, c), std::vector<double>(size - 1, 0.0)};
}

}  // namespace wracah
