#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace wracah {

enum class MatrixMeaning { kinetic, position_sq, hamiltonian, potential, generic };

std::string_view to_string(MatrixMeaning m);

/// Symmetric tridiagonal matrix; offdiag[k] couples rows k and k+1.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;
  MatrixMeaning meaning = MatrixMeaning::generic;

  TridiagonalMatrix() = default;
  TridiagonalMatrix(std::vector<double> d, std::vector<double> off,
                    MatrixMeaning m = MatrixMeaning::generic);

  std::size_t size() const { return diag.size(); }
  /// Entry (i, j); zero outside the band.
  double at(std::size_t i, std::size_t j) const;
  std::vector<double> multiply(std::span<const double> v) const;
  /// Leading size x size block.
  TridiagonalMatrix truncated(std::size_t size) const;
};

TridiagonalMatrix operator+(const TridiagonalMatrix& lhs, const TridiagonalMatrix& rhs);
TridiagonalMatrix operator-(const TridiagonalMatrix& lhs, const TridiagonalMatrix& rhs);

/// c times the identity.
TridiagonalMatrix scaled_identity(std::size_t size, double c);

}  // namespace wracah
