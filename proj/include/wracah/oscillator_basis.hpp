#pragma once

#include <string_view>
#include <vector>

#include "wracah/tridiagonal.hpp"

namespace wracah {

enum class Parity { even, odd };

std::string_view to_string(Parity p);
Parity parse_parity(std::string_view text);

/// phi_k(x) = sqrt(lambda) h_{n(k)}(lambda x), n(k) = 2k (even) or 2k+1 (odd), with h the
/// orthonormal Hermite function. Orthonormal on the line with measure dx.
class OscillatorBasis {
 public:
  OscillatorBasis(double lambda, Parity parity, int size);

  double lambda() const { return lambda_; }
  Parity parity() const { return parity_; }
  int size() const { return size_; }

  int hermite_index(int k) const { return 2 * k + (parity_ == Parity::odd ? 1 : 0); }

  double eval(int k, double x) const;
  /// phi_0(x) .. phi_{size-1}(x).
  std::vector<double> eval_all(double x) const;

 private:
  double lambda_;
  Parity parity_;
  int size_;
};

/// -1/2 d^2/dx^2 in the parity sub-basis.
TridiagonalMatrix kinetic_matrix(const OscillatorBasis& basis);

/// 1/2 lambda^4 x^2 in the parity sub-basis.
TridiagonalMatrix position_sq_matrix(const OscillatorBasis& basis);

}  // namespace wracah
