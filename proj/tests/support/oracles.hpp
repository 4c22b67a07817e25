// Independent reference implementations used only by the tests. None of these share
// code with the library.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace wracah::testing {

/// Fixed-seed generator for property tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

/// Gamma(z) from the g = 7, 9-term Lanczos series with reflection.
inline std::complex<double> gamma_lanczos7(std::complex<double> z) {
  constexpr double pi = std::numbers::pi;
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5) return pi / (std::sin(pi * z) * gamma_lanczos7(1.0 - z));
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + double(i));
  const std::complex<double> t = z + 7.5;
  return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

/// Gauss-Hermite nodes/weights for the weight exp(-z^2), Newton iteration on the
/// normalized recurrence.
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussHermite gauss_hermite(int n) {
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  GaussHermite g{std::vector<double>(n), std::vector<double>(n)};
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(double(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * g.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * g.nodes[1];
    } else {
      z = 2.0 * z - g.nodes[i - 2];
    }
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 3e-15 * std::max(1.0, std::abs(z))) break;
    }
    g.nodes[i] = z;
    g.nodes[n - 1 - i] = -z;
    g.weights[i] = g.weights[n - 1 - i] = 2.0 / (pp * pp);
  }
  return g;
}

/// Eigenvalues of a symmetric tridiagonal matrix as roots of its characteristic
/// polynomial: dense sign-change scan over the Gershgorin interval, then bisection.
inline std::vector<double> charpoly_eigenvalues(const std::vector<double>& d,
                                                const std::vector<double>& e) {
  const std::size_t n = d.size();
  auto charpoly = [&](double x) {
    // Scaled to avoid overflow; only the sign matters.
    double p0 = 1.0, p1 = d[0] - x;
    for (std::size_t k = 1; k < n; ++k) {
      const double p2 = (d[k] - x) * p1 - e[k - 1] * e[k - 1] * p0;
      p0 = p1;
      p1 = p2;
      const double s = std::max(std::abs(p0), std::abs(p1));
      if (s > 1e100) {
        p0 /= s;
        p1 /= s;
      }
    }
    return p1;
  };
  double lo = d[0], hi = d[0];
  for (std::size_t k = 0; k < n; ++k) {
    double r = 0.0;
    if (k > 0) r += std::abs(e[k - 1]);
    if (k + 1 < n) r += std::abs(e[k]);
    lo = std::min(lo, d[k] - r);
    hi = std::max(hi, d[k] + r);
  }
  lo -= 1e-9;
  hi += 1e-9;
  std::vector<double> roots;
  const int steps = 200000;
  double xa = lo, fa = charpoly(xa);
  for (int i = 1; i <= steps; ++i) {
    const double xb = lo + (hi - lo) * i / steps;
    const double fb = charpoly(xb);
    if (fa == 0.0) {
      roots.push_back(xa);
    } else if ((fa < 0) != (fb < 0)) {
      double a = xa, b = xb, f = fa;
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = charpoly(mid);
        if ((fm < 0) == (f < 0)) {
          a = mid;
          f = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    xa = xb;
    fa = fb;
  }
  return roots;
}

}  // namespace wracah::testing
