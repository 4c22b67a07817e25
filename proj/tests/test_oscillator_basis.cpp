#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wracah/errors.hpp"
#include "wracah/oscillator_basis.hpp"

using namespace wracah;

namespace {

// Integral of phi_j phi_k over the line, by Gauss-Hermite in z = lambda x.
double overlap(const OscillatorBasis& basis, int j, int k, const testing::GaussHermite& gh) {
  const double lam = basis.lambda();
  double sum = 0.0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    const double z = gh.nodes[i];
    sum += gh.weights[i] * std::exp(z * z) * basis.eval(j, z / lam) * basis.eval(k, z / lam);
  }
  return sum / lam;
}

}  // namespace

TEST_CASE("basis evaluation") {
  const OscillatorBasis even(0.2, Parity::even, 5);
  CHECK(even.hermite_index(3) == 6);
  CHECK(OscillatorBasis(0.2, Parity::odd, 5).hermite_index(3) == 7);
  const double lam = 0.2;
  const double phi0 = std::sqrt(lam) * std::pow(std::numbers::pi, -0.25);
  CHECK(even.eval(0, 0.0) == doctest::Approx(phi0).epsilon(1e-15));
  CHECK(even.eval(0, 3.0) == doctest::Approx(phi0 * std::exp(-0.5 * 0.36)).epsilon(1e-14));
  // h_2(z) = (2z^2 - 1) / (sqrt(2) pi^{1/4}) e^{-z^2/2}
  const double z = lam * 4.0;
  CHECK(even.eval(1, 4.0) ==
        doctest::Approx(std::sqrt(lam) * (2 * z * z - 1) / std::sqrt(2.0) *
                        std::pow(std::numbers::pi, -0.25) * std::exp(-z * z / 2))
            .epsilon(1e-14));
  const OscillatorBasis odd(lam, Parity::odd, 3);
  CHECK(odd.eval(0, 0.0) == 0.0);
  CHECK(odd.eval(2, -1.7) == doctest::Approx(-odd.eval(2, 1.7)).epsilon(1e-15));
  CHECK(even.eval(4, -2.3) == doctest::Approx(even.eval(4, 2.3)).epsilon(1e-15));

  const auto all = even.eval_all(1.3);
  REQUIRE(all.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(all[k] == doctest::Approx(even.eval(k, 1.3)).epsilon(1e-14));

  CHECK_THROWS_AS(OscillatorBasis(0.0, Parity::even, 3), ParameterError);
  CHECK_THROWS_AS(OscillatorBasis(0.2, Parity::even, 0), ParameterError);
  CHECK(parse_parity("odd") == Parity::odd);
  CHECK(to_string(Parity::even) == "even");
  CHECK_THROWS_AS(parse_parity("both"), ParameterError);
}

TEST_CASE("property: basis is orthonormal") {
  const auto gh = testing::gauss_hermite(64);
  for (double lam : {0.2, 1.0, 2.5}) {
    for (Parity par : {Parity::even, Parity::odd}) {
      const OscillatorBasis basis(lam, par, 21);
      double worst = 0.0;
      for (int j = 0; j <= 20; ++j) {
        for (int k = 0; k <= 20; ++k) {
          worst = std::max(worst, std::abs(overlap(basis, j, k, gh) - (j == k ? 1.0 : 0.0)));
        }
      }
      CHECK(worst <= 1e-10);
    }
  }
}

TEST_CASE("kinetic matrix entries") {
  const auto t = kinetic_matrix(OscillatorBasis(0.2, Parity::even, 4));
  CHECK(t.meaning == MatrixMeaning::kinetic);
  CHECK(t.diag[0] == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(t.offdiag[0] == doctest::Approx(-0.01 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(t.diag[1] == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(t.offdiag[1] == doctest::Approx(-0.01 * std::sqrt(12.0)).epsilon(1e-15));
  const auto to = kinetic_matrix(OscillatorBasis(0.2, Parity::odd, 3));
  CHECK(to.diag[0] == doctest::Approx(0.03).epsilon(1e-15));
  CHECK(to.offdiag[0] == doctest::Approx(-0.01 * std::sqrt(6.0)).epsilon(1e-15));
}

TEST_CASE("kinetic matrix against finite-difference quadrature") {
  const double lam = 0.7;
  for (Parity par : {Parity::even, Parity::odd}) {
    const OscillatorBasis basis(lam, par, 5);
    const auto t = kinetic_matrix(basis);
    const double h = 1e-3, L = 25.0;
    for (int j = 0; j < 4; ++j) {
      for (int k = j; k <= j + 1; ++k) {
        double sum = 0.0;
        for (double x = -L; x <= L; x += h) {
          const double d2 =
              (basis.eval(k, x + h) - 2 * basis.eval(k, x) + basis.eval(k, x - h)) / (h * h);
          sum += -0.5 * basis.eval(j, x) * d2 * h;
        }
        CHECK(std::abs(sum - t.at(j, k)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("property: kinetic plus position term is the diagonal oscillator") {
  testing::Sampler s(0x5eed31);
  for (int trial = 0; trial < 20; ++trial) {
    const double lam = s.uniform(0.05, 3.0);
    const Parity par = trial % 2 ? Parity::odd : Parity::even;
    const OscillatorBasis basis(lam, par, 30);
    const auto x2 = position_sq_matrix(basis);
    CHECK(x2.meaning == MatrixMeaning::position_sq);
    const auto sum = kinetic_matrix(basis) + x2;
    for (int k = 0; k < 30; ++k) {
      CHECK(testing::rel_err(sum.diag[k], lam * lam * (basis.hermite_index(k) + 0.5)) <= 1e-14);
    }
    for (double e : sum.offdiag) CHECK(std::abs(e) <= 1e-14 * lam * lam * 60);
  }
}

TEST_CASE("truncation keeps leading blocks") {
  for (Parity par : {Parity::even, Parity::odd}) {
    const auto big = kinetic_matrix(OscillatorBasis(0.3, par, 20));
    const auto small = kinetic_matrix(OscillatorBasis(0.3, par, 10));
    const auto cut = big.truncated(10);
    CHECK(cut.diag == small.diag);
    CHECK(cut.offdiag == small.offdiag);
    const auto xb = position_sq_matrix(OscillatorBasis(0.3, par, 20)).truncated(7);
    const auto xs = position_sq_matrix(OscillatorBasis(0.3, par, 7));
    CHECK(xb.diag == xs.diag);
    CHECK(xb.offdiag == xs.offdiag);
  }
}

TEST_CASE("even basis resolves an even Gaussian") {
  // Parseval: sum of squared coefficients approaches the norm of f.
  const double lam = 1.0, width = 1.3;
  const OscillatorBasis basis(lam, Parity::even, 30);
  const double h = 2e-3;
  std::vector<double> coef(30, 0.0);
  double norm = 0.0;
  for (double x = -30.0; x <= 30.0; x += h) {
    const double f = std::exp(-x * x / (2 * width * width));
    norm += f * f * h;
    const auto phi = basis.eval_all(x);
    for (int k = 0; k < 30; ++k) coef[k] += f * phi[k] * h;
  }
  double parseval = 0.0;
  for (double c : coef) parseval += c * c;
  CHECK(std::abs(parseval / norm - 1.0) <= 1e-8);

  // The odd sector sees nothing of it.
  const OscillatorBasis odd(lam, Parity::odd, 5);
  double c0 = 0.0;
  for (double x = -30.0; x <= 30.0; x += h) c0 += std::exp(-x * x / (2 * width * width)) * odd.eval(0, x) * h;
  CHECK(std::abs(c0) <= 1e-12);
}
