#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wracah/errors.hpp"
#include "wracah/reconstruction.hpp"

using namespace wracah;

namespace {

const WilsonParams kExample{0.8, 0.8, 1.0, 1.0, 0.2};

TridiagonalMatrix random_band(testing::Sampler& s, int n) {
  std::vector<double> d(n), e(n - 1);
  for (double& x : d) x = s.uniform(-1.0, 1.0);
  for (double& x : e) x = s.uniform(-1.0, 1.0);
  return {d, e};
}

}  // namespace

TEST_CASE("identity matrix reconstructs to a constant") {
  const OscillatorBasis basis(0.2, Parity::odd, 30);
  const auto grid = uniform_grid(-15.0, 15.0, 61);
  const auto ident = scaled_identity(30, -1.25);
  const auto m1 = reconstruct_method1(ident, basis, grid);
  CHECK(m1.method == Method::one);
  CHECK(m1.size_N == 30);
  CHECK_FALSE(m1.column.has_value());
  for (int col : {0, 5, 29}) {
    const auto m2 = reconstruct_method2(ident, basis, col, grid);
    CHECK(m2.column == col);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (m2.mask[i]) CHECK(m2.curve.values[i] == doctest::Approx(-1.25).epsilon(1e-12));
      else CHECK(std::isnan(m2.curve.values[i]));
    }
  }
  // x = 0 is a node of every odd function.
  CHECK_FALSE(m1.mask[30]);
  CHECK(std::isnan(m1.curve.values[30]));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (m1.mask[i]) CHECK(m1.curve.values[i] == doctest::Approx(-1.25).epsilon(1e-12));
  }
  CHECK(m1.trusted_count() == grid.size() - 1);
}

TEST_CASE("property: both methods match direct summation") {
  testing::Sampler s(0x5eed51);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = s.integer(2, 25);
    const double lam = s.uniform(0.1, 1.5);
    const OscillatorBasis basis(lam, trial % 2 ? Parity::odd : Parity::even, n);
    const auto v = random_band(s, n);
    std::vector<double> grid;
    for (int i = 0; i < 15; ++i) grid.push_back(s.uniform(-3.0, 3.0) / lam);
    std::sort(grid.begin(), grid.end());
    const int col = s.integer(0, n - 1);
    const auto m1 = reconstruct_method1(v, basis, grid);
    const auto m2 = reconstruct_method2(v, basis, col, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const auto phi = basis.eval_all(grid[i]);
      double num = 0.0, den = 0.0, row = 0.0;
      for (int j = 0; j < n; ++j) {
        den += phi[j] * phi[j];
        for (int k = 0; k < n; ++k) num += v.at(j, k) * phi[j] * phi[k];
        row += phi[j] * v.at(j, col);
      }
      if (m1.mask[i]) CHECK(std::abs(m1.curve.values[i] - num / den) <= 1e-10 * (1 + std::abs(num / den)));
      if (m2.mask[i]) {
        const double want = row / phi[col];
        CHECK(std::abs(m2.curve.values[i] - want) <= 1e-9 * (1 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("x^2 band matrix: edge error and interior columns") {
  const double lam = 0.3;
  const OscillatorBasis basis(lam, Parity::even, 25), wider(lam, Parity::even, 26);
  const auto x2 = position_sq_matrix(basis);
  const auto grid = uniform_grid(-3.0 / lam, 3.0 / lam, 81);
  const auto m1 = reconstruct_method1(x2, basis, grid);
  const double coupling = position_sq_matrix(wider).offdiag[24];
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto phi = wider.eval_all(grid[i]);
    double den = 0.0;
    for (int k = 0; k < 25; ++k) den += phi[k] * phi[k];
    const double predicted = counterterm(grid[i], lam) - coupling * phi[24] * phi[25] / den;
    CHECK(std::abs(m1.curve.values[i] - predicted) <= 1e-12);
  }
  const auto m2 = reconstruct_method2(x2, basis, 10, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (m2.mask[i]) CHECK(std::abs(m2.curve.values[i] - counterterm(grid[i], lam)) <= 1e-9);
  }
  // The last column lacks its upper neighbour.
  const auto last = reconstruct_method2(x2, basis, 24, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (last.mask[i]) worst = std::max(worst, std::abs(last.curve.values[i] - counterterm(grid[i], lam)));
  }
  CHECK(worst > 1e-3);
}

TEST_CASE("requests, masks and the full potential") {
  const SystemSpec spec(kExample, Parity::even, 30);
  const auto grid = uniform_grid(-20.0, 20.0, 161);
  const auto curve = reconstruct({spec, Method::one, std::nullopt, grid});
  CHECK(curve.trusted_count() == grid.size());
  const auto col0 = reconstruct({spec, Method::two, std::nullopt, grid});
  CHECK(col0.column == 0);
  CHECK(col0.method == Method::two);
  const auto col3 = reconstruct_method2({spec, Method::two, 3, grid});
  CHECK(col3.column == 3);
  CHECK(col3.trusted_count() == grid.size());
  // h_2 vanishes at z = 1/sqrt(2), so column 1 is masked there.
  const double node = 1.0 / (0.2 * std::sqrt(2.0));
  const auto col1 = reconstruct_method2({spec, Method::two, 1, {0.0, node, 2 * node}});
  CHECK(col1.mask == std::vector<bool>{true, false, true});

  const auto full = full_potential(curve, 0.2);
  CHECK(full.mask == curve.mask);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(full.curve.values[i] - curve.curve.values[i] ==
          doctest::Approx(0.5 * 0.0016 * grid[i] * grid[i]).epsilon(1e-12));
  }
  CHECK(counterterm(0.0, 0.2) == 0.0);
  CHECK(counterterm(10.0, 0.2) == doctest::Approx(0.08).epsilon(1e-15));

  // A huge floor masks every point.
  const auto none = reconstruct({spec, Method::one, std::nullopt, grid, 1e6});
  CHECK(none.trusted_count() == 0);

  CHECK_THROWS_AS(reconstruct_method2({spec, Method::two, 30, grid}), ParameterError);
  CHECK_THROWS_AS(reconstruct({spec, Method::one, std::nullopt, {1.0, 0.0}}), ParameterError);
  CHECK_THROWS_AS(reconstruct({spec, Method::one, std::nullopt, {}}), ParameterError);
  CHECK_THROWS_AS(reconstruct_method1(scaled_identity(5, 1.0), spec.basis(), grid), ParameterError);
}

TEST_CASE("stability scan bookkeeping") {
  const SystemSpec spec(kExample, Parity::even, 10);
  const auto grid = uniform_grid(-10.0, 10.0, 41);
  const auto single = stability_scan(spec, grid, {12});
  CHECK(single.curves.size() == 1);
  CHECK(single.comparisons.empty());
  CHECK(single.extrema.at(0).size_N == 12);

  const auto scan = stability_scan(spec, grid, {8, 12, 16});
  CHECK(scan.comparisons.size() == 3);
  const auto& c = scan.compare(8, 16);
  CHECK(c.compared_points == grid.size());
  double sup = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sup = std::max(sup, std::abs(scan.curves[0].curve.values[i] - scan.curves[2].curve.values[i]));
  }
  CHECK(c.sup_difference == sup);
  CHECK_THROWS_AS(scan.compare(16, 8), ParameterError);
  for (const auto& e : scan.extrema) {
    CHECK(e.min <= e.max);
    CHECK(e.argmin >= -10.0);
    CHECK(e.argmax <= 10.0);
  }
  CHECK_THROWS_AS(stability_scan(spec, grid, {12, 8}), ParameterError);
  CHECK_THROWS_AS(stability_scan(spec, grid, {}), ParameterError);
}

TEST_CASE("continuum wavefunction") {
  const SystemSpec spec(kExample, Parity::even, 30);
  const auto grid = uniform_grid(-30.0, 30.0, 121);
  const auto w1 = assemble_wavefunction(spec, 0.02, grid, 30, 1.0);
  const auto w2 = assemble_wavefunction(spec, 0.02, grid, 30, 2.0);
  CHECK(w1.weight == 1.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(w2.psi.values[i] == doctest::Approx(std::sqrt(2.0) * w1.psi.values[i]).epsilon(1e-13));
    CHECK(w1.psi.values[i] == doctest::Approx(w1.psi.values[grid.size() - 1 - i]).epsilon(1e-12));
  }
  CHECK(w2.tail == doctest::Approx(std::sqrt(2.0) * w1.tail).epsilon(1e-13));
  CHECK(std::isfinite(w1.tail));

  const auto natural = assemble_wavefunction(spec, 0.02, grid, 30);
  CHECK(natural.weight ==
        doctest::Approx(wilson::weight_continuous(1.0, spec.wilson())).epsilon(1e-14));

  // psi is an eigenfunction of the truncated matrix up to the last row.
  const auto h = hamiltonian_matrix(spec.with_size(31));
  const auto w = wilson::wilson_orthonormal_sequence(30, 1.0, spec.wilson());
  const auto hw = h.multiply(w);
  for (int n = 0; n < 29; ++n) CHECK(std::abs(hw[n] - 0.02 * w[n]) <= 1e-10);

  CHECK_THROWS_AS(assemble_wavefunction(spec, 0.0, grid, 10), ParameterError);
  CHECK_THROWS_AS(assemble_wavefunction(spec, 0.02, grid, 0), ParameterError);
  CHECK_THROWS_AS(assemble_wavefunction(spec, 0.02, grid, 10, -1.0), ParameterError);
}
