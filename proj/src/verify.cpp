#include "wracah/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wracah/errors.hpp"
#include "wracah/operator_matrices.hpp"
#include "wracah/racah.hpp"
#include "wracah/reconstruction.hpp"
#include "wracah/specfun.hpp"
#include "wracah/wilson.hpp"

namespace wracah::verify {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

WilsonParams figure_system() { return {0.8, 0.8, 1.0, 1.0, 0.2}; }

void specfun_suite(VerifyReport& r) {
  using namespace specfun;
  r.expect_at_most("log_gamma(1) = 0", std::abs(log_gamma_complex({1.0, 0.0})), 1e-14);
  r.expect_at_most("log_gamma(1/2) = ln sqrt(pi)",
                   std::abs(log_gamma_complex({0.5, 0.0}) - Complex(0.5 * std::log(kPi), 0.0)),
                   1e-14);
  double worst = 0.0;
  for (Complex z : {Complex(0.3, 0.2), Complex(2.5, -4.0), Complex(7.0, 11.0), Complex(0.6, 30.0)}) {
    const Complex lhs = std::exp(log_gamma_complex(z + 1.0));
    const Complex rhs = z * std::exp(log_gamma_complex(z));
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  r.expect_at_most("Gamma(z+1) = z Gamma(z)", worst, 1e-11);
  const double y = 0.7;
  r.expect_at_most("|Gamma(iy)|^2 reflection",
                   rel_err(abs_gamma_sq({0.0, y}), kPi / (y * std::sinh(kPi * y))), 1e-12);
  r.expect_at_most("(2)_3 = 24", std::abs(pochhammer(2.0, 3) - 24.0), 0.0);
  HypSeriesSpec two_term{{-1.0, 1.5, 2.5, 3.5}, {0.5, 1.25, 4.0}, 1.0, 1, std::nullopt};
  r.expect_at_most("4F3 two-term closed form",
                   std::abs(hyp4f3_terminating(two_term) - (1.0 - 1.5 * 2.5 * 3.5 / (0.5 * 1.25 * 4.0))),
                   1e-14);
  r.expect_at_most("h_0(0) = pi^(-1/4)",
                   std::abs(hermite_function(0, 0.0) - std::pow(kPi, -0.25)), 1e-15);
  r.expect_at_most("H_3(1) = -4", std::abs(hermite_polynomial(3, 1.0) + 4.0), 0.0);
}

void wilson_suite(VerifyReport& r) {
  double worst = 0.0;
  const WilsonParams sets[] = {{0.8, 0.8, 1.0, 1.0, 1.0}, {0.3, 1.2, 0.7, 2.1, 1.0},
                               {1.5, 0.4, 0.9, 0.6, 1.0}, {2.0, 2.0, 0.25, 3.0, 1.0},
                               {0.6, 1.7, 1.1, 0.45, 1.0}};
  for (const auto& p : sets) {
    for (double y : {0.1, 0.5, 1.0, 2.0, 3.5}) {
      const auto seq = wilson::wilson_sequence(15, y * y, p);
      for (int n = 0; n <= 15; ++n) {
        const double direct = wilson::wilson_tilde(n, y * y, p);
        worst = std::max(worst, std::abs(seq[n] - direct) / std::max(std::abs(direct), 1e-12));
      }
    }
  }
  r.expect_at_most("recursion matches 4F3 definition (n <= 15, 25 points)", worst, 1e-9);

  const WilsonParams p{0.8, 0.8, 1.0, 1.0, 1.0};
  double ortho = 0.0;
  for (int n = 0; n <= 3; ++n) {
    for (int m = n; m <= 3; ++m) {
      const double v = wilson::continuous_inner_product(n, m, p).value;
      ortho = std::max(ortho, std::abs(v - (n == m ? 1.0 : 0.0)));
    }
  }
  r.expect_at_most("continuous orthonormality (n, m <= 3)", ortho, 1e-6);

  const auto bound = wilson::bound_state_energies({-5.0, 5.5, 5.5, 5.5, 0.2});
  const double expected[] = {-0.5, -0.32, -0.18, -0.08, -0.02};
  double bound_err = bound.states.size() == 5 ? 0.0 : 1.0;
  for (std::size_t m = 0; m < std::min<std::size_t>(5, bound.states.size()); ++m) {
    bound_err = std::max(bound_err, std::abs(bound.states[m].energy - expected[m]));
  }
  r.expect_at_most("bound spectrum at lambda = 0.2, mu = -5", bound_err, 1e-14);

  r.expect_at_most("phase shift -> -pi/2 as y -> 0",
                   std::abs(wilson::phase_shift(1e-4, p) + kPi / 2), 1e-3);
  double amp = 0.0;
  for (double y = 0.1; y <= 10.0; y += 0.7) {
    const auto a = wilson::scattering_amplitude(y, p);
    const auto polar = std::polar(wilson::scattering_amplitude_abs(y, p), wilson::phase_shift(y, p));
    amp = std::max(amp, std::abs(polar - a) / std::abs(a));
  }
  r.expect_at_most("|A| exp(i delta) matches A(iy)", amp, 1e-10);
}

void racah_suite(VerifyReport& r) {
  const RacahParams sets[] = {{0.5, 0.3, 9.5, -9.3, 8}, {-0.4, 1.2, 10.0, -10.2, 8},
                              {2.0, 0.0, 12.5, -9.0, 8}};
  double sum_err = 0.0, ortho = 0.0, rec = 0.0;
  for (const auto& rp : sets) {
    double total = 0.0;
    for (int m = 0; m <= rp.N; ++m) total += racah::racah_weight(m, rp);
    sum_err = std::max(sum_err, std::abs(total - 1.0));
    for (int n = 0; n <= rp.N; ++n) {
      for (int k = n; k <= rp.N; ++k) {
        double s = 0.0;
        for (int m = 0; m <= rp.N; ++m) {
          s += racah::racah_weight(m, rp) * racah::racah_orthonormal(n, m, rp) *
               racah::racah_orthonormal(k, m, rp);
        }
        ortho = std::max(ortho, std::abs(s - (n == k ? 1.0 : 0.0)));
      }
    }
    for (int m = 0; m <= rp.N; ++m) {
      const auto seq = racah::racah_sequence(m, rp);
      for (int n = 0; n <= rp.N; ++n) {
        const double direct = racah::racah_tilde(n, m, rp);
        rec = std::max(rec, std::abs(seq[n] - direct) / std::max(std::abs(direct), 1.0));
      }
    }
  }
  r.expect_at_most("weights sum to 1", sum_err, 1e-12);
  r.expect_at_most("discrete orthonormality (N = 8)", ortho, 1e-9);
  r.expect_at_most("recursion matches 4F3 definition", rec, 1e-9);

  const WilsonParams w{0.8, 0.8, 1.0, 1.0, 1.0};
  const WilsonParams back = racah::racah_to_wilson(racah::wilson_to_racah(w, 6));
  const double trip = std::max({std::abs(back.mu - w.mu), std::abs(back.nu - w.nu),
                                std::abs(back.a - w.a), std::abs(back.b - w.b)});
  r.expect_at_most("parameter map roundtrip", trip, 1e-14);
}

void matrices_suite(VerifyReport& r) {
  const SystemSpec spec(figure_system(), Parity::even, 30);
  const auto h = hamiltonian_matrix(spec);
  r.expect_at_most("H diag[0] = 0.016", std::abs(h.diag[0] - 0.016), 1e-15);
  double worst = 0.0;
  for (double e : {0.0, 0.005, 0.02, 0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 0.99}) {
    const auto c = recursion_to_hamiltonian_check(spec, e, 30);
    worst = std::max(worst, c.max_residual / c.scale);
  }
  r.expect_at_most("H w = E w on interior rows (10 energies)", worst, 1e-8);

  const OscillatorBasis basis(0.2, Parity::even, 30);
  const auto sum = kinetic_matrix(basis) + position_sq_matrix(basis);
  double osc = 0.0;
  for (int k = 0; k < basis.size(); ++k) {
    osc = std::max(osc, std::abs(sum.diag[k] - 0.04 * (basis.hermite_index(k) + 0.5)));
  }
  for (double v : sum.offdiag) osc = std::max(osc, std::abs(v));
  r.expect_at_most("T + 1/2 lambda^4 x^2 is diagonal lambda^2 (n + 1/2)", osc, 1e-14);

  const auto ev = eigen_spectrum(sum, 3);
  const double eig = std::max({std::abs(ev[0] - 0.02), std::abs(ev[1] - 0.10), std::abs(ev[2] - 0.18)});
  r.expect_at_most("oscillator eigenvalues 0.02, 0.10, 0.18", eig, 1e-12);
  r.expect_at_most("potential matrix [0][0] = 0.006",
                   std::abs(potential_matrix(spec).diag[0] - 0.006), 1e-15);
}

void reconstruction_suite(VerifyReport& r) {
  const double lambda = 0.2;
  const OscillatorBasis basis(lambda, Parity::even, 40);
  const auto grid = uniform_grid(-3.0 / lambda, 3.0 / lambda, 121);

  const auto ident = scaled_identity(40, 0.37);
  const auto m1 = reconstruct_method1(ident, basis, grid);
  const auto m2 = reconstruct_method2(ident, basis, 0, grid);
  double exact = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (m1.mask[i]) exact = std::max(exact, std::abs(m1.curve.values[i] - 0.37));
    if (m2.mask[i]) exact = std::max(exact, std::abs(m2.curve.values[i] - 0.37));
  }
  r.expect_at_most("identity matrix reconstructs exactly", exact, 1e-12);

  // Method 1 on the truncated x^2 band matrix misses exactly the coupling to row N.
  const auto x2 = position_sq_matrix(basis);
  const auto osc = reconstruct_method1(x2, basis, grid);
  const OscillatorBasis wider(lambda, Parity::even, 41);
  const double edge = 0.25 * lambda * lambda *
                      std::sqrt(double(wider.hermite_index(40)) * (wider.hermite_index(40) - 1));
  double edge_err = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto phi = wider.eval_all(grid[i]);
    double den = 0.0;
    for (int k = 0; k < 40; ++k) den += phi[k] * phi[k];
    const double predicted = counterterm(grid[i], lambda) - edge * phi[39] * phi[40] / den;
    edge_err = std::max(edge_err, std::abs(osc.curve.values[i] - predicted));
  }
  r.expect_at_most("truncated x^2 matrix: Method 1 error equals the edge coupling term", edge_err,
                   1e-12);

  const auto col = reconstruct_method2(x2, basis, 7, grid);
  double interior = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!col.mask[i]) continue;
    interior = std::max(interior, std::abs(col.curve.values[i] - counterterm(grid[i], lambda)));
  }
  r.expect_at_most("x^2 matrix: Method 2 exact on an interior column", interior, 1e-9);

  const auto wide = uniform_grid(-4.0 / lambda, 4.0 / lambda, 161);
  const SystemSpec spec(figure_system(), Parity::even, 30);
  const auto curve = reconstruct_method1({spec, Method::one, std::nullopt, wide});
  r.expect_at_most("Method 1 fully trusted on |lambda x| <= 4",
                   double(wide.size() - curve.trusted_count()), 0.0);
  const auto full = full_potential(curve, lambda);
  double ident_err = 0.0;
  for (std::size_t i = 0; i < wide.size(); ++i) {
    ident_err = std::max(ident_err, std::abs(full.curve.values[i] - counterterm(wide[i], lambda) -
                                             curve.curve.values[i]));
  }
  r.expect_at_most("full potential minus counterterm recovers the matrix curve", ident_err, 1e-12);
}

}  // namespace

bool VerifyReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerifyReport::expect_at_most(std::string name, double measured, double threshold) {
  checks.push_back({std::move(name), measured <= threshold, measured, threshold});
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"specfun", "wilson", "racah", "matrices",
                                                 "reconstruction"};
  return names;
}

VerifyReport run_suite(std::string_view name) {
  VerifyReport report;
  report.suite = std::string(name);
  auto run_one = [&](std::string_view suite, VerifyReport& into, const std::string& prefix) {
    VerifyReport part;
    if (suite == "specfun") specfun_suite(part);
    else if (suite == "wilson") wilson_suite(part);
    else if (suite == "racah") racah_suite(part);
    else if (suite == "matrices") matrices_suite(part);
    else if (suite == "reconstruction") reconstruction_suite(part);
    else throw ParameterError("unknown verify suite '" + std::string(suite) + "'");
    for (auto& c : part.checks) {
      c.name = prefix + c.name;
      into.checks.push_back(std::move(c));
    }
  };
  if (name == "all") {
    for (const auto& s : suite_names()) run_one(s, report, s + ": ");
  } else {
    run_one(name, report, "");
  }
  return report;
}

}  // namespace wracah::verify
