#include "wracah/wilson.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wracah/errors.hpp"
#include "wracah/quadrature.hpp"
#include "wracah/specfun.hpp"

namespace wracah {

using specfun::Complex;

void WilsonParams::validate() const {
  for (double v : {mu, nu, a, b, lambda}) {
    if (!std::isfinite(v)) throw ParameterError("WilsonParams: parameters must be finite");
  }
  if (!(lambda > 0.0)) throw ParameterError("WilsonParams: lambda must be positive");
}

bool WilsonParams::orthogonality_mode() const {
  return mu + nu > 0 && mu + a > 0 && mu + b > 0 && nu + a > 0 && nu + b > 0 && a + b > 0;
}

void WilsonParams::require_orthogonality_mode() const {
  validate();
  if (!orthogonality_mode()) {
    throw ParameterError(
        "WilsonParams: orthogonality mode requires mu+nu, mu+a, mu+b, nu+a, nu+b, a+b > 0");
  }
}

bool WilsonParams::bound_state_mode() const {
  return mu < 0 && mu + nu > 0 && mu + a > 0 && mu + b > 0;
}

SpectralPoint SpectralPoint::from_energy(double energy, double lambda) {
  if (energy < 0) throw ParameterError("SpectralPoint: y is defined for E >= 0");
  return {std::sqrt(2.0 * energy) / lambda, energy};
}

SpectralPoint SpectralPoint::from_y(double y, double lambda) {
  return {y, 0.5 * lambda * lambda * y * y};
}

namespace wilson {

namespace {

constexpr double kPi = std::numbers::pi;

void require_nonzero(double d, int n, const char* what) {
  if (d == 0.0) {
    throw ZeroDenominatorError(std::string(what) + ": zero denominator at n = " + std::to_string(n),
                               n);
  }
}

// log of the weight normalization constant Gamma(s) / prod Gamma(pair sums).
double log_weight_constant(const WilsonParams& p) {
  return std::lgamma(p.total()) - std::lgamma(p.mu + p.nu) - std::lgamma(p.a + p.b) -
         std::lgamma(p.mu + p.a) - std::lgamma(p.mu + p.b) - std::lgamma(p.nu + p.a) -
         std::lgamma(p.nu + p.b);
}

Complex log_amplitude(double y, const WilsonParams& p) {
  const Complex iy(0.0, y);
  using specfun::log_gamma_complex;
  return log_gamma_complex(2.0 * iy) - log_gamma_complex(p.mu + iy) - log_gamma_complex(p.nu + iy) -
         log_gamma_complex(p.a + iy) - log_gamma_complex(p.b + iy);
}

}  // namespace

RecursionRow recursion_row(int n, const WilsonParams& p) {
  const double s = p.total();
  const double mu = p.mu, nu = p.nu, a = p.a, b = p.b;
  if (n < 0) throw ParameterError("recursion_row: negative index");
  if (n == 0) {
    require_nonzero(s, 0, "wilson recursion");
    const double up = (mu + nu) * (mu + a) * (mu + b) / s;
    return {up - mu * mu, 0.0, (mu + nu) * (a + b) / s};
  }
  const double d0 = 2 * n + s, d1 = 2 * n + s - 1, d2 = 2 * n + s - 2;
  require_nonzero(d0, n, "wilson recursion");
  require_nonzero(d1, n, "wilson recursion");
  require_nonzero(d2, n, "wilson recursion");
  const double forward = (n + mu + nu) * (n + mu + a) * (n + mu + b) * (n + s - 1) / (d0 * d1);
  const double backward = n * (n + nu + a - 1) * (n + nu + b - 1) * (n + a + b - 1) / (d1 * d2);
  RecursionRow row;
  row.diag = forward + backward - mu * mu;
  row.lower = (n + mu + a - 1) * (n + mu + b - 1) * (n + nu + a - 1) * (n + nu + b - 1) / (d1 * d2);
  row.upper = (n + 1) * (n + mu + nu) * (n + a + b) * (n + s - 1) / (d0 * d1);
  return row;
}

double wilson_tilde(int n, double y_sq, const WilsonParams& p, specfun::Precision precision) {
  if (n < 0) throw ParameterError("wilson_tilde: negative degree");
  const double s = p.total();
  specfun::HypSeriesSpec spec;
  spec.numerator_params = {-static_cast<double>(n), n + s - 1};
  spec.conjugate_pair = specfun::ConjugatePair{p.mu, y_sq};
  spec.denominator_params = {p.mu + p.nu, p.mu + p.a, p.mu + p.b};
  spec.terminating_degree = n;
  const double series = specfun::hyp4f3_terminating(spec, precision);

  using specfun::log_pochhammer;
  specfun::SignedLog prefactor = log_pochhammer(p.mu + p.a, n) * log_pochhammer(p.mu + p.b, n);
  prefactor /= log_pochhammer(p.a + p.b, n);
  prefactor /= specfun::SignedLog{std::lgamma(n + 1.0), 1};
  return prefactor.value() * series;
}

std::vector<double> wilson_sequence(int n_max, double y_sq, const WilsonParams& p) {
  if (n_max < 0) throw ParameterError("wilson_sequence: negative degree");
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  w[0] = 1.0;
  if (n_max == 0) return w;

  const double s = p.total();
  require_nonzero(p.a + p.b, 0, "wilson seed");
  require_nonzero(p.mu + p.nu, 0, "wilson seed");
  w[1] = (p.mu + p.a) * (p.mu + p.b) / (p.a + p.b) -
         s / ((p.mu + p.nu) * (p.a + p.b)) * (y_sq + p.mu * p.mu);
  for (int n = 1; n < n_max; ++n) {
    const RecursionRow row = recursion_row(n, p);
    require_nonzero(row.upper, n, "wilson recursion");
    w[n + 1] = ((row.diag - y_sq) * w[n] - row.lower * w[n - 1]) / row.upper;
  }
  return w;
}

double orthonormal_factor(int n, const WilsonParams& p) {
  if (n < 0) throw ParameterError("orthonormal_factor: negative degree");
  if (n == 0) return 1.0;
  const double s = p.total();
  using specfun::log_pochhammer;
  using specfun::signed_log;
  specfun::SignedLog sq = signed_log(2 * n + s - 1) / signed_log(n + s - 1);
  sq *= log_pochhammer(p.mu + p.nu, n) * log_pochhammer(p.a + p.b, n) * log_pochhammer(s, n);
  sq *= specfun::SignedLog{std::lgamma(n + 1.0), 1};
  sq /= log_pochhammer(p.mu + p.a, n) * log_pochhammer(p.mu + p.b, n);
  sq /= log_pochhammer(p.nu + p.a, n) * log_pochhammer(p.nu + p.b, n);
  if (sq.sign <= 0) {
    throw ZeroDenominatorError("wilson_orthonormal: negative radicand, parameters outside the "
                         "orthonormal domain at n = " + std::to_string(n), n);
  }
  return std::exp(0.5 * sq.log_abs);
}

double wilson_orthonormal(int n, double y_sq, const WilsonParams& p,
                          specfun::Precision precision) {
  return orthonormal_factor(n, p) * wilson_tilde(n, y_sq, p, precision);
}

double jacobi_diagonal(int n, const WilsonParams& p) { return recursion_row(n, p).diag; }

double jacobi_offdiagonal(int n, const WilsonParams& p) {
  if (n < 0) throw ParameterError("jacobi_offdiagonal: negative index");
  const double s = p.total();
  const double mu = p.mu, nu = p.nu, a = p.a, b = p.b;
  require_nonzero(2 * n + s, n, "wilson orthonormal recursion");
  require_nonzero(2 * n + s + 1, n, "wilson orthonormal recursion");
  // (n+s-1)/(2n+s-1) collapses to 1 at n = 0.
  double ratio = 1.0;
  if (n > 0) {
    require_nonzero(2 * n + s - 1, n, "wilson orthonormal recursion");
    ratio = (n + s - 1) / (2 * n + s - 1);
  }
  const double radicand = (n + 1) * (n + mu + nu) * (n + a + b) * (n + mu + a) * (n + mu + b) *
                          (n + nu + a) * (n + nu + b) / (2 * n + s + 1) * ratio;
  if (!(radicand > 0.0)) {
    throw ZeroDenominatorError("wilson orthonormal recursion: non-positive radicand at n = " +
                         std::to_string(n), n);
  }
  return std::sqrt(radicand) / (2 * n + s);
}

std::vector<double> wilson_orthonormal_sequence(int n_max, double y_sq, const WilsonParams& p) {
  if (n_max < 0) throw ParameterError("wilson_orthonormal_sequence: negative degree");
  std::vector<double> w(static_cast<std::size_t>(n_max) + 1);
  w[0] = 1.0;
  double prev_off = 0.0;
  for (int n = 0; n < n_max; ++n) {
    const double off = jacobi_offdiagonal(n, p);
    const double back = n > 0 ? prev_off * w[n - 1] : 0.0;
    w[n + 1] = ((jacobi_diagonal(n, p) - y_sq) * w[n] - back) / off;
    prev_off = off;
  }
  return w;
}

double weight_continuous(double y, const WilsonParams& p) {
  p.require_orthogonality_mode();
  if (!(y > 0.0)) throw ParameterError("weight_continuous: requires y > 0");
  const double log_rho =
      log_weight_constant(p) - 2.0 * log_amplitude(y, p).real() - std::log(2.0 * kPi);
  return std::exp(log_rho);
}

std::complex<double> scattering_amplitude(double y, const WilsonParams& p) {
  if (!(y > 0.0)) throw ParameterError("scattering_amplitude: requires y > 0");
  return std::exp(log_amplitude(y, p));
}

double scattering_amplitude_abs(double y, const WilsonParams& p) {
  if (!(y > 0.0)) throw ParameterError("scattering_amplitude_abs: requires y > 0");
  return std::exp(log_amplitude(y, p).real());
}

double phase_shift(double y, const WilsonParams& p) {
  if (!(y > 0.0)) throw ParameterError("phase_shift: requires y > 0");
  const double raw = log_amplitude(y, p).imag();
  double r = std::remainder(raw, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

std::vector<double> unwrap_phase(std::span<const double> principal) {
  std::vector<double> out(principal.begin(), principal.end());
  for (std::size_t i = 1; i < out.size(); ++i) {
    double step = principal[i] - principal[i - 1];
    step -= 2.0 * kPi * std::round(step / (2.0 * kPi));
    out[i] = out[i - 1] + step;
  }
  return out;
}

BoundSpectrum bound_state_energies(const WilsonParams& p) {
  p.validate();
  BoundSpectrum spectrum;
  if (p.mu >= 0) return spectrum;
  if (!p.bound_state_mode()) {
    throw ParameterError("bound_state_energies: bound-state mode requires mu+nu, mu+a, mu+b > 0");
  }
  const double scale = 0.5 * p.lambda * p.lambda;
  for (int m = 0; m + p.mu < 0; ++m) {
    const double k = m + p.mu;
    spectrum.states.push_back({m, -scale * k * k});
  }
  spectrum.edge_level_excluded = (-p.mu == std::floor(-p.mu));
  return spectrum;
}

double asymptotic_envelope_tilde(int n, double y, const WilsonParams& p) {
  if (n < 1) throw ParameterError("asymptotic_envelope_tilde: requires n >= 1");
  return 2.0 / n * std::tgamma(p.mu + p.nu) * std::tgamma(p.a + p.b) *
         scattering_amplitude_abs(y, p);
}

double asymptotic_wilson_tilde(int n, double y, const WilsonParams& p) {
  return asymptotic_envelope_tilde(n, y, p) * std::cos(2.0 * y * std::log(double(n)) + phase_shift(y, p));
}

double asymptotic_wilson_orthonormal(int n, double y, const WilsonParams& p) {
  if (n < 1) throw ParameterError("asymptotic_wilson_orthonormal: requires n >= 1");
  p.require_orthogonality_mode();
  const double log_b_sq = std::lgamma(p.mu + p.nu) + std::lgamma(p.a + p.b) +
                          std::lgamma(p.mu + p.a) + std::lgamma(p.mu + p.b) +
                          std::lgamma(p.nu + p.a) + std::lgamma(p.nu + p.b) - std::lgamma(p.total());
  const double prefactor = std::exp(0.5 * log_b_sq) * std::sqrt(2.0 / n);
  return prefactor * 2.0 * scattering_amplitude_abs(y, p) *
         std::cos(2.0 * y * std::log(double(n)) + phase_shift(y, p));
}

InnerProduct continuous_inner_product(int n, int m, const WilsonParams& p, double tail_tolerance) {
  p.require_orthogonality_mode();
  const int top = std::max(n, m);
  auto integrand = [&](double y) {
    if (y <= 0.0) return 0.0;
    const auto w = wilson_orthonormal_sequence(top, y * y, p);
    return weight_continuous(y, p) * w[n] * w[m];
  };
  quadrature::DecayOptions options;
  options.tail_tolerance = tail_tolerance;
  const auto r = quadrature::integrate_to_decay(integrand, 0.0, options);
  return {r.value, r.error_estimate, r.upper_limit};
}

}  // namespace wilson
}  // namespace wracah
