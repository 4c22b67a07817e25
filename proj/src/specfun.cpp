#include "wracah/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "wracah/errors.hpp"

namespace wracah::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients for g = 671/128 (14 terms), accurate to roughly 1e-15 on Re z > 0.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr std::array<double, 14> kLanczosCoef = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

double reduce_angle(double phi) {
  double r = std::remainder(phi, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

Complex lanczos_log_gamma(Complex z) {
  Complex denom = z;
  Complex series = kLanczosC0;
  for (double c : kLanczosCoef) {
    denom += 1.0;
    series += c / denom;
  }
  const Complex shifted = z + kLanczosG;
  return (z + 0.5) * std::log(shifted) - shifted + std::log(kSqrtTwoPi * series / z);
}

// log sin(w) up to multiples of 2 pi i, without overflow for large |Im w|.
Complex log_sin(Complex w) {
  const Complex i(0.0, 1.0);
  if (w.imag() > 1.0) {
    return -i * w + std::log(Complex(0.0, 0.5)) + std::log(1.0 - std::exp(2.0 * i * w));
  }
  if (w.imag() < -1.0) {
    return i * w + std::log(Complex(0.0, -0.5)) + std::log(1.0 - std::exp(-2.0 * i * w));
  }
  return std::log(std::sin(w));
}

using Quad = boost::multiprecision::cpp_bin_float_quad;

template <class T>
T sum_terminating_series(const HypSeriesSpec& spec, int last_index) {
  T term = 1;
  T total = 1;
  const T argument = spec.argument;
  for (int k = 0; k < last_index; ++k) {
    T num = 1;
    for (double p : spec.numerator_params) num *= T(p) + k;
    if (spec.conjugate_pair) {
      const T c = T(spec.conjugate_pair->center) + k;
      num *= c * c + T(spec.conjugate_pair->imag_sq);
    }
    T den = k + 1;
    for (double q : spec.denominator_params) den *= T(q) + k;
    term *= num / den * argument;
    total += term;
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------

Complex log_gamma_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ParameterError("log_gamma_complex: non-finite argument");
  }
  if (z.imag() == 0.0 && is_nonpositive_integer(z.real())) {
    throw PoleError("log_gamma_complex: pole at nonpositive integer " + std::to_string(z.real()));
  }
  Complex result;
  if (z.real() >= 0.5) {
    result = lanczos_log_gamma(z);
  } else {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    result = std::log(kPi) - log_sin(kPi * z) - lanczos_log_gamma(1.0 - z);
  }
  return {result.real(), reduce_angle(result.imag())};
}

double abs_gamma_sq(Complex z) { return std::exp(2.0 * log_gamma_complex(z).real()); }

double arg_gamma(Complex z) { return log_gamma_complex(z).imag(); }

// ---------------------------------------------------------------------------

double SignedLog::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

SignedLog& SignedLog::operator*=(const SignedLog& rhs) {
  sign *= rhs.sign;
  log_abs += rhs.log_abs;
  return *this;
}

SignedLog& SignedLog::operator/=(const SignedLog& rhs) {
  if (rhs.sign == 0) throw ParameterError("SignedLog: division by exact zero");
  sign *= rhs.sign;
  log_abs -= rhs.log_abs;
  return *this;
}

SignedLog operator*(SignedLog lhs, const SignedLog& rhs) { return lhs *= rhs; }
SignedLog operator/(SignedLog lhs, const SignedLog& rhs) { return lhs /= rhs; }

SignedLog signed_log(double x) {
  if (x == 0.0) return {0.0, 0};
  return {std::log(std::abs(x)), x > 0.0 ? 1 : -1};
}

double pochhammer(double a, int n) {
  if (n < 0) throw ParameterError("pochhammer: negative order");
  double result = 1.0;
  for (int j = 0; j < n; ++j) {
    result *= a + j;
    if (result == 0.0) return 0.0;
    if (!std::isfinite(result)) return log_pochhammer(a, n).value();
  }
  return result;
}

SignedLog log_pochhammer(double a, int n) {
  if (n < 0) throw ParameterError("log_pochhammer: negative order");
  SignedLog acc;
  for (int j = 0; j < n; ++j) {
    const double f = a + j;
    if (f == 0.0) return {0.0, 0};
    acc.log_abs += std::log(std::abs(f));
    if (f < 0.0) acc.sign = -acc.sign;
  }
  return acc;
}

// ---------------------------------------------------------------------------

double hyp4f3_terminating(const HypSeriesSpec& spec, Precision precision) {
  if (!spec.terminating_degree || *spec.terminating_degree < 0) {
    throw ParameterError("hyp4f3_terminating: terminating degree required");
  }
  const std::size_t numerator_count =
      spec.numerator_params.size() + (spec.conjugate_pair ? 2u : 0u);
  if (numerator_count != 4 || spec.denominator_params.size() != 3) {
    throw ParameterError("hyp4f3_terminating: expected 4 numerator and 3 denominator parameters");
  }
  if (spec.argument != 1.0) {
    throw ParameterError("hyp4f3_terminating: argument must be 1");
  }
  const int degree = *spec.terminating_degree;
  const auto& num = spec.numerator_params;
  if (std::find(num.begin(), num.end(), -static_cast<double>(degree)) == num.end()) {
    throw ParameterError("hyp4f3_terminating: no numerator parameter equals -" +
                         std::to_string(degree));
  }
  int last = degree;
  for (double p : num) {
    if (is_nonpositive_integer(p)) last = std::min(last, static_cast<int>(-p));
  }
  for (double q : spec.denominator_params) {
    if (is_nonpositive_integer(q) && -q < last) {
      throw SingularSeriesError("hyp4f3_terminating: denominator parameter " + std::to_string(q) +
                                    " vanishes before the series terminates",
                                static_cast<int>(-q));
    }
  }
  if (precision == Precision::extended) {
    return static_cast<double>(sum_terminating_series<Quad>(spec, last));
  }
  return sum_terminating_series<double>(spec, last);
}

namespace {

template <class T>
auto truncated_gauss_series(T a, T b, double c, double t, int terms) {
  if (terms < 1) throw ParameterError("hyp2f1_truncated: need at least one term");
  if (!(std::abs(t) < 1.0)) throw ParameterError("hyp2f1_truncated: requires |t| < 1");
  T term = 1.0;
  T total = 0.0;
  double last = 0.0;
  for (int k = 0; k < terms; ++k) {
    total += term;
    last = std::abs(term);
    if (k + 1 == terms) break;
    const T num = (a + double(k)) * (b + double(k));
    if (num == T(0.0)) {
      last = 0.0;  // series terminated; nothing truncated
      break;
    }
    if (c + k == 0.0) {
      throw SingularSeriesError("hyp2f1_truncated: denominator parameter vanishes", k);
    }
    term *= num / ((c + k) * (k + 1.0)) * t;
  }
  return std::pair<T, double>{total, last};
}

}  // namespace

SeriesSum hyp2f1_truncated(double a, double b, double c, double t, int terms) {
  auto [v, last] = truncated_gauss_series<double>(a, b, c, t, terms);
  return {v, last};
}

ComplexSeriesSum hyp2f1_truncated(Complex a, Complex b, double c, double t, int terms) {
  auto [v, last] = truncated_gauss_series<Complex>(a, b, c, t, terms);
  return {v, last};
}

std::vector<double> hyp2f1_coefficients(double a, double b, double c, int terms) {
  std::vector<double> coef(static_cast<std::size_t>(std::max(terms, 0)), 0.0);
  double term = 1.0;
  for (int k = 0; k < terms; ++k) {
    coef[k] = term;
    const double num = (a + k) * (b + k);
    if (num == 0.0) break;
    if (c + k == 0.0) {
      throw SingularSeriesError("hyp2f1_coefficients: denominator parameter vanishes", k);
    }
    term *= num / ((c + k) * (k + 1.0));
  }
  return coef;
}

// ---------------------------------------------------------------------------

std::vector<double> hermite_function_sequence(int n_max, double z) {
  if (n_max < 0) throw ParameterError("hermite_function_sequence: negative degree");
  std::vector<double> h(static_cast<std::size_t>(n_max) + 1);

  // Values are carried as mantissa * exp(log_scale).
  constexpr double kRescale = 1e150;
  const double log_rescale = std::log(kRescale);
  double log_scale = -0.5 * z * z;
  double prev = 0.0;
  double cur = 1.0 / std::sqrt(std::sqrt(kPi));

  auto materialize = [&](double mantissa) {
    if (mantissa == 0.0) return 0.0;
    return std::copysign(std::exp(std::log(std::abs(mantissa)) + log_scale), mantissa);
  };

  h[0] = materialize(cur);
  for (int n = 0; n < n_max; ++n) {
    const double next = z * std::sqrt(2.0 / (n + 1)) * cur - std::sqrt(double(n) / (n + 1)) * prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > kRescale) {
      cur /= kRescale;
      prev /= kRescale;
      log_scale += log_rescale;
    }
    h[n + 1] = materialize(cur);
  }
  return h;
}

double hermite_function(int n, double z) { return hermite_function_sequence(n, z).back(); }

double hermite_polynomial(int n, double z) {
  if (n < 0 || n > 30) {
    throw ParameterError("hermite_polynomial: raw evaluation limited to n <= 30");
  }
  double prev = 0.0;
  double cur = 1.0;
  for (int k = 0; k < n; ++k) {
    const double next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace wracah::specfun
