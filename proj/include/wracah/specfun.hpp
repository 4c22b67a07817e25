#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace wracah::specfun {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Gamma function of complex argument
// ---------------------------------------------------------------------------

/// Principal value of log Gamma(z): ln|Gamma(z)| + i Arg Gamma(z), Arg in (-pi, pi].
/// Lanczos approximation for Re z >= 1/2, reflection below. Throws PoleError at
/// nonpositive integers.
Complex log_gamma_complex(Complex z);

/// |Gamma(z)|^2, formed as exp(2 Re log Gamma(z)).
double abs_gamma_sq(Complex z);

/// Arg Gamma(z) in (-pi, pi].
double arg_gamma(Complex z);

// ---------------------------------------------------------------------------
// Pochhammer symbols
// ---------------------------------------------------------------------------

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1. Returns +-inf when the
/// product leaves double range; use log_pochhammer for those.
double pochhammer(double a, int n);

/// A real number stored as sign * exp(log_abs). sign == 0 encodes an exact zero.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  double value() const;
  SignedLog& operator*=(const SignedLog& rhs);
  SignedLog& operator/=(const SignedLog& rhs);
};

SignedLog operator*(SignedLog lhs, const SignedLog& rhs);
SignedLog operator/(SignedLog lhs, const SignedLog& rhs);
SignedLog signed_log(double x);

/// log|(a)_n| with sign tracking.
SignedLog log_pochhammer(double a, int n);

// ---------------------------------------------------------------------------
// Hypergeometric series
// ---------------------------------------------------------------------------

/// Numerator pair (c + i d, c - i d) entering as the real product
/// prod_j ((c+j)^2 + imag_sq). imag_sq may be negative (real pair c +- sqrt(-imag_sq)).
struct ConjugatePair {
  double center = 0.0;
  double imag_sq = 0.0;
};

struct HypSeriesSpec {
  std::vector<double> numerator_params;
  std::vector<double> denominator_params;
  double argument = 1.0;
  std::optional<int> terminating_degree;
  std::optional<ConjugatePair> conjugate_pair;
};

enum class Precision { standard, extended };

/// Terminating 4F3 at unit argument, summed with running term ratios. One numerator
/// parameter must equal -terminating_degree; the sum stops at the first nonpositive
/// integer numerator, so a second one (e.g. -m) shortens it. Throws
/// SingularSeriesError when a denominator hits zero inside that range.
/// Precision::extended sums in 113-bit binary floating point.
double hyp4f3_terminating(const HypSeriesSpec& spec, Precision precision = Precision::standard);

struct SeriesSum {
  double value = 0.0;
  double last_term = 0.0;  ///< |last term added|, a truncation estimate
};

struct ComplexSeriesSum {
  Complex value;
  double last_term = 0.0;
};

/// Partial sum of 2F1(a, b; c; t) over the first `terms` terms.
SeriesSum hyp2f1_truncated(double a, double b, double c, double t, int terms);
ComplexSeriesSum hyp2f1_truncated(Complex a, Complex b, double c, double t, int terms);

/// Taylor coefficients (a)_k (b)_k / ((c)_k k!) for k < terms; zero past a
/// terminating numerator.
std::vector<double> hyp2f1_coefficients(double a, double b, double c, int terms);

// ---------------------------------------------------------------------------
// Hermite functions
// ---------------------------------------------------------------------------

/// Orthonormal Hermite function h_n(z) = (sqrt(pi) 2^n n!)^{-1/2} e^{-z^2/2} H_n(z).
double hermite_function(int n, double z);

/// h_0(z) .. h_{n_max}(z) from the normalized three-term recurrence. The running pair
/// is rescaled to stay in range, so large n and |z| neither overflow nor lose the
/// Gaussian factor to underflow prematurely.
std::vector<double> hermite_function_sequence(int n_max, double z);

/// Physicists' Hermite polynomial H_n(z), n <= 30 only.
double hermite_polynomial(int n, double z);

}  // namespace wracah::specfun
