#include "wracah/racah.hpp"

#include <cmath>
#include <string>

#include "wracah/errors.hpp"
#include "wracah/specfun.hpp"

namespace wracah {

using specfun::log_pochhammer;
using specfun::signed_log;
using specfun::SignedLog;

void RacahParams::validate() const {
  for (double v : {alpha, beta, gamma, delta}) {
    if (!std::isfinite(v)) throw ParameterError("RacahParams: parameters must be finite");
  }
  if (N < 1) throw ParameterError("RacahParams: N must be a positive integer");
}

bool RacahParams::is_delta_consistent(double tol) const {
  return std::abs(delta + (N + beta + 1)) <= tol;
}

bool RacahParams::orthogonality_domain() const {
  return alpha > -1 && beta > -1 && gamma > alpha + beta + N;
}

void RacahParams::validate_orthogonality() const {
  validate();
  if (!orthogonality_domain()) {
    throw ParameterError(
        "RacahParams: positive weight requires alpha > -1, beta > -1, gamma > alpha+beta+N");
  }
}

namespace racah {

namespace {

void check_index(int k, const RacahParams& r, const char* what) {
  if (k < 0 || k > r.N) {
    throw ParameterError(std::string(what) + ": index " + std::to_string(k) + " outside 0.." +
                             std::to_string(r.N),
                         k);
  }
}

// (2m+c)/(m+c) (c+1)_m with c = gamma-beta-N, written as (2m+c)(c+1)_{m-1}.
SignedLog leading_factor(int m, double c) {
  if (m == 0) return {};
  return signed_log(2 * m + c) * log_pochhammer(c + 1, m - 1);
}

SignedLog log_unnormalized_weight(int m, const RacahParams& r) {
  const double al = r.alpha, be = r.beta, ga = r.gamma;
  const int N = r.N;
  const double c = ga - be - N;
  SignedLog w = leading_factor(m, c);
  w *= log_pochhammer(-N, m) * log_pochhammer(al + 1, m) * log_pochhammer(ga + 1, m);
  const SignedLog den = log_pochhammer(-be - N, m) * log_pochhammer(ga - be + 1, m) *
                        log_pochhammer(ga - al - be - N, m) * SignedLog{std::lgamma(m + 1.0), 1};
  if (den.sign == 0) {
    throw ZeroDenominatorError("racah weight: vanishing denominator at m = " + std::to_string(m), m);
  }
  return w / den;
}

}  // namespace

RacahParams wilson_to_racah(const WilsonParams& p, int N) {
  p.validate();
  RacahParams r;
  r.alpha = p.mu + p.a - 1;
  r.gamma = p.mu + p.b - 1;
  r.beta = p.nu + p.b - 1;
  r.delta = p.mu - p.b;
  r.N = N;
  r.validate();
  if (!(r.alpha > -1) || !(r.gamma > -1)) {
    throw ParameterError("wilson_to_racah: requires alpha = mu+a-1 > -1 and gamma = mu+b-1 > -1");
  }
  return r;
}

WilsonParams racah_to_wilson(const RacahParams& r, double lambda) {
  WilsonParams p;
  p.mu = 0.5 * (r.gamma + r.delta + 1);
  p.nu = r.beta + 0.5 * (r.delta - r.gamma + 1);
  p.a = r.alpha - 0.5 * (r.gamma + r.delta - 1);
  p.b = 0.5 * (r.gamma - r.delta + 1);
  p.lambda = lambda;
  return p;
}

double racah_kernel(int n, int m, const RacahParams& r, specfun::Precision precision) {
  r.validate();
  check_index(n, r, "racah_kernel");
  check_index(m, r, "racah_kernel");
  specfun::HypSeriesSpec spec;
  spec.numerator_params = {-static_cast<double>(n), -static_cast<double>(m),
                           n + r.alpha + r.beta + 1, m - r.beta + r.gamma - r.N};
  spec.denominator_params = {r.alpha + 1, r.gamma + 1, -static_cast<double>(r.N)};
  spec.terminating_degree = n;
  return specfun::hyp4f3_terminating(spec, precision);
}

double racah_tilde(int n, int m, const RacahParams& r) {
  const double kernel = racah_kernel(n, m, r);
  SignedLog pre = log_pochhammer(r.alpha + 1, n) * log_pochhammer(r.gamma + 1, n);
  const SignedLog den =
      log_pochhammer(r.alpha + r.beta + r.N + 2, n) * SignedLog{std::lgamma(n + 1.0), 1};
  if (den.sign == 0) throw ZeroDenominatorError("racah_tilde: vanishing prefactor denominator", n);
  pre /= den;
  return pre.value() * kernel;
}

std::vector<double> racah_sequence(int m, const RacahParams& r) {
  r.validate();
  check_index(m, r, "racah_sequence");
  const double al = r.alpha, be = r.beta, ga = r.gamma;
  const int N = r.N;
  const double ab = al + be;
  const double shift = N + be - ga;
  const double lhs = 0.25 * (shift - 2 * m) * (shift - 2 * m);

  std::vector<double> R(static_cast<std::size_t>(N) + 1, 0.0);
  R[0] = 1.0;
  for (int n = 0; n < N; ++n) {
    const double d1 = 2 * n + ab + 1, d2 = 2 * n + ab + 2;
    if (d1 == 0.0 || d2 == 0.0) {
      throw ZeroDenominatorError("racah recursion: zero denominator at n = " + std::to_string(n), n);
    }
    const double up = (n - N) * (n + al + 1) * (n + ga + 1) * (n + ab + 1) / (d1 * d2);
    double down = 0.0, lower = 0.0;
    if (n > 0) {
      const double d0 = 2 * n + ab;
      if (d0 == 0.0) {
        throw ZeroDenominatorError("racah recursion: zero denominator at n = " + std::to_string(n),
                                   n);
      }
      down = n * (n + be) * (n + ab - ga) * (n + N + ab + 1) / (d0 * d1);
      lower = (n + al) * (n + be) * (n + ga) * (n + ab - ga) / (d0 * d1);
    }
    const double forward = (n + 1) * (n - N) * (n + ab + 1) * (n + N + ab + 2) / (d1 * d2);
    if (forward == 0.0) {
      throw ZeroDenominatorError("racah recursion: vanishing forward coefficient at n = " +
                                     std::to_string(n), n);
    }
    const double diag = 0.25 * shift * shift - up - down;
    const double back = n > 0 ? lower * R[n - 1] : 0.0;
    R[n + 1] = ((lhs - diag) * R[n] - back) / forward;
  }
  return R;
}

double racah_weight_unnormalized(int m, const RacahParams& r) {
  r.validate();
  check_index(m, r, "racah_weight");
  return log_unnormalized_weight(m, r).value();
}

double racah_weight(int m, const RacahParams& r) {
  r.validate();
  check_index(m, r, "racah_weight");
  const double al = r.alpha, be = r.beta, ga = r.gamma;
  const int N = r.N;
  SignedLog w = log_unnormalized_weight(m, r);
  w *= log_pochhammer(-be - N, N) * log_pochhammer(ga - al - be - N, N);
  const SignedLog den = log_pochhammer(-al - be - N - 1, N) * log_pochhammer(ga - be - N + 1, N);
  if (den.sign == 0) {
    throw ParameterError("racah_weight: normalization degenerates (vanishing Pochhammer); "
                         "parameters outside the positive-weight domain");
  }
  w /= den;
  if (w.sign <= 0) {
    throw ParameterError("racah_weight: non-positive weight at m = " + std::to_string(m) +
                             "; parameters outside the positive-weight domain",
                         m);
  }
  return w.value();
}

double racah_kernel_norm(int n, const RacahParams& r) {
  r.validate();
  check_index(n, r, "racah_kernel_norm");
  const double al = r.alpha, be = r.beta, ga = r.gamma;
  const int N = r.N;
  SignedLog h = signed_log(n + al + be + 1) / signed_log(2 * n + al + be + 1);
  h *= log_pochhammer(-al - be - N - 1, N) * log_pochhammer(ga - be - N + 1, N);
  h *= log_pochhammer(be + 1, n) * log_pochhammer(al + be - ga + 1, n);
  h *= log_pochhammer(al + be + N + 2, n) * SignedLog{std::lgamma(n + 1.0), 1};
  const SignedLog den = log_pochhammer(-be - N, N) * log_pochhammer(ga - al - be - N, N) *
                        log_pochhammer(-N, n) * log_pochhammer(al + 1, n) *
                        log_pochhammer(ga + 1, n) * log_pochhammer(al + be + 2, n);
  if (den.sign == 0) throw ZeroDenominatorError("racah_kernel_norm: vanishing denominator", n);
  return (h / den).value();
}

double racah_orthonormal(int n, int m, const RacahParams& r) {
  const double kernel = racah_kernel(n, m, r);
  if (n == 0) return kernel;
  const double al = r.alpha, be = r.beta, ga = r.gamma;
  SignedLog sq = signed_log(2 * n + al + be + 1) / signed_log(n + al + be + 1);
  sq *= log_pochhammer(-r.N, n) * log_pochhammer(al + 1, n) * log_pochhammer(ga + 1, n) *
        log_pochhammer(al + be + 2, n);
  const SignedLog den = log_pochhammer(be + 1, n) * log_pochhammer(al + be - ga + 1, n) *
                        log_pochhammer(al + be + r.N + 2, n) * SignedLog{std::lgamma(n + 1.0), 1};
  if (den.sign == 0) throw ZeroDenominatorError("racah_orthonormal: vanishing denominator", n);
  sq /= den;
  if (sq.sign <= 0) {
    throw ParameterError("racah_orthonormal: negative radicand at n = " + std::to_string(n) +
                             "; parameters outside the orthonormal domain",
                         n);
  }
  return std::exp(0.5 * sq.log_abs) * kernel;
}

}  // namespace racah
}  // namespace wracah
