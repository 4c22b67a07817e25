#include "wracah/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "wracah/errors.hpp"

namespace wracah::quadrature {

DecayingIntegral integrate_to_decay(const std::function<double(double)>& f, double lower,
                                    const DecayOptions& options) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;
  constexpr int kProbes = 32;

  DecayingIntegral result;
  double peak = 0.0;
  double a = lower;
  for (int panel = 0; panel < options.max_panels; ++panel) {
    const double b = a + options.panel_width;
    double err = 0.0;
    result.value += Rule::integrate(f, a, b, 15, options.panel_tolerance, &err);
    result.error_estimate += err;
    ++result.panels;

    double panel_max = 0.0;
    for (int i = 0; i <= kProbes; ++i) {
      panel_max = std::max(panel_max, std::abs(f(a + (b - a) * i / kProbes)));
    }
    const bool past_peak = panel_max < peak;
    peak = std::max(peak, panel_max);
    a = b;
    if (past_peak && panel_max < options.tail_tolerance) {
      result.upper_limit = b;
      return result;
    }
  }
  throw ParameterError("integrate_to_decay: integrand did not decay within the panel budget");
}

}  // namespace wracah::quadrature
