#pragma once

#include <functional>

namespace wracah::quadrature {

struct DecayingIntegral {
  double value = 0.0;
  double error_estimate = 0.0;
  double upper_limit = 0.0;  ///< where integration stopped
  int panels = 0;
};

struct DecayOptions {
  double panel_width = 1.0;
  double tail_tolerance = 1e-14;  ///< stop once a trailing panel stays below this
  double panel_tolerance = 1e-13; ///< relative tolerance per adaptive panel
  int max_panels = 4000;
};

/// Integral of f over [lower, infinity) for integrands with a decaying tail.
/// Each unit panel is integrated with adaptive Gauss-Kronrod; panels are appended
/// until a panel past the integrand's peak stays below tail_tolerance everywhere
/// on a sampling lattice.
DecayingIntegral integrate_to_decay(const std::function<double(double)>& f, double lower,
                                    const DecayOptions& options = {});

}  // namespace wracah::quadrature
