#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wracah::verify {

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;

  bool overall() const;
  /// Records measured <= threshold.
  void expect_at_most(std::string name, double measured, double threshold);
};

/// specfun, wilson, racah, matrices, reconstruction
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws ParameterError on unknown names.
VerifyReport run_suite(std::string_view name);

}  // namespace wracah::verify
