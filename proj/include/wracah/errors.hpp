#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace wracah {

/// Raised when inputs fall outside the domain an operation is defined on.
/// The command-line front end maps this to exit status 2.
class ParameterError : public std::domain_error {
 public:
  explicit ParameterError(const std::string& what, std::optional<int> index = std::nullopt)
      : std::domain_error(what), index_(index) {}

  /// Offending recursion/series index, when the failure is tied to one.
  std::optional<int> index() const { return index_; }

 private:
  std::optional<int> index_;
};

/// Gamma function evaluated at a nonpositive integer.
class PoleError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A hypergeometric denominator parameter vanishes inside the summation range.
class SingularSeriesError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

/// A recursion coefficient denominator vanishes, or a radicand is negative.
class ZeroDenominatorError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

}  // namespace wracah
