#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcurve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter query outside a curve's domain, or a stencil that does not fit.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyDomainError : public DomainError {
 public:
  EmptyDomainError() : DomainError("empty domain: s_min must be < s_max") {}
};

/// Invalid construction parameters (m = 0, kappa0 <= 0, kappa <= 0 on a grid, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Non-finite values or a numerical singularity at a parameter value.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, std::optional<double> s = std::nullopt)
      : Error(what), s_(s) {}
  std::optional<double> where() const { return s_; }

 private:
  std::optional<double> s_;
};

/// Curvature fell below the frame singularity guard.
class KappaTooSmall : public NumericalError {
 public:
  KappaTooSmall(double s, double kappa);
  double kappa() const { return kappa_; }

 private:
  double kappa_;
};

/// The natural-equation integrator aborted; last_good_s is the last node
/// whose state was finite and valid.
class IntegrationError : public NumericalError {
 public:
  IntegrationError(const std::string& what, double failing_s, double last_good_s)
      : NumericalError(what, failing_s), last_good_s_(last_good_s) {}
  double last_good_s() const { return last_good_s_; }

 private:
  double last_good_s_;
};

/// A curve failed the admissibility requirement at a sampled parameter.
class AdmissibilityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Expression syntax error; offset is a byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace galcurve
