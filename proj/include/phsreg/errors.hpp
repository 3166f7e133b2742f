#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace phsreg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or consistency problem in user-supplied data; carries the
/// name of the offending field.
class DimensionError : public Error {
 public:
  DimensionError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// (lambda I - A) is numerically singular at the requested point.
class ResolventSingularError : public Error {
 public:
  ResolventSingularError(std::complex<double> lambda, double rcond_estimate)
      : Error("resolvent singular at lambda = (" + std::to_string(lambda.real()) + ", " +
              std::to_string(lambda.imag()) + "i), rcond ~ " + std::to_string(rcond_estimate)),
        lambda_(lambda),
        rcond_(rcond_estimate) {}
  std::complex<double> lambda() const { return lambda_; }
  double rcond_estimate() const { return rcond_; }

 private:
  std::complex<double> lambda_;
  double rcond_;
};

/// Gain sweep finished without finding a stabilizing gain; the message
/// contains the full table.
class NoStableGainError : public Error {
 public:
  using Error::Error;
};

/// The error signal carries no usable decaying envelope.
class UndefinedDecayRateError : public Error {
 public:
  using Error::Error;
};

/// Model/controller file could not be parsed; carries the key path.
class ParseError : public Error {
 public:
  ParseError(std::string key_path, const std::string& what)
      : Error(key_path + ": " + what), key_path_(std::move(key_path)) {}
  const std::string& key_path() const { return key_path_; }

 private:
  std::string key_path_;
};

}  // namespace phsreg
