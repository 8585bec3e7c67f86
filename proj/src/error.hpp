#pragma once

#include <stdexcept>
#include <string>

namespace roe {

// Base class for every failure raised by the library. The C API maps each
// subclass onto one roe_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotSelfAdjoint : public Error {
 public:
  NotSelfAdjoint(const std::string& what, double max_asymmetry)
      : Error(what), max_asymmetry_(max_asymmetry) {}
  double max_asymmetry() const { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

// A spectral value fell outside the domain of the function being applied.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double offending)
      : Error(what), offending_(offending) {}
  double offending_value() const { return offending_; }

 private:
  double offending_;
};

// Inputs do not satisfy the hypothesis of an inequality suite.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace roe
