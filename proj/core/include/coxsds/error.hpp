#pragma once

#include <stdexcept>
#include <string>

namespace coxsds {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range indices, bad JSON, non-bijective maps.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration bound was hit. `cap_name()` names the bound.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, long long limit)
      : Error("cap exceeded: " + cap_name + " (limit " +
              std::to_string(limit) + ")"),
        cap_name_(std::move(cap_name)),
        limit_(limit) {}

  const std::string& cap_name() const { return cap_name_; }
  long long limit() const { return limit_; }

 private:
  std::string cap_name_;
  long long limit_;
};

/// Edge label outside {2,...,6,inf} used in exact mode.
class UnsupportedLabel : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A word that is not a product of all generators, each exactly once.
class NotACoxeterElement : public Error {
 public:
  using Error::Error;
};

class NotPiIndependent : public Error {
 public:
  using Error::Error;
};

/// Operation-specific precondition failure (e.g. source_to_sink at a non-source).
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace coxsds
