#pragma once

#include <stdexcept>
#include <string>

namespace hbt {

/// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series or asymptotic expansion failed to reach its truncation tolerance.
class NonConvergence : public Error {
 public:
  explicit NonConvergence(const std::string& what, double order = 0.0, double argument = 0.0)
      : Error(what), order_(order), argument_(argument) {}

  double order() const noexcept { return order_; }
  double argument() const noexcept { return argument_; }

 private:
  double order_;
  double argument_;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidExponent : public Error {
 public:
  using Error::Error;
};

/// Two functions (or a function and a plan) live on different quadrature grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

class ReportNotSolvable : public Error {
 public:
  using Error::Error;
};

/// Malformed function file or function spec.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hbt
