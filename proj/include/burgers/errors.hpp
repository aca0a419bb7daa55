#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace burgers {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed external input (non-finite samples, unreadable tables, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A recursion step was requested before the terms it depends on exist.
class DependencyError : public Error {
 public:
  using Error::Error;
};

/// A quadrature or iterative evaluation missed its tolerance.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double x, double t)
      : Error(what), estimate_(estimate), x_(x), t_(t) {}

  double estimate() const noexcept { return estimate_; }
  double x() const noexcept { return x_; }
  double t() const noexcept { return t_; }

 private:
  double estimate_;
  double x_;
  double t_;
};

/// Non-finite intermediate while evaluating a closed-form term.
class OverflowError : public Error {
 public:
  OverflowError(const std::string& what, int m) : Error(what), m_(m) {}
  int m() const noexcept { return m_; }

 private:
  int m_;
};

/// Time stepping produced NaN/Inf.
class BlowUpError : public Error {
 public:
  BlowUpError(const std::string& what, double t) : Error(what), t_(t) {}
  double t() const noexcept { return t_; }

 private:
  double t_;
};

/// Cole-Hopf denominator vanished (the solution itself is singular there).
class NearSingularError : public Error {
 public:
  NearSingularError(const std::string& what, double x, double t)
      : Error(what), x_(x), t_(t) {}
  double x() const noexcept { return x_; }
  double t() const noexcept { return t_; }

 private:
  double x_;
  double t_;
};

// Helpers used to keep precondition checks on one line.
void require(bool condition, const std::string& message);

}  // namespace burgers
