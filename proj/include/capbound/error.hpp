#pragma once

#include <stdexcept>
#include <string>

namespace capbound {

/// Failure category. Maps one-to-one onto the CLI exit codes and the C API
/// status codes (input = 1, numerical = 2).
enum class ErrorKind { Input = 1, Numerical = 2 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed files, invalid parameters, violated preconditions.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};

/// Ill-conditioned solves, divergent integrals, failed convergence checks.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what) : Error(ErrorKind::Numerical, what) {}
};

}  // namespace capbound
