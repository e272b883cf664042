#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace symz {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or otherwise unusable user input.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what
                               : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an operation needs Ker(dF) = 0. Carries a kernel basis.
class DegenerateFormError : public Error {
 public:
  DegenerateFormError(const std::string& what, std::vector<std::vector<mpq_class>> kernel)
      : Error(what), kernel_(std::move(kernel)) {}

  const std::vector<std::vector<mpq_class>>& kernel() const noexcept { return kernel_; }

 private:
  std::vector<std::vector<mpq_class>> kernel_;
};

class NotSymmetrizerError : public Error {
 public:
  using Error::Error;
};

class FiberMismatchError : public Error {
 public:
  using Error::Error;
};

class UnsupportedDegreeError : public Error {
 public:
  using Error::Error;
};

class InvalidSpecError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace symz
