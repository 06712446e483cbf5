#pragma once

#include <stdexcept>
#include <string>

namespace arbopack {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input (unknown vertex, loop, f > g, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive routine was asked to run above its configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A routine was called on an instance that violates its precondition,
/// e.g. orienting an infeasible instance.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A state that the underlying theory rules out. Always a bug or a violated
/// precondition upstream; `diagnostics()` carries whatever log was available.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what, std::string diagnostics = {})
      : Error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

}  // namespace arbopack
