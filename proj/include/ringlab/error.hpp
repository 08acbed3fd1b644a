#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent RingSpec. `path()` is a JSON-pointer-like
/// location inside the spec document ("$" is the root).
class SpecError : public Error {
 public:
  SpecError(std::string path, const std::string& message)
      : Error(path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// A computation would exceed a configured size bound.
class SizeExceeded : public Error {
 public:
  SizeExceeded(std::string what, std::size_t required, std::size_t limit)
      : Error(what + ": requires order " + std::to_string(required) +
              " but the limit is " + std::to_string(limit)),
        required_(required),
        limit_(limit) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t required_;
  std::size_t limit_;
};

/// A constructor precondition failed (non-group addition, missing identity,
/// bimodule violation, ...). The message carries the witness.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// One-sided ideal enumeration grew past its count limit.
class LatticeLimitExceeded : public Error {
 public:
  explicit LatticeLimitExceeded(std::size_t limit)
      : Error("ideal lattice exceeds count limit " + std::to_string(limit)),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace ringlab
