#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polareu {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or variety file.
class ParseError : public Error {
 public:
  static constexpr std::size_t kNoPosition = static_cast<std::size_t>(-1);

  explicit ParseError(const std::string& what) : Error(what), position_(kNoPosition) {}
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on the inputs does not hold (wrong dimension, empty variety,
/// incompatible rings, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A Groebner computation exceeded its pair or reduction budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Every randomized trial failed its genericity checks.
class GenericityExhausted : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagreed.
class CrossCheckMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace polareu
