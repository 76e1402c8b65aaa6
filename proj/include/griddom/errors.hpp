#pragma once

#include <stdexcept>
#include <string>

namespace griddom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad coordinates, mismatched sizes).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds a configured solver ceiling.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Iteration did not reach a fixed shift within the allowed number of steps.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The upper-bound constructor could not meet its size bound.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A matrix cache file is unreadable or malformed.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace griddom
