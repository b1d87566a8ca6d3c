#pragma once

#include <stdexcept>
#include <string>

namespace wrb {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A cochain or tensor would exceed the configured coefficient cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that does not satisfy its contract
/// (e.g. a map that is not a weighted Rota-Baxter operator).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace wrb
