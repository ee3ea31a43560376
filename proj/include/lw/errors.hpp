#pragma once

#include <stdexcept>
#include <string>

namespace lw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input: out-of-range ids, self-loops, inconsistent counts.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An instance or search exceeds a configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Branch sets that overlap or are not connected.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the series-parallel contraction does not hold. `condition`
/// is "i", "ii" or "iii".
class HypothesisError : public PreconditionError {
 public:
  HypothesisError(std::string condition, const std::string& what)
      : PreconditionError("hypothesis (" + condition + ") violated: " + what), condition_(std::move(condition)) {}

  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

}  // namespace lw
