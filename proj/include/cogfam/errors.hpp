#pragma once

#include <stdexcept>
#include <string>

namespace cogfam {

/// Bad user data: malformed rows, out-of-range scores, empty cohorts.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked to work on a model family it does not support.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A linkage identity or agreement theorem failed at runtime. Never caused by
/// valid data; indicates a bug in the engine.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cogfam
