#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hjls {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: wrong lengths, out-of-range indices, non-finite data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ShapeMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Grid construction and ghost-cell failures. Carries the offending axis.
class GridError : public ValidationError {
 public:
  enum class Kind {
    DimensionMismatch,
    NonPositiveExtent,
    TooFewNodes,
    AxisOutOfRange,
    GhostWidthTooLarge,
  };

  GridError(Kind kind, std::size_t axis, const std::string& what)
      : ValidationError(what), kind_(kind), axis_(axis) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t axis() const noexcept { return axis_; }

 private:
  Kind kind_;
  std::size_t axis_;
};

/// Numerical failure during time integration; `step` is the global step index
/// (or the BRT interval index when raised by the reachability driver).
class SolverError : public Error {
 public:
  SolverError(std::size_t step, const std::string& what) : Error(what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hjls
