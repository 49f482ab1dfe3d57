#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

enum class ErrorKind {
  Malformed,
  LabelOutOfRange,
  SelfLoop,
  NotALeaf,
  SameVertex,
  TooSmall,
  DegreeOutOfRange,
  NeighborShapeViolated,
  BNotEligible,
  InvalidStep,
  OrderMismatch,
  SurplusExceedsOrder,
  UnsupportedTarget,
  PreconditionViolated,
  MissingComponentValue,
  BelowThreshold,
  CapExceeded,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by apply_plan; `index` is the position of the first step that failed.
class InvalidStepError : public Error {
 public:
  InvalidStepError(std::size_t index, ErrorKind cause, const std::string& what)
      : Error(ErrorKind::InvalidStep, "step " + std::to_string(index) + ": " + what),
        index_(index),
        cause_(cause) {}

  std::size_t index() const noexcept { return index_; }
  ErrorKind cause() const noexcept { return cause_; }

 private:
  std::size_t index_;
  ErrorKind cause_;
};

}  // namespace ramsey
