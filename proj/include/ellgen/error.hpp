#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellgen {

enum class ErrorKind {
  ZeroConstantTerm,
  BadConstantTerm,
  WeightViolation,
  OddTermPresent,
  NonUnitConstant,
  DimMismatch,
  DimNotMultipleOf4,
  InvalidDegree,
  ResidualNonzero,
  NotInUpperHalfPlane,
  ToleranceNotReached,
  ExponentRangeViolation,
  Parse,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ellgen
