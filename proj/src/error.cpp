#include "ellgen/error.hpp"

namespace ellgen {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::WeightViolation: return "WeightViolation";
    case ErrorKind::OddTermPresent: return "OddTermPresent";
    case ErrorKind::NonUnitConstant: return "NonUnitConstant";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DimNotMultipleOf4: return "DimNotMultipleOf4";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::ResidualNonzero: return "ResidualNonzero";
    case ErrorKind::NotInUpperHalfPlane: return "NotInUpperHalfPlane";
    case ErrorKind::ToleranceNotReached: return "ToleranceNotReached";
    case ErrorKind::ExponentRangeViolation: return "ExponentRangeViolation";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace ellgen
