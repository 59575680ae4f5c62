#include "amitsur/errors.hpp"

namespace amitsur {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonUnit: return "NonUnit";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::DiscriminantTooLarge: return "DiscriminantTooLarge";
    case ErrorKind::NotACoboundary: return "NotACoboundary";
    case ErrorKind::MaxTriesExceeded: return "MaxTriesExceeded";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::RamifiedSupport: return "RamifiedSupport";
    case ErrorKind::InconsistentPresentation: return "InconsistentPresentation";
    case ErrorKind::ComputationLimit: return "ComputationLimit";
  }
  return "Unknown";
}

}  // namespace amitsur
