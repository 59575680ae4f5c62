#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace amitsur {

/// Failure categories surfaced by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidInput,
  DimensionMismatch,
  NonUnit,
  UnsupportedDegree,
  DiscriminantTooLarge,
  NotACoboundary,
  MaxTriesExceeded,
  SingularSystem,
  NotInKernel,
  RamifiedSupport,
  InconsistentPresentation,
  ComputationLimit,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
 public:
  explicit ErrorOf(const std::string& what) : Error(K, what) {}
};

using InvalidInput = ErrorOf<ErrorKind::InvalidInput>;
using DimensionMismatch = ErrorOf<ErrorKind::DimensionMismatch>;
using UnsupportedDegree = ErrorOf<ErrorKind::UnsupportedDegree>;
using DiscriminantTooLarge = ErrorOf<ErrorKind::DiscriminantTooLarge>;
using NotACoboundary = ErrorOf<ErrorKind::NotACoboundary>;
using MaxTriesExceeded = ErrorOf<ErrorKind::MaxTriesExceeded>;
using SingularSystem = ErrorOf<ErrorKind::SingularSystem>;
using NotInKernel = ErrorOf<ErrorKind::NotInKernel>;
using RamifiedSupport = ErrorOf<ErrorKind::RamifiedSupport>;
using InconsistentPresentation = ErrorOf<ErrorKind::InconsistentPresentation>;
using ComputationLimit = ErrorOf<ErrorKind::ComputationLimit>;

/// Raised when an element that must be invertible is a zero divisor.
/// Carries coefficients of a nonzero annihilator y with a·y = 0.
class NonUnit : public Error {
 public:
  NonUnit(const std::string& what, std::vector<mpq_class> annihilator = {})
      : Error(ErrorKind::NonUnit, what), annihilator_(std::move(annihilator)) {}
  const std::vector<mpq_class>& annihilator() const noexcept { return annihilator_; }

 private:
  std::vector<mpq_class> annihilator_;
};

}  // namespace amitsur
