#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieder {

enum class ErrorKind {
  IndexOutOfRange,
  EqualIndices,
  DimensionMismatch,
  RingMismatch,
  UnsupportedRing,
  NotSkewAdjoint,
  ZeroWeight,
  ComplexWeight,
  NeedThreeIndices,
  NonLinearHypothesis,
  UnknownLemma,
  WitnessMismatch,
  InconsistentWitnessTable,
  DivisionByZero,
  Infeasible,
  ParseError,
  ConfigError,
  IOError,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library raises carries a machine-checkable kind. Check
// failures inside verification campaigns are never raised; they are recorded
// in a VerificationReport.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lieder
