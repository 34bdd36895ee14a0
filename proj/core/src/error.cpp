#include "lieder/error.hpp"

namespace lieder {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EqualIndices: return "EqualIndices";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::NotSkewAdjoint: return "NotSkewAdjoint";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::ComplexWeight: return "ComplexWeight";
    case ErrorKind::NeedThreeIndices: return "NeedThreeIndices";
    case ErrorKind::NonLinearHypothesis: return "NonLinearHypothesis";
    case ErrorKind::UnknownLemma: return "UnknownLemma";
    case ErrorKind::WitnessMismatch: return "WitnessMismatch";
    case ErrorKind::InconsistentWitnessTable: return "InconsistentWitnessTable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace lieder
