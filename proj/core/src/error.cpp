#include "triexp/error.hpp"

namespace triexp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::EmptyPeriod: return "EmptyPeriod";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotInAttractor: return "NotInAttractor";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::AlphaUndecided: return "AlphaUndecided";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::WitnessMismatch: return "WitnessMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::DegenerateSubshift: return "DegenerateSubshift";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace triexp
