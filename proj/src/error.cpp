#include "shortpres/error.hpp"

namespace shortpres {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::DomainMismatch: return "DomainMismatch";
  case ErrorKind::OverlappingCycles: return "OverlappingCycles";
  case ErrorKind::PointOutOfDomain: return "PointOutOfDomain";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
  case ErrorKind::BadPrimeClass: return "BadPrimeClass";
  case ErrorKind::UnboundSymbol: return "UnboundSymbol";
  case ErrorKind::ParityViolation: return "ParityViolation";
  case ErrorKind::EnumerationTooLarge: return "EnumerationTooLarge";
  case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
  case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
: std::runtime_error(std::string(to_string(kind)) + ": " + what),
  kind_(kind)
{}

} // namespace shortpres
