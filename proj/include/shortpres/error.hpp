#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace shortpres {

enum class ErrorKind {
  DomainMismatch,
  OverlappingCycles,
  PointOutOfDomain,
  ParseError,
  UnsupportedDegree,
  BadPrimeClass,
  UnboundSymbol,
  ParityViolation,
  EnumerationTooLarge,
  DegreeTooLarge,
  InternalInvariantViolation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace shortpres
