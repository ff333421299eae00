#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jprime {

/// Failure variants raised by the library. The CLI maps every one of these
/// to exit status 2 and prints the variant name.
enum class ErrorKind {
  ZeroPolynomial,
  EndpointIsRoot,
  PoleAtNu,
  NonpositiveIntegerNu,
  NonpositiveNu,
  PrecisionExhausted,
  BracketFailure,
  NonadmissibleNu,
  QAtOneOverNuZero,
  NonexactDivision,
  ZeroNu,
  RootIsolationFailure,
  CoincidentPoints,
  NuInM,
  NonStabilized,
  BracketSignFailure,
  UndecidableSide,
  InvalidArgument,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorKind::PoleAtNu: return "PoleAtNu";
    case ErrorKind::NonpositiveIntegerNu: return "NonpositiveIntegerNu";
    case ErrorKind::NonpositiveNu: return "NonpositiveNu";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::NonadmissibleNu: return "NonadmissibleNu";
    case ErrorKind::QAtOneOverNuZero: return "QAtOneOverNuZero";
    case ErrorKind::NonexactDivision: return "NonexactDivision";
    case ErrorKind::ZeroNu: return "ZeroNu";
    case ErrorKind::RootIsolationFailure: return "RootIsolationFailure";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NuInM: return "NuInM";
    case ErrorKind::NonStabilized: return "NonStabilized";
    case ErrorKind::BracketSignFailure: return "BracketSignFailure";
    case ErrorKind::UndecidableSide: return "UndecidableSide";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jprime
