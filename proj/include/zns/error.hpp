#pragma once

#include <stdexcept>
#include <string>

namespace zns {

enum class ErrorKind {
  NumericallyAmbiguous,
  IdentityInput,
  CoincidentFixedPoints,
  OverlappingDiscs,
  DegenerateMatrix,
  InvalidKindForParity,
  OrderNotDividing,
  InadmissibleSignature,
  PlacementFailure,
  CertificateFailure,
  ParabolicSuspect,
  GcdConditionFailed,
  ConditionOneFailed,
  ConditionTwoFailed,
  HalfTurnConditionFailed,
  ParityViolation,
  SearchSpaceTooLarge,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by verify() when a combination step cannot be certified.
class CertificateError : public Error {
 public:
  CertificateError(int step, const std::string& detail)
      : Error(ErrorKind::CertificateFailure, "step " + std::to_string(step) + ": " + detail),
        step_(step) {}

  int step() const noexcept { return step_; }

 private:
  int step_;
};

}  // namespace zns
