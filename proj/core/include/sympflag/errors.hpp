#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sympflag {

enum class ErrorKind {
  MalformedM2C,
  DimensionMismatch,
  NonSquare,
  NotHyperHermitian,
  PairingFailure,
  SingularInvSqrt,
  SingularMatrix,
  NotGroupElement,
  SingularDenominator,
  DegenerateQuadruple,
  ShapeMismatch,
  IndexOutOfRange,
  SecondOrderResidue,
  NotEigenvector,
  ChartBoundary,
  TooCloseToPole,
  TerminationViolated,
  NotSkewAdjoint,
  NotUnitQuaternion,
  PartitionMismatch,
  InvalidRank,
  UnsupportedWeightCount,
  OddDimension,
  UnknownSuite,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every precondition failure in the library surfaces as this exception;
/// callers branch on kind() rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sympflag
