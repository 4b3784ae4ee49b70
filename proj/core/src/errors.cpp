#include "sympflag/errors.hpp"

namespace sympflag {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedM2C: return "MalformedM2C";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NotHyperHermitian: return "NotHyperHermitian";
    case ErrorKind::PairingFailure: return "PairingFailure";
    case ErrorKind::SingularInvSqrt: return "SingularInvSqrt";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotGroupElement: return "NotGroupElement";
    case ErrorKind::SingularDenominator: return "SingularDenominator";
    case ErrorKind::DegenerateQuadruple: return "DegenerateQuadruple";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SecondOrderResidue: return "SecondOrderResidue";
    case ErrorKind::NotEigenvector: return "NotEigenvector";
    case ErrorKind::ChartBoundary: return "ChartBoundary";
    case ErrorKind::TooCloseToPole: return "TooCloseToPole";
    case ErrorKind::TerminationViolated: return "TerminationViolated";
    case ErrorKind::NotSkewAdjoint: return "NotSkewAdjoint";
    case ErrorKind::NotUnitQuaternion: return "NotUnitQuaternion";
    case ErrorKind::PartitionMismatch: return "PartitionMismatch";
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::UnsupportedWeightCount: return "UnsupportedWeightCount";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace sympflag
