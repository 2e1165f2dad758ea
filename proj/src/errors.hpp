#ifndef CRITSCALE_ERRORS_HPP
#define CRITSCALE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace critscale {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  UnboundedSet,
  SingularMatrix,
  StructureRequired,
  ResidualTooLarge,
  UnsupportedSize,
  IndexOutOfRange,
  WrongBlockKind,
  IrrationalAngle,
  ZeroEigenvalueUnsupported,
  NonPositiveEigenvalue,
  NonNegativeEigenvalue,
  NonPositiveDenominator,
  AsymmetricW,
  NoApplicableBlock,
  UpperBoundNotEmpty,
  DimensionUnsupported,
  MonotonicityViolation,
  ComplexityCap,
  InfeasibleOmega,
  DegenerateProjection,
  ParseError,
  NumericalFailure,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::UnboundedSet: return "UnboundedSet";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::StructureRequired: return "StructureRequired";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::WrongBlockKind: return "WrongBlockKind";
    case ErrorCode::IrrationalAngle: return "IrrationalAngle";
    case ErrorCode::ZeroEigenvalueUnsupported: return "ZeroEigenvalueUnsupported";
    case ErrorCode::NonPositiveEigenvalue: return "NonPositiveEigenvalue";
    case ErrorCode::NonNegativeEigenvalue: return "NonNegativeEigenvalue";
    case ErrorCode::NonPositiveDenominator: return "NonPositiveDenominator";
    case ErrorCode::AsymmetricW: return "AsymmetricW";
    case ErrorCode::NoApplicableBlock: return "NoApplicableBlock";
    case ErrorCode::UpperBoundNotEmpty: return "UpperBoundNotEmpty";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorCode::ComplexityCap: return "ComplexityCap";
    case ErrorCode::InfeasibleOmega: return "InfeasibleOmega";
    case ErrorCode::DegenerateProjection: return "DegenerateProjection";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

}  // namespace critscale

#endif
