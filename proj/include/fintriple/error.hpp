#ifndef FINTRIPLE_ERROR_HPP
#define FINTRIPLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fintriple {

enum class ErrorCode {
  EmptyAlgebra,
  FieldBaseMismatch,
  IndexOutOfRange,
  InvalidLabel,
  AsymmetricMatrix,
  UnfaithfulRepresentation,
  AlgebraMismatch,
  ShapeMismatch,
  DegreeUnsupported,
  NotInner,
  InvalidWeight,
  DisagreementAcrossD,
  NotAssociative,
  NoIdentity,
  NoInverse,
  SpanConditionFailed,
  SingularSystem,
  SizeMismatch,
  UnknownFixture,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-checkable error code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyAlgebra: return "EmptyAlgebra";
    case ErrorCode::FieldBaseMismatch: return "FieldBaseMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorCode::UnfaithfulRepresentation: return "UnfaithfulRepresentation";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DegreeUnsupported: return "DegreeUnsupported";
    case ErrorCode::NotInner: return "NotInner";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::DisagreementAcrossD: return "DisagreementAcrossD";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::SpanConditionFailed: return "SpanConditionFailed";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "UnknownError";
}

}  // namespace fintriple

#endif
