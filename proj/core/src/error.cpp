#include "aknn/error.hpp"

namespace aknn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::NonFiniteFeature:
      return "NonFiniteFeature";
    case ErrorCode::EmptyDataset:
      return "EmptyDataset";
    case ErrorCode::UnlabeledInstance:
      return "UnlabeledInstance";
    case ErrorCode::KTooLarge:
      return "KTooLarge";
    case ErrorCode::EmptyClass:
      return "EmptyClass";
    case ErrorCode::NonPositiveGc:
      return "NonPositiveGc";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::InconsistentColumns:
      return "InconsistentColumns";
    case ErrorCode::EmptyFile:
      return "EmptyFile";
    case ErrorCode::LengthMismatch:
      return "LengthMismatch";
    case ErrorCode::GenerationFailed:
      return "GenerationFailed";
    case ErrorCode::InvalidArgument:
      return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace aknn
