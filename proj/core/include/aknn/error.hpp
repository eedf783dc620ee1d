#pragma once

#include <stdexcept>
#include <string>

namespace aknn {

enum class ErrorCode {
  DimensionMismatch,
  NonFiniteFeature,
  EmptyDataset,
  UnlabeledInstance,
  KTooLarge,
  EmptyClass,
  NonPositiveGc,
  ParseError,
  InconsistentColumns,
  EmptyFile,
  LengthMismatch,
  GenerationFailed,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

/// Library-wide exception; carries a machine-checkable code plus a message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace aknn
