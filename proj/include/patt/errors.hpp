#pragma once

#include <stdexcept>
#include <string>

namespace patt {

enum class ErrorCode {
  // tensor / tape
  ShapeMismatch,
  NonPositiveBeta,
  NonScalarLoss,
  TapeReused,
  IdOutOfRange,
  // features
  ZeroStd,
  // route validation
  LengthOutOfRange,
  EmptyRoute,
  NonPositiveSpeed,
  ProfileLengthMismatch,
  ValueOutOfRange,
  TotalMismatch,
  NegativeDuration,
  // metrics / losses
  LengthMismatch,
  EmptyInput,
  ZeroTruth,
  MissingTruth,
  // training
  EmptyDataset,
  NonFiniteLoss,
  // io
  IoError,
  SchemaVersionMismatch,
  MalformedLine,
  VersionMismatch,
  // cli
  UnknownCommand,
  BadFlag,
};

const char* error_code_name(ErrorCode code);

// Exception carrying a structured code; what() is "CodeName: message".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace patt
