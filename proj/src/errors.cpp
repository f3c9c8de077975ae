#include "patt/errors.hpp"

namespace patt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonPositiveBeta: return "NonPositiveBeta";
    case ErrorCode::NonScalarLoss: return "NonScalarLoss";
    case ErrorCode::TapeReused: return "TapeReused";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::ZeroStd: return "ZeroStd";
    case ErrorCode::LengthOutOfRange: return "LengthOutOfRange";
    case ErrorCode::EmptyRoute: return "EmptyRoute";
    case ErrorCode::NonPositiveSpeed: return "NonPositiveSpeed";
    case ErrorCode::ProfileLengthMismatch: return "ProfileLengthMismatch";
    case ErrorCode::ValueOutOfRange: return "ValueOutOfRange";
    case ErrorCode::TotalMismatch: return "TotalMismatch";
    case ErrorCode::NegativeDuration: return "NegativeDuration";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ZeroTruth: return "ZeroTruth";
    case ErrorCode::MissingTruth: return "MissingTruth";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::NonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
    case ErrorCode::BadFlag: return "BadFlag";
  }
  return "UnknownError";
}

}  // namespace patt
