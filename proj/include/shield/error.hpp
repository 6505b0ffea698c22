#pragma once

#include <stdexcept>
#include <string>

namespace shield {

enum class ErrorCode {
  OutOfRange,
  AmbiguousDecimal,
  NoNumericValue,
  Overlap,
  EdgeMismatch,
  AtlasViolation,
  IncompleteCoverage,
  MissingChoice,
  NotValidated,
  Parse,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AmbiguousDecimal: return "AmbiguousDecimal";
    case ErrorCode::NoNumericValue: return "NoNumericValue";
    case ErrorCode::Overlap: return "OverlapError";
    case ErrorCode::EdgeMismatch: return "EdgeMismatchError";
    case ErrorCode::AtlasViolation: return "AtlasViolation";
    case ErrorCode::IncompleteCoverage: return "IncompleteCoverage";
    case ErrorCode::MissingChoice: return "MissingChoice";
    case ErrorCode::NotValidated: return "NotValidated";
    case ErrorCode::Parse: return "ParseError";
  }
  return "Unknown";
}

// Single exception type for the library; the code names the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace shield
