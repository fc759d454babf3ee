#pragma once

#include <stdexcept>
#include <string>

namespace mincut {

enum class ErrorCode {
  Disconnected,
  TrivialCut,
  ParseError,
  DegreeTooHigh,
  NoSuchLeaf,
  BadTimestamps,
  NotAnAncestorRep,
  EmptyPath,
  BadProbability,
  Degenerate,
  NoProgress,
  SkeletonDisconnected,
  TooLarge,
  InvariantViolation,
};

const char* to_string(ErrorCode code);

// All library failures surface as this exception; `code()` lets callers
// (and the CLI) distinguish them without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TrivialCut: return "TrivialCut";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::NoSuchLeaf: return "NoSuchLeaf";
    case ErrorCode::BadTimestamps: return "BadTimestamps";
    case ErrorCode::NotAnAncestorRep: return "NotAnAncestorRep";
    case ErrorCode::EmptyPath: return "EmptyPath";
    case ErrorCode::BadProbability: return "BadProbability";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NoProgress: return "NoProgress";
    case ErrorCode::SkeletonDisconnected: return "SkeletonDisconnected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace mincut
