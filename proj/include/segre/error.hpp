#pragma once
#include <stdexcept>
#include <string>
#include <string_view>

namespace segre {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  NotStandardGraded,
  ReconstructionFailed,
  ResourceCap,
  NotSorted,
  BadTwist,
  NotPositive,
  NotApplicable,
  DimensionTooSmall,
  EmptyWindow,
  WindowTooSmall,
};

constexpr std::string_view to_string(ErrorCode c) {
  switch (c) {
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::NotStandardGraded: return "NotStandardGraded";
  case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
  case ErrorCode::ResourceCap: return "ResourceCap";
  case ErrorCode::NotSorted: return "NotSorted";
  case ErrorCode::BadTwist: return "BadTwist";
  case ErrorCode::NotPositive: return "NotPositive";
  case ErrorCode::NotApplicable: return "NotApplicable";
  case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
  case ErrorCode::EmptyWindow: return "EmptyWindow";
  case ErrorCode::WindowTooSmall: return "WindowTooSmall";
  }
  return "Unknown";
}

/// Every failure raised by the library. `token()` names the offending input
/// (a file name, a list literal, a number) when one exists.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, std::string message, std::string token = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message +
                           (token.empty() ? "" : " ['" + token + "']")),
        code_(code), token_(std::move(token)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string &token() const noexcept { return token_; }

private:
  ErrorCode code_;
  std::string token_;
};

} // namespace segre
