#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steiner_ecc {

enum class ErrorCode {
  NotConnected,
  HasCycle,
  BadVertexIds,
  BadCode,
  ParseError,
  InvalidPath,
  TooSmall,
  EmptySet,
  BadK,
  InvalidSite,
  NotGeneralizedStar,
  AlreadyBalanced,
  InfeasibleSequence,
  Infeasible,
  LengthMismatch,
  SumMismatch,
  Incomparable,
  CapExceeded,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::HasCycle: return "HasCycle";
    case ErrorCode::BadVertexIds: return "BadVertexIds";
    case ErrorCode::BadCode: return "BadCode";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::InvalidSite: return "InvalidSite";
    case ErrorCode::NotGeneralizedStar: return "NotGeneralizedStar";
    case ErrorCode::AlreadyBalanced: return "AlreadyBalanced";
    case ErrorCode::InfeasibleSequence: return "InfeasibleSequence";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::Incomparable: return "Incomparable";
    case ErrorCode::CapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

/// Every library failure is reported through this type; `code()` is the
/// stable, machine-checkable part and `what()` carries the detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steiner_ecc
