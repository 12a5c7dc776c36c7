// Error types
// Every failure raised by the library carries one of these codes.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wtpc {

enum class ErrorCode {
    NonFiniteResult,
    NoPositiveCp,
    InvalidArgument,
    MissingMandatoryField,
    InvalidSpec,
    DivisionByZero,
    GroundStrike,
    MissingDiameter,
    UnknownParameter,
    UnknownModel,
    ParseError,
};

inline constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonFiniteResult: return "NonFiniteResult";
    case ErrorCode::NoPositiveCp: return "NoPositiveCp";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MissingMandatoryField: return "MissingMandatoryField";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::GroundStrike: return "GroundStrike";
    case ErrorCode::MissingDiameter: return "MissingDiameter";
    case ErrorCode::UnknownParameter: return "UnknownParameter";
    case ErrorCode::UnknownModel: return "UnknownModel";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

/// Numeric failures (exit code 3 in the CLI) as opposed to bad input.
inline constexpr bool is_numeric_failure(ErrorCode code) {
    return code == ErrorCode::NonFiniteResult ||
           code == ErrorCode::NoPositiveCp ||
           code == ErrorCode::DivisionByZero;
}

inline void require(bool condition, ErrorCode code, const std::string &message) {
    if (!condition) {
        throw Error(code, message);
    }
}

} // namespace wtpc
