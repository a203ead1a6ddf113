#pragma once

#include <stdexcept>
#include <string>

namespace trevi {

/// Classified failure reasons, so callers can react to the kind of error
/// without parsing message text.
enum class ErrorCode {
    SeriesTooShort,
    InvalidDuration,
    InvalidParameter,
    ZeroVariance,
    LengthMismatch,
    TooFewSamples,
    DegenerateSamples,
    NoNodesInRange,
    IncompleteSurface,
    EmptySample,
    GapDetected,
    NonMonotonicTime,
    ParseError,
    NonFiniteValue,
    IoError,
    ConfigError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace trevi
