#include "trevi/errors.hpp"

namespace trevi {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::InvalidDuration: return "InvalidDuration";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateSamples: return "DegenerateSamples";
    case ErrorCode::NoNodesInRange: return "NoNodesInRange";
    case ErrorCode::IncompleteSurface: return "IncompleteSurface";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::GapDetected: return "GapDetected";
    case ErrorCode::NonMonotonicTime: return "NonMonotonicTime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ConfigError: return "ConfigError";
    }
    return "UnknownError";
}

} // namespace trevi
