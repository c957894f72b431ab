#pragma once

#include <stdexcept>
#include <string>

namespace svpkg {

enum class ErrorCode : int {
    Ok = 0,
    ConfigError = 1,
    ParseError = 2,
    NonMonotoneTime = 3,
    NonPositiveVolume = 4,
    NonFiniteState = 5,
    SingularDesign = 6,
    ChainDiverged = 7,
    DimensionUnsupported = 8,
    DegenerateNorm = 9,
    RootNotBracketed = 10,
    OddCountForAntithetic = 11,
    EnsembleTooSmall = 12,
    InstanceTooLarge = 13,
    ChecksumMismatch = 14,
    IoError = 15,
    InvalidArgument = 16,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace svpkg
