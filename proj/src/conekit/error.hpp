#pragma once

#include <stdexcept>
#include <string>

namespace conekit {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    DegenerateInterval,
    PositivityFailure,
    InternalInconsistency,
    PoleAtTau,
    InvalidInterval,
    ZeroPolynomial,
    Overflow,
    NonPositiveProfile,
    DegenerateDenominator,
    PreconditionViolation,
};

const char* error_code_name(ErrorCode code) noexcept;

// Every failure inside the library is reported through this type; the C API
// maps the code onto conekit_status and keeps what() as the detail string.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, std::string(error_code_name(code)) + ": " + what);
}

}  // namespace conekit
