#include "conekit/error.hpp"

namespace conekit {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Parse: return "ParseError";
        case ErrorCode::DegenerateInterval: return "DegenerateInterval";
        case ErrorCode::PositivityFailure: return "PositivityFailure";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::PoleAtTau: return "PoleAtTau";
        case ErrorCode::InvalidInterval: return "InvalidInterval";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::NonPositiveProfile: return "NonPositiveProfile";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    }
    return "Unknown";
}

}  // namespace conekit
