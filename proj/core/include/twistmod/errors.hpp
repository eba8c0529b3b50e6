#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twistmod {

enum class ErrorCode {
    DomainError,
    CriticalLevel,
    NotFixed,
    NeedsFieldExtension,
    NotSemisimple,
    NotUnipotent,
    NotQuasiPrimary,
    InvalidSymmetry,
    UnsupportedAlgebra,
    NotIntertwining,
    Unsupported,
    TruncationOverflow,
    InvalidConfig,
};

std::string_view error_code_name(ErrorCode code);

/// Library-wide exception; every recoverable failure carries a machine-readable code.
class TwistError : public std::runtime_error {
public:
    TwistError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::CriticalLevel: return "CriticalLevel";
        case ErrorCode::NotFixed: return "NotFixed";
        case ErrorCode::NeedsFieldExtension: return "NeedsFieldExtension";
        case ErrorCode::NotSemisimple: return "NotSemisimple";
        case ErrorCode::NotUnipotent: return "NotUnipotent";
        case ErrorCode::NotQuasiPrimary: return "NotQuasiPrimary";
        case ErrorCode::InvalidSymmetry: return "InvalidSymmetry";
        case ErrorCode::UnsupportedAlgebra: return "UnsupportedAlgebra";
        case ErrorCode::NotIntertwining: return "NotIntertwining";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::TruncationOverflow: return "TruncationOverflow";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

}  // namespace twistmod
