#ifndef POLYCOMP_ERROR_HPP
#define POLYCOMP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycomp {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    InvalidInput,
    UnsupportedCharacteristic,
    NotSeparable,
    DegreeTooSmall,
    VerificationFailed,
    SearchTooLarge,
    InvalidConfig,
    OrbitHitsRoot,
    OrbitOverflowLimit,
    SyntaxError,
    InvalidCoefficient,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::NotSeparable: return "NotSeparable";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SearchTooLarge: return "SearchTooLarge";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OrbitHitsRoot: return "OrbitHitsRoot";
    case ErrorCode::OrbitOverflowLimit: return "OrbitOverflowLimit";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidCoefficient: return "InvalidCoefficient";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with the 1-based column where it was detected.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t column, const std::string& what)
        : Error(ErrorCode::SyntaxError, "column " + std::to_string(column) + ": " + what),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// Orbit reached a zero of f; `step` is the index j with f(k_j) = 0.
class OrbitHitsRoot : public Error {
public:
    explicit OrbitHitsRoot(std::size_t step)
        : Error(ErrorCode::OrbitHitsRoot, "f(k_j) = 0 at step " + std::to_string(step)),
          step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace polycomp

#endif
