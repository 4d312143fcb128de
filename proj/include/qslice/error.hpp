#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qslice {

enum class ErrorCode {
    ZeroDivision,
    VariableCountMismatch,
    NonCommutingPoint,
    NonConstantLeadingCoefficient,
    ZeroDivisor,
    InvalidFrame,
    PointOffSlice,
    InvalidConfig,
    ZeroPolynomial,
    IrrationalSphere,
    NotAZero,
    ConstantGenerator,
    WitnessMismatch,
    SyntaxError,
    VariableIndexTooLarge,
    ExponentOverflow,
    InternalError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorCode::NonCommutingPoint: return "NonCommutingPoint";
    case ErrorCode::NonConstantLeadingCoefficient: return "NonConstantLeadingCoefficient";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::PointOffSlice: return "PointOffSlice";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::IrrationalSphere: return "IrrationalSphere";
    case ErrorCode::NotAZero: return "NotAZero";
    case ErrorCode::ConstantGenerator: return "ConstantGenerator";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::VariableIndexTooLarge: return "VariableIndexTooLarge";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

/// Every failure raised by the library. `code()` distinguishes domain errors
/// (bad input, violated precondition) from `ErrorCode::InternalError`, which
/// only fires when an algebraic identity the code relies on does not hold.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    bool is_internal() const noexcept { return code_ == ErrorCode::InternalError; }

private:
    ErrorCode code_;
};

/// Parse failure; `offset()` is a 1-based character position into the input.
class ParseError : public Error {
public:
    ParseError(ErrorCode code, std::size_t offset, const std::string& what)
        : Error(code, "at offset " + std::to_string(offset) + ": " + what), offset_(offset), message_(what) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

}  // namespace qslice
