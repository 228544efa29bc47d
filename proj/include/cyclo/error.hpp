#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclo {

enum class ErrorCode {
    CompositeP,
    EvenP,
    ReducibleModulus,
    NoModulusAvailable,
    BadModulus,
    FieldTooLarge,
    NotAGenerator,
    ZeroElement,
    DimensionMismatch,
    InvalidEll,
    EllTooSmall,
    EllOne,
    ContextTooLarge,
    KEven,
    NotADifferenceSet,
    RangeTooLarge,
    InvariantViolation,
    ParseError,
    IoFailure,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CompositeP: return "CompositeP";
        case ErrorCode::EvenP: return "EvenP";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::NoModulusAvailable: return "NoModulusAvailable";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::NotAGenerator: return "NotAGenerator";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::InvalidEll: return "InvalidEll";
        case ErrorCode::EllTooSmall: return "EllTooSmall";
        case ErrorCode::EllOne: return "EllOne";
        case ErrorCode::ContextTooLarge: return "ContextTooLarge";
        case ErrorCode::KEven: return "KEven";
        case ErrorCode::NotADifferenceSet: return "NotADifferenceSet";
        case ErrorCode::RangeTooLarge: return "RangeTooLarge";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoFailure: return "IoFailure";
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

}  // namespace cyclo
