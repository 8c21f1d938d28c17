#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lrq {

// Every domain failure raised by the library carries one of these kinds. The
// CLI maps each kind to exactly one stable name (see error_name).
enum class ErrorKind {
    NotDivisible,
    ConductorTooLarge,
    ArithmeticOverflow,
    DivisionByZero,
    DimensionMismatch,
    CapExceeded,
    NotInvertible,
    NotLinearlyReductive,
    NotAHomomorphism,
    ConnectedPartNotCyclic,
    NotVerySmall,
    NotImplementedForNonAbelian,
    BadInput,
    BadSequence,
    BadDimension,
    MissingIdentification,
    InvalidParameters,
    ParseError,
};

inline constexpr std::array<ErrorKind, 18> kAllErrorKinds = {
    ErrorKind::NotDivisible,          ErrorKind::ConductorTooLarge,
    ErrorKind::ArithmeticOverflow,    ErrorKind::DivisionByZero,
    ErrorKind::DimensionMismatch,     ErrorKind::CapExceeded,
    ErrorKind::NotInvertible,         ErrorKind::NotLinearlyReductive,
    ErrorKind::NotAHomomorphism,      ErrorKind::ConnectedPartNotCyclic,
    ErrorKind::NotVerySmall,          ErrorKind::NotImplementedForNonAbelian,
    ErrorKind::BadInput,              ErrorKind::BadSequence,
    ErrorKind::BadDimension,          ErrorKind::MissingIdentification,
    ErrorKind::InvalidParameters,     ErrorKind::ParseError,
};

constexpr std::string_view error_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::ConductorTooLarge: return "ConductorTooLarge";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotLinearlyReductive: return "NotLinearlyReductive";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::ConnectedPartNotCyclic: return "ConnectedPartNotCyclic";
    case ErrorKind::NotVerySmall: return "NotVerySmall";
    case ErrorKind::NotImplementedForNonAbelian: return "NotImplementedForNonAbelian";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::BadSequence: return "BadSequence";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::MissingIdentification: return "MissingIdentification";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
          kind_(kind), detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return error_name(kind_); }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& detail) {
    throw Error(kind, detail);
}

} // namespace lrq
