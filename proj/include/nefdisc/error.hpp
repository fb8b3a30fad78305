#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nefdisc {

enum class ErrorCode {
    EmptyInput,
    DimensionMismatch,
    OriginNotInterior,
    Unbounded,
    Empty,
    NotReflexive,
    NotNef,
    InvalidPartition,
    InvalidSubdivision,
    InconsistentDuality,
    NotAComplex,
    UnsupportedDimension,
    UnclassifiableCell,
    WrongDimension,
    NotUnipotent,
    ProductNotIdentity,
    MalformedInput,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotNef: return "NotNef";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidSubdivision: return "InvalidSubdivision";
    case ErrorCode::InconsistentDuality: return "InconsistentDuality";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::UnclassifiableCell: return "UnclassifiableCell";
    case ErrorCode::WrongDimension: return "WrongDimension";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::ProductNotIdentity: return "ProductNotIdentity";
    case ErrorCode::MalformedInput: return "MalformedInput";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message holds the human-readable certificate (which identity failed, which
/// face, ...).
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string &message) {
    throw Error(code, std::string(to_string(code)) + ": " + message);
}

} // namespace nefdisc
