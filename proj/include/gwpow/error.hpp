#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwpow {

enum class ErrorKind {
    ZeroInput,
    CharTwo,
    BadPrime,
    FactorizationLimit,
    FieldMismatch,
    NoRealPlace,
    TruncationExceeded,
    TrivialClass,
    NotIndependent,
    BadCodim,
    SizeLimit,
    NotAUnit,
    OutOfRange,
    Overflow,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::CharTwo: return "CharTwo";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::FactorizationLimit: return "FactorizationLimit";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NoRealPlace: return "NoRealPlace";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::TrivialClass: return "TrivialClass";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::BadCodim: return "BadCodim";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported as an Error carrying its kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what)
{
    throw Error(kind, what);
}

} // namespace gwpow
