#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seaorder {

enum class ErrorCode {
    InvalidArgument,
    AlphabetMismatch,
    NotOrdered,
    NotTailEquivalent,
    NoPeriodDetected,
    SelectorAmbiguous,
    NotInCylinderU,
    WindowTooSmall,
    InfiniteDifference,
    UnknownElement,
    ValidationFailed,
    Incompatible,
    CoarseSelector,
    AlreadyAssigned,
    InconsistentComparator,
    EmptyCut,
    ParseError,
};

std::string_view to_string(ErrorCode code);

// Domain failure raised by every module. The code is what callers branch on;
// the message is for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& reason)
        : Error(ErrorCode::ParseError, "at position " + std::to_string(position) + ": " + reason),
          position_(position), reason_(reason) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

}  // namespace seaorder
