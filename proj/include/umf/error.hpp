#pragma once

#include <stdexcept>
#include <string>

namespace umf {

enum class ErrorCode {
    FieldMismatch,
    DivisionByZero,
    RingMismatch,
    Parse,
    DimensionMismatch,
    Pole,
    NotClosed,
    BudgetExceeded,
    WindowOverflow,
    CriticalDirection,
    Overflow,
    InvalidArgument,
    Invariant,
    Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source location.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(ErrorCode::Parse, "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + message),
          detail_(message), line_(line), column_(column) {}

    const std::string& detail() const noexcept { return detail_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    std::string detail_;
    int line_;
    int column_;
};

}  // namespace umf
