#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace p1 {

enum class ErrorKind {
    FieldMismatch,
    DivisionByZero,
    DimensionMismatch,
    NotAUnit,
    NotABundle,
    UnsupportedGroup,
    InvalidArgument,
    ParseError,
    UnknownCommand,
    InternalSearchFailure,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception; `kind` selects the CLI exit-code class.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace p1
