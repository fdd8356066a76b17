#pragma once
#include <stdexcept>
#include <string>

namespace orecode {

enum class ErrorKind {
    InvalidModulus,
    InvalidCharacteristic,
    CapExceeded,
    FieldMismatch,
    DivisionByZero,
    ContextMismatch,
    Undefined,
    InvalidScale,
    InvalidArgument,
    NotClosed,
    NotRightDivisor,
    EmptyCode,
    DegreeTooLarge,
    LengthMismatch,
    ShapeMismatch,
    ParseError,
    InternalError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace orecode
