#pragma once

#include <stdexcept>
#include <string>

namespace symband {

/// Every failure raised by the library carries one of these kinds.
enum class ErrorKind {
    DivisionByZero,
    ZeroDenominator,
    LimitUndefined,
    ShapeError,
    ParseError,
    SizeError,
    IndexOutOfRange,
    FloatZeroPivot,
    SingularMatrix,
    ReductionPivotZero,
    GenerationFailed,
    DomainError,
    MissingSeries,
    InsufficientData,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace symband
