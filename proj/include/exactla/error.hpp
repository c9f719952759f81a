#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace exactla {

enum class ErrorCode {
    MalformedScalar,
    ZeroDenominator,
    DivisionByZero,
    DimensionMismatch,
    NotSquare,
    WrongSize,
    IndexOutOfRange,
    ZeroScale,
    InvalidRowOp,
    NotInvertible,
    SingularCoefficient,
    EmptyInput,
    MixedDimensions,
    RaggedRows,
    InputDependent,
    MalformedForm,
    NonLinearCoordinate,
    DependentPoints,
    NotSpanning,
    DegreeTooHigh,
    NegativePowerOfSingular,
    ZeroVectorPresent,
    AllZeroInput,
    UsageError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by malformed text or a bad invocation rather than
/// by the mathematics of well-formed input.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace exactla
