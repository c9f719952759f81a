#include "exactla/error.hpp"

namespace exactla {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedScalar: return "MalformedScalar";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::WrongSize: return "WrongSize";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroScale: return "ZeroScale";
        case ErrorCode::InvalidRowOp: return "InvalidRowOp";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::SingularCoefficient: return "SingularCoefficient";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::MixedDimensions: return "MixedDimensions";
        case ErrorCode::RaggedRows: return "RaggedRows";
        case ErrorCode::InputDependent: return "InputDependent";
        case ErrorCode::MalformedForm: return "MalformedForm";
        case ErrorCode::NonLinearCoordinate: return "NonLinearCoordinate";
        case ErrorCode::DependentPoints: return "DependentPoints";
        case ErrorCode::NotSpanning: return "NotSpanning";
        case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
        case ErrorCode::NegativePowerOfSingular: return "NegativePowerOfSingular";
        case ErrorCode::ZeroVectorPresent: return "ZeroVectorPresent";
        case ErrorCode::AllZeroInput: return "AllZeroInput";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MalformedScalar:
        case ErrorCode::ZeroDenominator:
        case ErrorCode::EmptyInput:
        case ErrorCode::RaggedRows:
        case ErrorCode::MalformedForm:
        case ErrorCode::UsageError:
            return true;
        default:
            return false;
    }
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace exactla
