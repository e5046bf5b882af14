#include "supercong/error.hpp"

namespace supercong {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ExponentZero: return "ExponentZero";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonInvertibleDenominator: return "NonInvertibleDenominator";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::KmaxTooLarge: return "KmaxTooLarge";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
  }
  return "Unknown";
}

}  // namespace supercong
