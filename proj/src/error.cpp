#include "nfsos/error.hpp"

namespace nfsos {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::NonMonic: return "NonMonic";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NonMaximalOrderAtP: return "NonMaximalOrderAtP";
    case ErrorKind::DiscriminantTooLarge: return "DiscriminantTooLarge";
    case ErrorKind::NotANorm: return "NotANorm";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::NotASumOfSquares: return "NotASumOfSquares";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::LevelMismatch: return "LevelMismatch";
    case ErrorKind::PrimeSearchExhausted: return "PrimeSearchExhausted";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace nfsos
