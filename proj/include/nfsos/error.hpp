#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nfsos/place.hpp"

namespace nfsos {

enum class ErrorKind {
  ParseError,
  ReduciblePolynomial,
  NonMonic,
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  NonMaximalOrderAtP,
  DiscriminantTooLarge,
  NotANorm,
  SearchBoundExceeded,
  DimensionMismatch,
  DimensionTooSmall,
  NotASumOfSquares,
  LengthMismatch,
  LevelMismatch,
  PrimeSearchExhausted,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `witness` carries the place that
/// certifies a local obstruction (NotANorm, NotASumOfSquares).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<Place> witness = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<Place>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<Place> witness_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message,
                               std::optional<Place> witness = std::nullopt) {
  throw Error(kind, message, std::move(witness));
}

}  // namespace nfsos
