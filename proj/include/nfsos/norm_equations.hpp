#pragma once

#include <optional>

#include "nfsos/field.hpp"
#include "nfsos/places.hpp"

namespace nfsos {

/// L = K(√δ).
struct QuadraticExtension {
  Field base;
  FieldElement delta;

  QuadraticExtension(Field k, FieldElement d) : base(std::move(k)), delta(std::move(d)) {}
};

/// d_first + d_second·√δ with d_first² − δ·d_second² = b.
struct NormSolution {
  FieldElement d_first;
  FieldElement d_second;
  FieldElement b;
};

struct NormOptions {
  /// Largest coordinate radius for the enumeration stages (0 picks a default
  /// depending on the degree).
  long height_ceiling = 0;
};

/// A place where (δ, b) = −1, if any (finite places ordered as in the support
/// computation, then real places).
std::optional<Place> norm_obstruction(const QuadraticExtension& E, const FieldElement& b);

/// Throws ZeroInput.
bool norm_locally_solvable(const QuadraticExtension& E, const FieldElement& b);

/// Throws NotANorm (with witness), SearchBoundExceeded, ZeroInput.
NormSolution solve_norm(const QuadraticExtension& E, const FieldElement& b, const NormOptions& options = {});

/// As solve_norm, but both coordinates are nonzero (δ must be a non-square).
NormSolution solve_norm_nonzero(const QuadraticExtension& E, const FieldElement& b, const NormOptions& options = {});

}  // namespace nfsos
