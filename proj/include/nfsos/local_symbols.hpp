#pragma once

#include <vector>

#include "nfsos/f2.hpp"
#include "nfsos/field.hpp"
#include "nfsos/places.hpp"

namespace nfsos {

/// ⟨a₁, …, a_n⟩ with nonzero entries.
struct DiagonalForm {
  std::vector<FieldElement> coefficients;

  DiagonalForm() = default;
  DiagonalForm(std::initializer_list<FieldElement> c) : coefficients(c) {}
  explicit DiagonalForm(std::vector<FieldElement> c) : coefficients(std::move(c)) {}

  std::size_t dimension() const { return coefficients.size(); }
  FieldElement determinant() const;
};

/// Sign of a under a real embedding. Throws ZeroInput.
int sign_at(const FieldElement& a, const Place& real_place);

/// a ∈ (K_P*)². Throws ZeroInput.
bool local_square(const FieldElement& a, const Place& place);

/// (a, b)_P for a finite or real place. Throws ZeroInput.
int hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& place);

/// ∏_{i<j} (a_i, a_j)_P.
int hasse_invariant(const DiagonalForm& q, const Place& place);

/// Throws DimensionTooSmall for dim < 2.
bool local_isotropic(const DiagonalForm& q, const Place& place);

/// Coordinates of the class of a in K_P*/K_P*² (length d+2 for dyadic P with
/// local degree d, length 2 otherwise), in a fixed basis chosen per place.
BitVec square_class_coordinates(const FieldElement& a, const Place& place);

}  // namespace nfsos
