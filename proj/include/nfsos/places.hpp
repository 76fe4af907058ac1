#pragma once

#include <vector>

#include "nfsos/field.hpp"
#include "nfsos/modp.hpp"

namespace nfsos {

/// Finite places in insertion order, without duplicates.
class PlaceSet {
 public:
  PlaceSet() = default;
  explicit PlaceSet(const std::vector<Place>& places);

  /// Appends unless already present; returns whether it was added.
  bool add(const Place& place);
  bool contains(const Place& place) const { return index_of(place) >= 0; }
  int index_of(const Place& place) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Place& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Place>& items() const { return items_; }

 private:
  std::vector<Place> items_;
};

/// Real embeddings in ascending order of the corresponding root.
std::vector<Place> real_places(const Field& field);

/// Primes above p via Kummer–Dedekind. Throws NonMaximalOrderAtP when
/// Dedekind's criterion fails at p.
std::vector<Place> decompose_prime(const Field& field, u64 p);

/// ord_P(a). Throws ZeroInput.
int valuation(const FieldElement& a, const Place& place);

/// Primes where a has odd valuation, ordered by residue characteristic.
PlaceSet odd_support(const FieldElement& a);

/// decompose_prime(field, 2).
PlaceSet dyadic_places(const Field& field);

/// Rational primes dividing the numerator or denominator of N(a).
std::vector<u64> norm_primes(const FieldElement& a);

/// Uniformizer π of the prime (stored on the place).
FieldElement uniformizer(const Field& field, const Place& place);

/// Residue class of a in O/P = F_p[z]/(ḡ); requires ord_P(a) >= 0.
FpPoly residue(const FieldElement& a, const Place& place);
/// Element of Z[θ] lifting a residue class.
FieldElement lift_residue(const Field& field, const FpPoly& r);
Fq residue_field(const Place& place);
/// N(P) = p^f.
mpz_class absolute_norm(const Place& place);

}  // namespace nfsos
