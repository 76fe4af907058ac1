#pragma once

#include <string>
#include <vector>

#include "nfsos/field.hpp"
#include "nfsos/places.hpp"

namespace nfsos {

struct ClassGroup {
  mpz_class order;
  /// Cyclic factors > 1, each dividing the next.
  std::vector<mpz_class> invariants;
  /// Prime ideals of norm at most the Minkowski bound; their classes generate.
  std::vector<Place> generators;
  double minkowski_bound = 0;
};

/// Exact relations among prime ideals below the Minkowski bound.
/// Throws DiscriminantTooLarge, NonMaximalOrderAtP.
ClassGroup class_group_small(const Field& field);

/// F2-basis of the S-singular square classes.
struct SingularBasis {
  Field field;
  PlaceSet S;
  std::vector<FieldElement> basis;
  /// One note per basis element: "unit" or the places of S where it has odd valuation.
  std::vector<std::string> provenance;

  std::size_t dimension() const { return basis.size(); }
};

/// Throws DiscriminantTooLarge, NonMaximalOrderAtP, SearchBoundExceeded.
SingularBasis singular_basis(const Field& field, const PlaceSet& S);

/// Basis of Sing{S ∪ {q}} with B.basis as a prefix.
SingularBasis extend_basis(const SingularBasis& B, const Place& q);

}  // namespace nfsos
