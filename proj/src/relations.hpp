#pragma once

// Shared smooth-element machinery for S-singular classes and norm equations.
// Square classes of factor-base-smooth elements are tracked by character
// vectors laid out as [real signs | auxiliary Legendre symbols | parities at
// factor-base primes]; the parity block grows as primes are added.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nfsos/f2.hpp"
#include "nfsos/field.hpp"
#include "nfsos/linalg.hpp"
#include "nfsos/places.hpp"

namespace nfsos::detail {

struct Relation {
  QVec coords;
  BitVec chars;
  std::size_t size = 0;  // total bit length, for picking small representatives
};

std::size_t element_size(const QVec& coords);

class RelationContext {
 public:
  explicit RelationContext(const Field& field);

  std::size_t width() const { return r1_ + aux_.size() + fb_.size(); }
  std::size_t parity_offset() const { return r1_ + aux_.size(); }
  const std::vector<Place>& factor_base() const { return fb_; }
  int fb_index(const Place& place) const;
  /// Sing{FB} has dimension r1 + r2 + |FB| once the factor base carries the class group.
  std::size_t target_rank() const { return r1_ + r2_ + fb_.size(); }
  std::size_t rank() const { return ech_.rank(); }

  /// Adds every prime above p to the factor base.
  void include_prime(const Field& field, u64 p);
  bool covers(u64 p) const { return fb_rational_.count(p) > 0; }

  /// Character vector of a nonzero element whose norm and denominators only
  /// involve factor-base primes; empty otherwise.
  std::optional<BitVec> vector_of(const Field& field, const FieldElement& a) const;
  /// Like vector_of, but first enlarges the factor base so that a is smooth.
  BitVec vector_of_enlarging(const Field& field, const FieldElement& a);

  /// Offers a smooth candidate; returns true if it raised the rank.
  bool offer(const Field& field, const FieldElement& a);
  /// Searches until the relations span Sing{FB}. Throws SearchBoundExceeded.
  void complete(const Field& field);

  const std::vector<Relation>& independent() const { return independent_; }
  const std::vector<Relation>& pool() const { return pool_; }

 private:
  void widen_all();
  void box_shell(const Field& field, int radius);
  void special_q_shell(const Field& field, const Place& place, int radius);

  std::size_t r1_, r2_;
  std::vector<std::pair<u64, u64>> aux_;
  std::vector<Place> fb_;
  std::map<std::string, int> fb_pos_;
  std::set<u64> fb_rational_;
  F2Echelon ech_{0};
  std::vector<Relation> independent_;
  std::vector<Relation> pool_;
  int box_done_ = 0;
  std::map<std::string, int> special_done_;
};

/// Cached per field; callers must hold field->cache().lock().
RelationContext& relation_context(const Field& field);

/// Minkowski bound of K (requires a complete index certificate).
double minkowski_bound(const Field& field);

/// Z-basis (rows, power-basis coordinates) of the prime ideal P = (p, g(θ)).
ZMatrix ideal_basis(const Field& field, const Place& place);

/// Positive definite integer Gram matrix approximating the T2 form, scaled.
const ZMatrix& t2_gram(const Field& field);

/// Aux degree-one primes (p, root) with p far above any factor-base prime.
std::vector<std::pair<u64, u64>> auxiliary_primes(const Field& field, std::size_t count);

/// Legendre symbol of a at the degree-one prime (p, r); 0 if a is not a unit there.
int aux_character(const FieldElement& a, u64 p, u64 r);

/// Enumerates integer vectors with max-norm exactly `radius` (radius 0: zero vector),
/// first nonzero entry positive.
void for_each_shell_vector(int dim, int radius, const std::function<void(const std::vector<long>&)>& fn);

}  // namespace nfsos::detail
