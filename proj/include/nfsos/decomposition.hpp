#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nfsos/field.hpp"
#include "nfsos/places.hpp"
#include "nfsos/singular_classes.hpp"

namespace nfsos {

/// Length / level value standing for infinity.
inline constexpr int kInfinity = -1;

struct LengthReport {
  int length = 0;  // 1..4 or kInfinity
  int level = 0;   // 1, 2, 4 or kInfinity
  /// Places of D where −a is a local square (nonempty exactly when length is 4).
  std::vector<Place> obstruction_places;
  bool totally_positive = true;
  /// A real place where the element is negative, when length is infinite.
  std::optional<Place> negative_place;
};

struct PrimeSearchStrategy {
  enum class Mode { deterministic, random };
  Mode mode = Mode::deterministic;
  std::optional<std::uint64_t> seed;
  /// Largest rational prime that may be tried.
  std::uint64_t ceiling = 10000;
  /// Passed to the norm solver (0 keeps its default).
  long height_ceiling = 0;
};

/// Enumerates candidate primes q ∉ S for the length-3 and length-4 search loops.
class PrimeSearch {
 public:
  PrimeSearch(Field field, PrimeSearchStrategy strategy);
  /// Throws PrimeSearchExhausted.
  Place next(const PlaceSet& S);
  int tried() const { return tried_; }

 private:
  Field field_;
  PrimeSearchStrategy strategy_;
  std::uint64_t p_ = 2;
  std::vector<Place> pending_;
  std::mt19937_64 rng_;
  int tried_ = 0;
};

/// Convenience wrapper matching the per-call interface.
Place next_candidate_prime(PrimeSearch& state, const PlaceSet& S);

struct IsotropyCheck {
  std::string form;
  std::string place;
  bool isotropic = false;
};

/// What happened inside one run of a search loop.
struct LoopTrace {
  std::string algorithm;
  std::vector<std::string> candidates;  // labels of the primes q adjoined, in order
  std::vector<IsotropyCheck> checks;
  std::size_t basis_dimension = 0;
};

struct Decomposition {
  FieldElement element;
  std::vector<FieldElement> summands;
  bool verified = false;
  std::vector<LoopTrace> traces;
};

struct DyadicObstructionData {
  Place place;
  FieldElement g;
  FieldElement h;
};

/// s(K). Cached.
int level(const Field& field);
/// Dyadic primes with e and f both odd.
std::vector<Place> odd_dyadic_places(const Field& field);
/// Pythagoras number implied by the level (and D when K is formally real).
int pythagoras_number(const Field& field);

/// Throws ZeroInput.
LengthReport compute_length(const FieldElement& a);

/// Throws NotASumOfSquares (with a real witness), ZeroInput, and whatever the
/// selected algorithm raises. The result is always verified.
Decomposition decompose(const FieldElement& a, const PrimeSearchStrategy& strategy = {});

Decomposition decompose_len2(const FieldElement& a, const PrimeSearchStrategy& strategy = {});
Decomposition decompose_len3_level2(const FieldElement& a, const PrimeSearchStrategy& strategy = {});
Decomposition decompose_len3_general(const FieldElement& a, const PrimeSearchStrategy& strategy = {});
Decomposition decompose_len4(const FieldElement& a, const PrimeSearchStrategy& strategy = {});

/// Seeded search for (g, h) with (a, g)_d = 1 and (g, h)_d = −1.
DyadicObstructionData find_dyadic_pair(const FieldElement& a, const Place& d, std::uint64_t seed = 0);

/// Σ c_i² == a exactly.
bool verify_sum(const FieldElement& a, const std::vector<FieldElement>& summands);

}  // namespace nfsos
