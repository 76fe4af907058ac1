#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace nfsos {

/// Rational coordinates in the power basis 1, θ, …, θ^{n-1}; also used for
/// rational polynomials (index = degree).
using QVec = std::vector<mpq_class>;
/// Integer polynomial, lowest degree first.
using ZPoly = std::vector<mpz_class>;

enum class PlaceKind { real, finite };

/// A place of a number field K = Q[x]/(f).
///
/// Real places carry an isolating interval [lo, hi] with rational endpoints
/// for the corresponding real root of f. Finite places are primes P above a
/// rational prime p not dividing the index [O_K : Z[θ]]; they are stored by
/// the Kummer–Dedekind data (p, ḡ) with P = (p, g(θ)), plus two auxiliary
/// integral elements used for valuations and residue maps:
///
///  - anti_uniformizer β: v_P(β/p) = -1 and β/p is integral at every other
///    prime above p;
///  - cofactor γ: a P-unit lying in every other prime above p.
struct Place {
  PlaceKind kind = PlaceKind::finite;

  // real
  int index = -1;
  mpq_class lo;
  mpq_class hi;

  // finite
  std::uint64_t p = 0;
  int e = 0;
  int f = 0;
  QVec pi;
  std::vector<std::uint64_t> residue_modulus;
  ZPoly anti_uniformizer;
  ZPoly cofactor;

  bool is_real() const { return kind == PlaceKind::real; }
  bool is_finite() const { return kind == PlaceKind::finite; }
  bool dyadic() const { return is_finite() && p == 2; }
  /// Local degree [K_P : Q_p].
  int local_degree() const { return e * f; }
};

bool operator==(const Place& a, const Place& b);
inline bool operator!=(const Place& a, const Place& b) { return !(a == b); }

/// Short human-readable label, e.g. "P(5; x+2)" or "real#1".
std::string label(const Place& place);

/// Stable key usable in maps and caches.
std::string place_key(const Place& place);

}  // namespace nfsos
