#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nfsos/arith.hpp"
#include "nfsos/place.hpp"

namespace nfsos {

/// Polynomial over F_p, lowest degree first, trimmed (zero = empty).
using FpPoly = std::vector<u64>;

void fp_trim(FpPoly& a);
int fp_degree(const FpPoly& a);
FpPoly fp_from(const ZPoly& a, u64 p);
/// Coefficient-wise reduction; denominators must be prime to p.
FpPoly fp_from(const QVec& a, u64 p);
/// Lift with coefficients in [0, p).
ZPoly fp_lift(const FpPoly& a);

FpPoly fp_add(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_scale(const FpPoly& a, u64 c, u64 p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_monic(const FpPoly& a, u64 p);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b, u64 p);
/// Returns (g, s) with g = gcd(a, m) monic and s·a ≡ g (mod m).
std::pair<FpPoly, FpPoly> fp_gcdext(const FpPoly& a, const FpPoly& m, u64 p);
FpPoly fp_derivative(const FpPoly& a, u64 p);
FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod, u64 p);
u64 fp_eval(const FpPoly& a, u64 x, u64 p);
/// Res(a, b) over F_p.
u64 fp_resultant(const FpPoly& a, const FpPoly& b, u64 p);

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, u64 p);
/// Distinct roots in [0, p), ascending.
std::vector<u64> fp_roots(const FpPoly& f, u64 p);

/// The finite field F_p[z]/(g) for monic irreducible g.
class Fq {
 public:
  Fq(u64 p, FpPoly modulus);

  u64 p() const { return p_; }
  int degree() const { return fp_degree(g_); }
  const FpPoly& modulus() const { return g_; }

  FpPoly reduce(const FpPoly& a) const { return fp_rem(a, g_, p_); }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return reduce(fp_mul(a, b, p_)); }
  FpPoly add(const FpPoly& a, const FpPoly& b) const { return fp_add(a, b, p_); }
  FpPoly sub(const FpPoly& a, const FpPoly& b) const { return fp_sub(a, b, p_); }
  FpPoly pow(const FpPoly& a, const mpz_class& e) const { return fp_powmod(a, e, g_, p_); }
  FpPoly inv(const FpPoly& a) const;
  /// Norm down to F_p.
  u64 norm(const FpPoly& a) const;
  /// Trace down to F_p.
  u64 trace(const FpPoly& a) const;
  /// Quadratic character (+1/-1; p odd, a nonzero).
  int chi(const FpPoly& a) const;
  /// Some square root, if a is a square.
  std::optional<FpPoly> sqrt(const FpPoly& a) const;
  /// Field order p^f.
  mpz_class order() const;

 private:
  u64 p_;
  FpPoly g_;
};

}  // namespace nfsos
