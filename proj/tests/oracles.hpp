#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// library's symbol or solver code.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nfsos/f2.hpp"
#include "nfsos/field.hpp"

namespace oracle {

inline nfsos::Field field(const std::string& f) { return nfsos::NumberField::create(f); }

inline nfsos::FieldElement el(const nfsos::Field& K, const std::string& s) { return nfsos::parse_element(K, s); }

/// Nonzero element with numerators in [-num, num] and denominators in [1, den].
inline nfsos::FieldElement random_element(const nfsos::Field& K, std::mt19937_64& rng, long num = 100,
                                          long den = 100) {
  std::uniform_int_distribution<long> N(-num, num), D(1, den);
  for (;;) {
    nfsos::QVec c(K->degree());
    for (auto& x : c) {
      x = mpq_class(N(rng), D(rng));
      x.canonicalize();
    }
    nfsos::FieldElement a(K, c);
    if (!a.is_zero()) return a;
  }
}

inline nfsos::FieldElement random_integral(const nfsos::Field& K, std::mt19937_64& rng, long bound) {
  return random_element(K, rng, bound, 1);
}

// ---- rational Hilbert symbols by the classical closed formulas ----

inline int legendre(const mpz_class& a, unsigned long p) {
  mpz_class pp = p;
  return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

// a = p^v · u with u coprime to p
inline int split(mpz_class& a, unsigned long p) {
  int v = 0;
  while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
    mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline mpz_class square_free_int(const mpq_class& q) { return q.get_num() * q.get_den(); }

/// (a, b)_p over Q; p = 0 means the real place.
inline int hilbert_q(const mpq_class& a, const mpq_class& b, unsigned long p) {
  mpz_class u = square_free_int(a), w = square_free_int(b);
  if (p == 0) return (u < 0 && w < 0) ? -1 : 1;
  int al = split(u, p), be = split(w, p);
  if (p != 2) {
    int s = ((al * be) % 2 && (p % 4 == 3)) ? -1 : 1;
    if (be % 2) s *= legendre(u, p);
    if (al % 2) s *= legendre(w, p);
    return s;
  }
  auto eps = [](const mpz_class& x) { return static_cast<int>(mpz_class(((x % 4) + 4) % 4).get_ui() == 3); };
  auto omega = [](const mpz_class& x) {
    unsigned long r = mpz_class(((x % 8) + 8) % 8).get_ui();
    return static_cast<int>(r == 3 || r == 5);
  };
  int e = eps(u) * eps(w) + (al % 2) * omega(w) + (be % 2) * omega(u);
  return e % 2 ? -1 : 1;
}

// ---- sums of squares over Z ----

inline bool is_square_int(long n) {
  if (n < 0) return false;
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

/// Classical length of a positive integer: square, two-squares theorem,
/// 4^k(8m+7), else 3.
inline int classical_length(long n) {
  if (is_square_int(n)) return 1;
  long m = n;
  bool two = true;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (p % 4 == 3 && e % 2) two = false;
  }
  if (m > 1 && m % 4 == 3) two = false;
  if (two) return 2;
  m = n;
  while (m % 4 == 0) m /= 4;
  return m % 8 == 7 ? 4 : 3;
}

// ---- brute force over F2 ----

inline std::optional<std::vector<int>> brute_force_f2(const std::vector<std::vector<int>>& rows,
                                                      const std::vector<int>& rhs, int k) {
  for (std::uint32_t x = 0; x < (1u << k); ++x) {
    bool ok = true;
    for (std::size_t i = 0; i < rows.size() && ok; ++i) {
      int s = 0;
      for (int j = 0; j < k; ++j) s ^= rows[i][j] & static_cast<int>((x >> j) & 1u);
      ok = s == rhs[i];
    }
    if (ok) {
      std::vector<int> out(k);
      for (int j = 0; j < k; ++j) out[j] = (x >> j) & 1u;
      return out;
    }
  }
  return std::nullopt;
}

/// Double-precision value of a at the real root inside [lo, hi] (Newton from the midpoint).
inline double real_value(const nfsos::FieldElement& a, const mpq_class& lo, const mpq_class& hi) {
  const auto& f = a.field()->polynomial();
  double x = (lo.get_d() + hi.get_d()) / 2;
  for (int it = 0; it < 100; ++it) {
    double v = 0, d = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
      d = d * x + v;
      v = v * x + f[i].get_d();
    }
    if (d == 0) break;
    x -= v / d;
  }
  double s = 0;
  const auto& c = a.coords();
  for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i].get_d();
  return s;
}

}  // namespace oracle
