#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace nfsos {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
/// Inverse of a modulo prime m; a must be nonzero mod m.
u64 invmod(u64 a, u64 m);

/// Deterministic primality for 64-bit integers.
bool is_prime(u64 n);
/// Smallest prime strictly greater than n.
u64 next_prime(u64 n);
/// Legendre symbol (a | p) for odd prime p, as -1, 0 or 1.
int legendre(u64 a, u64 p);

/// p-adic valuation of a nonzero integer / rational.
int padic_valuation(const mpz_class& n, u64 p);
int padic_valuation(const mpq_class& q, u64 p);
/// n mod p for a rational whose denominator is prime to p.
u64 reduce_mod(const mpq_class& q, u64 p);
u64 reduce_mod(const mpz_class& n, u64 p);

/// Complete factorization of |n| (n ≠ 0): trial division, then Pollard–Brent.
std::map<mpz_class, int> factor_integer(const mpz_class& n);

/// Integer square root test: returns true and sets root when n is a perfect square.
bool perfect_square(const mpz_class& n, mpz_class& root);
bool perfect_square(const mpq_class& q, mpq_class& root);

/// Bit length of |n| (0 for n = 0).
std::size_t bit_length(const mpz_class& n);

}  // namespace nfsos
