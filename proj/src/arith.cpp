#include "nfsos/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace nfsos {

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  if (n < 2) return 2;
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int padic_valuation(const mpz_class& n, u64 p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_class t = n;
  int v = 0;
  while (mpz_divisible_p(t.get_mpz_t(), pz.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
    ++v;
  }
  return v;
}

int padic_valuation(const mpq_class& q, u64 p) {
  return padic_valuation(mpz_class(q.get_num()), p) - padic_valuation(mpz_class(q.get_den()), p);
}

u64 reduce_mod(const mpz_class& n, u64 p) {
  mpz_class r;
  mpz_class pz(static_cast<unsigned long>(p));
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
  return r.get_ui();
}

u64 reduce_mod(const mpq_class& q, u64 p) {
  u64 num = reduce_mod(mpz_class(q.get_num()), p);
  u64 den = reduce_mod(mpz_class(q.get_den()), p);
  return mulmod(num, invmod(den, p), p);
}

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, q = 1, g = 1, ys;
    auto step = [&](const mpz_class& v) {
      mpz_class r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    unsigned long r = 1;
    const unsigned long m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          mpz_class diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        mpz_class diff = abs(mpz_class(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, int>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    out[n] += 1;
    return;
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<mpz_class, int> factor_integer(const mpz_class& n) {
  if (n == 0) throw std::domain_error("factor_integer: zero");
  std::map<mpz_class, int> out;
  mpz_class m = abs(n);
  for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
    int v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++v;
    }
    if (v) out[mpz_class(p)] += v;
  }
  factor_into(m, out);
  return out;
}

bool perfect_square(const mpz_class& n, mpz_class& root) {
  if (n < 0) return false;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

bool perfect_square(const mpq_class& q, mpq_class& root) {
  mpz_class a, b;
  if (!perfect_square(mpz_class(q.get_num()), a)) return false;
  if (!perfect_square(mpz_class(q.get_den()), b)) return false;
  root = mpq_class(a, b);
  root.canonicalize();
  return true;
}

std::size_t bit_length(const mpz_class& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace nfsos
