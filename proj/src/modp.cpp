#include "nfsos/modp.hpp"

#include <algorithm>
#include <map>

#include "nfsos/error.hpp"

namespace nfsos {

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int fp_degree(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_from(const ZPoly& a, u64 p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce_mod(a[i], p);
  fp_trim(r);
  return r;
}

FpPoly fp_from(const QVec& a, u64 p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = reduce_mod(a[i], p);
  fp_trim(r);
  return r;
}

ZPoly fp_lift(const FpPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    u64 s = r[i] + b[i];
    r[i] = (s >= p || s < b[i]) ? s - p : s;
  }
  fp_trim(r);
  return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] >= b[i] ? r[i] - b[i] : r[i] + (p - b[i]);
  fp_trim(r);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  fp_trim(r);
  return r;
}

FpPoly fp_scale(const FpPoly& a, u64 c, u64 p) {
  FpPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
  fp_trim(r);
  return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, u64 p) {
  if (b.empty()) raise(ErrorKind::DivisionByZero, "polynomial division by zero mod p");
  FpPoly r = a;
  fp_trim(r);
  if (r.size() < b.size()) return {{}, r};
  FpPoly q(r.size() - b.size() + 1, 0);
  u64 inv = invmod(b.back(), p);
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    u64 c = mulmod(r.back(), inv, p);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      u64 t = mulmod(c, b[j], p);
      r[shift + j] = r[shift + j] >= t ? r[shift + j] - t : r[shift + j] + (p - t);
    }
    r.pop_back();
    fp_trim(r);
  }
  fp_trim(q);
  return {q, r};
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.size() < b.size()) {
    FpPoly r = a;
    fp_trim(r);
    return r;
  }
  return fp_divmod(a, b, p).second;
}

FpPoly fp_monic(const FpPoly& a, u64 p) {
  if (a.empty()) return a;
  return fp_scale(a, invmod(a.back(), p), p);
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b, u64 p) {
  FpPoly x = a, y = b;
  fp_trim(x);
  fp_trim(y);
  while (!y.empty()) {
    FpPoly r = fp_rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return fp_monic(x, p);
}

std::pair<FpPoly, FpPoly> fp_gcdext(const FpPoly& a, const FpPoly& m, u64 p) {
  FpPoly r0 = m, r1 = fp_rem(a, m, p);
  FpPoly s0, s1{1};
  fp_trim(r0);
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    FpPoly s = fp_sub(s0, fp_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.empty()) return {{}, {}};
  u64 inv = invmod(r0.back(), p);
  return {fp_scale(r0, inv, p), fp_rem(fp_scale(s0, inv, p), m, p)};
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  fp_trim(r);
  return r;
}

FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod, u64 p) {
  FpPoly result = fp_rem(FpPoly{1}, mod, p);
  FpPoly b = fp_rem(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(fp_mul(result, b, p), mod, p);
  }
  return result;
}

u64 fp_eval(const FpPoly& a, u64 x, u64 p) {
  u64 r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = (mulmod(r, x, p) + *it) % p;
  return r;
}

u64 fp_resultant(const FpPoly& a0, const FpPoly& b0, u64 p) {
  FpPoly a = a0, b = b0;
  fp_trim(a);
  fp_trim(b);
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  for (;;) {
    int m = fp_degree(a), n = fp_degree(b);
    if (n == 0) return mulmod(res, powmod(b[0], static_cast<u64>(m), p), p);
    FpPoly r = fp_rem(a, b, p);
    if (r.empty()) return 0;
    int k = fp_degree(r);
    if ((static_cast<long>(m) * n) % 2 == 1) res = (p - res) % p;
    res = mulmod(res, powmod(b.back(), static_cast<u64>(m - k), p), p);
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

std::mt19937_64& factor_rng() {
  thread_local std::mt19937_64 rng(0x5eed5eedULL);
  return rng;
}

FpPoly random_poly(int deg_below, u64 p) {
  std::uniform_int_distribution<u64> dist(0, p - 1);
  FpPoly r(deg_below);
  for (auto& c : r) c = dist(factor_rng());
  fp_trim(r);
  return r;
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void equal_degree(const FpPoly& g, int d, u64 p, std::vector<FpPoly>& out) {
  int n = fp_degree(g);
  if (n == d) {
    out.push_back(g);
    return;
  }
  for (;;) {
    FpPoly a = random_poly(n, p);
    if (fp_degree(a) < 1) continue;
    FpPoly b;
    if (p == 2) {
      FpPoly t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = fp_rem(fp_mul(t, t, p), g, p);
        b = fp_add(b, t, p);
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, d);
      e = (e - 1) / 2;
      b = fp_sub(fp_powmod(a, e, g, p), FpPoly{1}, p);
    }
    FpPoly c = fp_gcd(b, g, p);
    int k = fp_degree(c);
    if (k > 0 && k < n) {
      equal_degree(c, d, p, out);
      equal_degree(fp_divmod(g, c, p).first, d, p, out);
      return;
    }
  }
}

std::vector<FpPoly> squarefree_split(FpPoly w, u64 p) {
  std::vector<FpPoly> out;
  FpPoly x{0, 1};
  FpPoly h = fp_rem(x, w, p);
  for (int d = 1; 2 * d <= fp_degree(w); ++d) {
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), w, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), w, p);
    if (fp_degree(g) > 0) {
      equal_degree(g, d, p, out);
      w = fp_divmod(w, g, p).first;
      h = fp_rem(h, w, p);
    }
  }
  if (fp_degree(w) > 0) out.push_back(fp_monic(w, p));
  return out;
}

void factor_rec(const FpPoly& f, int mult, u64 p, std::map<std::pair<int, FpPoly>, int>& out) {
  if (fp_degree(f) <= 0) return;
  FpPoly d = fp_derivative(f, p);
  if (d.empty()) {
    FpPoly root;
    for (std::size_t i = 0; i < f.size(); i += p) root.push_back(f[i]);
    factor_rec(root, mult * static_cast<int>(p), p, out);
    return;
  }
  FpPoly g = fp_gcd(f, d, p);
  FpPoly w = fp_divmod(f, g, p).first;
  FpPoly rest = f;
  for (auto& q : squarefree_split(fp_monic(w, p), p)) {
    int k = 0;
    for (;;) {
      auto [quo, rem] = fp_divmod(rest, q, p);
      if (!rem.empty()) break;
      rest = std::move(quo);
      ++k;
    }
    out[{fp_degree(q), q}] += k * mult;
  }
  factor_rec(fp_monic(rest, p), mult, p, out);
}

}  // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, u64 p) {
  std::map<std::pair<int, FpPoly>, int> acc;
  FpPoly g = f;
  fp_trim(g);
  if (g.empty()) raise(ErrorKind::Internal, "factoring the zero polynomial");
  factor_rec(fp_monic(g, p), 1, p, acc);
  std::vector<std::pair<FpPoly, int>> out;
  for (auto& [key, m] : acc) out.emplace_back(key.second, m);
  return out;
}

std::vector<u64> fp_roots(const FpPoly& f0, u64 p) {
  FpPoly f = fp_monic(f0, p);
  std::vector<u64> roots;
  if (fp_degree(f) <= 0) return roots;
  if (p < 64) {
    for (u64 x = 0; x < p; ++x)
      if (fp_eval(f, x, p) == 0) roots.push_back(x);
    return roots;
  }
  FpPoly x{0, 1};
  FpPoly h = fp_powmod(x, mpz_class(static_cast<unsigned long>(p)), f, p);
  FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
  if (fp_degree(g) <= 0) return roots;
  std::vector<FpPoly> lin;
  equal_degree(g, 1, p, lin);
  for (auto& l : lin) roots.push_back((p - l[0]) % p);
  std::sort(roots.begin(), roots.end());
  return roots;
}

Fq::Fq(u64 p, FpPoly modulus) : p_(p), g_(fp_monic(modulus, p)) {}

FpPoly Fq::inv(const FpPoly& a) const {
  auto [g, s] = fp_gcdext(a, g_, p_);
  if (fp_degree(g) != 0) raise(ErrorKind::DivisionByZero, "inverse of zero in residue field");
  return s;
}

u64 Fq::norm(const FpPoly& a) const { return fp_resultant(g_, reduce(a), p_); }

u64 Fq::trace(const FpPoly& a) const {
  FpPoly t = reduce(a), acc = t;
  for (int i = 1; i < degree(); ++i) {
    t = pow(t, mpz_class(static_cast<unsigned long>(p_)));
    acc = add(acc, t);
  }
  return acc.empty() ? 0 : acc[0];
}

int Fq::chi(const FpPoly& a) const {
  u64 n = norm(a);
  if (n == 0) raise(ErrorKind::Internal, "quadratic character of zero");
  return legendre(n, p_);
}

mpz_class Fq::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, degree());
  return q;
}

std::optional<FpPoly> Fq::sqrt(const FpPoly& a0) const {
  FpPoly a = reduce(a0);
  if (a.empty()) return FpPoly{};
  if (p_ == 2) {
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), 2, degree() - 1);
    return pow(a, e);
  }
  if (chi(a) != 1) return std::nullopt;
  mpz_class q1 = order() - 1;
  int s = 0;
  mpz_class t = q1;
  while (mpz_even_p(t.get_mpz_t())) {
    t /= 2;
    ++s;
  }
  // deterministic non-residue: first polynomial (in enumeration order) with chi = -1
  FpPoly z;
  for (u64 idx = 1;; ++idx) {
    FpPoly cand;
    u64 v = idx;
    while (v) {
      cand.push_back(v % p_);
      v /= p_;
    }
    fp_trim(cand);
    cand = reduce(cand);
    if (!cand.empty() && chi(cand) == -1) {
      z = cand;
      break;
    }
  }
  FpPoly c = pow(z, t);
  FpPoly x = pow(a, (t + 1) / 2);
  FpPoly b = pow(a, t);
  int m = s;
  while (!(b.size() == 1 && b[0] == 1)) {
    int i = 0;
    FpPoly bb = b;
    while (!(bb.size() == 1 && bb[0] == 1)) {
      bb = mul(bb, bb);
      ++i;
    }
    FpPoly w = c;
    for (int j = 0; j < m - i - 1; ++j) w = mul(w, w);
    x = mul(x, w);
    c = mul(w, w);
    b = mul(b, c);
    m = i;
  }
  return x;
}

}  // namespace nfsos
