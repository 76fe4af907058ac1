#include "nfsos/norm_equations.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nfsos/f2.hpp"
#include "nfsos/linalg.hpp"
#include "nfsos/local_symbols.hpp"
#include "relations.hpp"

namespace nfsos {

namespace {

constexpr u64 kNormPrimeBound = 60;
constexpr std::size_t kNormAux = 48;

const std::vector<std::pair<u64, u64>>& norm_aux(const Field& K) {
  auto lk = K->cache().lock();
  return K->cache().get<std::vector<std::pair<u64, u64>>>(
      "aux_norm", [&] { return detail::auxiliary_primes(K, kNormAux); });
}

// [real signs | aux characters | parities over fb] for elements of K that are
// smooth over the rational primes `ps`.
struct CharSpace {
  Field K;
  int r1;
  const std::vector<std::pair<u64, u64>>* aux;
  std::vector<Place> fb;
  std::set<u64> ps;

  std::size_t width() const { return r1 + aux->size() + fb.size(); }

  void add_prime(u64 p) {
    if (!ps.insert(p).second) return;
    for (auto& P : decompose_prime(K, p)) fb.push_back(P);
  }

  std::optional<BitVec> vec(const FieldElement& a) const {
    std::set<u64> hit;
    auto smooth = [&](mpz_class n) {
      n = abs(n);
      for (u64 p : ps) {
        if (n == 1) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
          hit.insert(p);
          while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
      }
      return n == 1;
    };
    mpq_class N = a.norm();
    if (!smooth(a.denominator()) || !smooth(N.get_num()) || !smooth(N.get_den())) return std::nullopt;
    BitVec v(width());
    for (int i = 0; i < r1; ++i) v.set(i, K->sign_at_real_root(a.coords(), i) < 0);
    for (std::size_t i = 0; i < aux->size(); ++i) {
      int c = detail::aux_character(a, (*aux)[i].first, (*aux)[i].second);
      if (c == 0) return std::nullopt;
      v.set(r1 + i, c < 0);
    }
    const std::size_t off = r1 + aux->size();
    for (std::size_t j = 0; j < fb.size(); ++j)
      if (hit.count(fb[j].p) && (valuation(a, fb[j]) & 1)) v.set(off + j);
    return v;
  }
};

struct LElement {
  FieldElement u, v;  // u + v√δ
};

LElement lmul(const LElement& a, const LElement& b, const FieldElement& delta) {
  return {a.u * b.u + delta * a.v * b.v, a.u * b.v + a.v * b.u};
}

// Makes both coordinates nonzero by multiplying with a norm-one element
// ((t²+δ) + 2t√δ)/(t²−δ).
NormSolution spread(NormSolution s, const FieldElement& delta) {
  const Field& K = delta.field();
  for (long t = 1; s.d_first.is_zero() || s.d_second.is_zero(); ++t) {
    if (t > 64) raise(ErrorKind::Internal, "could not make both norm coordinates nonzero");
    FieldElement tt = K->from_rational(mpq_class(t * t));
    FieldElement den = tt - delta;
    if (den.is_zero() || (tt + delta).is_zero()) continue;
    FieldElement r = (tt + delta) / den;
    FieldElement q = K->from_rational(mpq_class(2 * t)) / den;
    NormSolution n{s.d_first * r + delta * s.d_second * q, s.d_first * q + s.d_second * r, s.b};
    if (!n.d_first.is_zero() && !n.d_second.is_zero()) return n;
  }
  return s;
}

void check(const NormSolution& s, const FieldElement& delta) {
  if (s.d_first * s.d_first - delta * s.d_second * s.d_second != s.b)
    raise(ErrorKind::Internal, "norm solution failed verification");
}

std::optional<NormSolution> small_search(const FieldElement& delta, const FieldElement& b, int radius) {
  const Field& K = b.field();
  const int n = K->degree();
  std::optional<NormSolution> found;
  for (int r = 1; r <= radius && !found; ++r) {
    detail::for_each_shell_vector(n, r, [&](const std::vector<long>& c) {
      if (found) return;
      QVec q(n);
      for (int i = 0; i < n; ++i) q[i] = c[i];
      FieldElement y(K, q);
      FieldElement t = b + delta * y * y;
      if (!t.is_zero())
        if (auto x = is_square(t)) {
          found = NormSolution{*x, y, b};
          return;
        }
      FieldElement s = (y * y - b) / delta;
      if (!s.is_zero())
        if (auto x = is_square(s)) found = NormSolution{y, *x, b};
    });
  }
  return found;
}

int default_radius_small(int n) { return n == 1 ? 40 : n == 2 ? 6 : n == 3 ? 3 : 2; }
int default_radius_box(int n) { return n == 1 ? 60 : n == 2 ? 6 : n == 3 ? 2 : 1; }

NormSolution index_calculus(const FieldElement& delta, const FieldElement& b, long ceiling) {
  const Field& K = b.field();
  const int n = K->degree();
  CharSpace cs{K, K->r1(), &norm_aux(K), {}, {}};
  for (u64 p = 2; p <= kNormPrimeBound; p = next_prime(p)) cs.add_prime(p);
  for (u64 p : norm_primes(b)) cs.add_prime(p);
  for (u64 p : norm_primes(delta)) cs.add_prime(p);
  auto target = cs.vec(b);
  if (!target) raise(ErrorKind::Internal, "right-hand side is not smooth over its own primes");

  F2Echelon ech(cs.width());
  std::vector<LElement> gens;
  std::vector<FieldElement> norms;
  std::optional<NormSolution> found;

  auto attempt = [&]() {
    BitVec combo;
    BitVec residual = ech.reduce(*target, &combo);
    if (residual.any()) return;
    LElement Z{K->one(), K->zero()};
    FieldElement N = K->one();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i < combo.size() && combo.get(i)) {
        Z = lmul(Z, gens[i], delta);
        N = N * norms[i];
      }
    auto c = is_square(N / b);
    if (!c) return;
    found = NormSolution{Z.u / *c, Z.v / *c, b};
  };
  auto offer = [&](const LElement& z) {
    if (found) return;
    FieldElement N = z.u * z.u - delta * z.v * z.v;
    if (N.is_zero()) return;
    auto v = cs.vec(N);
    if (!v || ech.in_span(*v)) return;
    ech.insert(*v);
    gens.push_back(z);
    norms.push_back(N);
    attempt();
  };
  attempt();

  // special-q lattices {(u, v) : u + t·v ∈ P} with t² ≡ δ mod P
  ZMatrix G = detail::t2_gram(K);
  double dn = std::fabs(delta.norm().get_d());
  mpz_class scale = std::max<long>(1, std::lround(std::pow(dn, 1.0 / n)));
  ZMatrix G2(2 * n, ZPoly(2 * n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      G2[i][j] = G[i][j];
      G2[n + i][n + j] = G[i][j] * scale;
    }
  auto special = [&](const Place& P, int radius) {
    Fq F = residue_field(P);
    FpPoly rd = residue(delta, P);
    if (rd.empty()) return;
    auto root = F.sqrt(rd);
    if (!root) return;
    FieldElement t = lift_residue(K, *root);
    ZMatrix I = detail::ideal_basis(K, P);
    ZMatrix rows;
    for (auto& r : I) {
      ZPoly row(2 * n, 0);
      for (int k = 0; k < n; ++k) row[k] = r[k];
      rows.push_back(row);
    }
    FieldElement power = K->one();
    for (int i = 0; i < n; ++i) {
      FieldElement w = -(t * power);
      ZPoly row(2 * n, 0);
      for (int k = 0; k < n; ++k) {
        row[k] = w.coords()[k].get_num();
        row[n + k] = power.coords()[k].get_num();
      }
      rows.push_back(row);
      power = power * K->gen();
    }
    ZMatrix B = lll(hermite_form(rows), G2);
    detail::for_each_shell_vector(2 * n, radius, [&](const std::vector<long>& c) {
      if (found) return;
      QVec u(n, 0), v(n, 0);
      for (int i = 0; i < 2 * n; ++i)
        for (int k = 0; k < n; ++k) {
          u[k] += c[i] * B[i][k];
          v[k] += c[i] * B[i][n + k];
        }
      offer({FieldElement(K, u), FieldElement(K, v)});
    });
  };

  offer({K->zero(), K->one()});
  offer({K->one(), K->one()});
  const long box = ceiling > 0 ? ceiling : default_radius_box(n);
  const int sq = n <= 2 ? 2 : 1;
  std::vector<Place> priority;
  for (u64 p : norm_primes(b))
    for (auto& P : decompose_prime(K, p)) priority.push_back(P);
  for (long r = 1; r <= std::max<long>(box, sq) && !found; ++r) {
    if (r <= sq) {
      for (auto& P : priority)
        if (!found) special(P, static_cast<int>(r));
      for (auto& P : cs.fb)
        if (!found) special(P, static_cast<int>(r));
    }
    if (r <= box)
      detail::for_each_shell_vector(2 * n, static_cast<int>(r), [&](const std::vector<long>& c) {
        if (found) return;
        QVec u(n), v(n);
        for (int i = 0; i < n; ++i) {
          u[i] = c[i];
          v[i] = c[n + i];
        }
        offer({FieldElement(K, u), FieldElement(K, v)});
      });
  }
  if (!found)
    raise(ErrorKind::SearchBoundExceeded, "no norm found for " + b.to_string() + " from K(sqrt(" + delta.to_string() +
                                              ")) within the search ceiling");
  return *found;
}

// x = r²·x0 with x0 integral and its content free of square factors.
std::pair<FieldElement, mpq_class> reduce_square_class(const FieldElement& x) {
  auto [m, xi] = integral_scale(x);
  mpz_class g = 0;
  for (auto& c : xi.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  mpz_class s = 1;
  if (g > 1)
    for (auto& [p, e] : factor_integer(g))
      for (int i = 0; i < e / 2; ++i) s *= p;
  mpq_class r(s, m);
  r.canonicalize();
  return {mpq_class(1, s * s) * xi, r};
}

// One way of attacking x² − δ0·y² = b0: a norm equation with radicand `rad`
// and right-hand side `rhs`, plus the map back.
struct Attempt {
  FieldElement rad, rhs;
  std::function<NormSolution(const NormSolution&)> back;
  std::size_t cost;
};

NormSolution solve_reduced(const FieldElement& d0, const FieldElement& b0, const NormOptions& options) {
  const Field& K = d0.field();
  const int n = K->degree();
  std::vector<Attempt> attempts;
  auto cost = [](const FieldElement& rad, const FieldElement& rhs) {
    return 3 * detail::element_size(rad.coords()) + detail::element_size(rhs.coords());
  };
  auto add = [&](const FieldElement& rad, const FieldElement& rhs, std::function<NormSolution(const NormSolution&)> back) {
    attempts.push_back({rad, rhs, std::move(back), cost(rad, rhs)});
  };
  add(d0, b0, [](const NormSolution& s) { return s; });
  // swap: p² − b0·q² = δ0 gives x = p/q, y = 1/q
  add(b0, d0, [&](const NormSolution& s) {
    FieldElement qi = s.d_second.inverse();
    return NormSolution{s.d_first * qi, qi, b0};
  });
  // multiply by √δ0: rhs −b0·δ0 = t²·c
  auto [c, t] = reduce_square_class(-(b0 * d0));
  if (!is_square(c)) {
    auto via_c = [&, t = t](const NormSolution& s) {
      return NormSolution{t * s.d_second, (t * s.d_first) / d0, b0};
    };
    add(d0, c, via_c);
    add(c, d0, [&, via_c](const NormSolution& s) {
      FieldElement qi = s.d_second.inverse();
      return via_c(NormSolution{s.d_first * qi, qi, c});
    });
  }
  std::stable_sort(attempts.begin(), attempts.end(), [](auto& x, auto& y) { return x.cost < y.cost; });

  auto finish = [&](const Attempt& at, const NormSolution& s) {
    NormSolution out = at.back(s);
    check(out, d0);
    return out;
  };
  for (auto& at : attempts) {
    if (auto root = is_square(at.rad)) {
      const FieldElement half = K->from_rational(mpq_class(1, 2));
      return finish(at, {(at.rhs + K->one()) * half, (at.rhs - K->one()) * half / *root, at.rhs});
    }
  }
  const long radius = options.height_ceiling > 0 ? options.height_ceiling : default_radius_small(n);
  for (auto& at : attempts)
    if (auto s = small_search(at.rad, at.rhs, static_cast<int>(radius))) return finish(at, *s);
  std::optional<Error> last;
  for (auto& at : attempts) {
    try {
      return finish(at, index_calculus(at.rad, at.rhs, options.height_ceiling));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SearchBoundExceeded) throw;
      last = e;
    }
  }
  throw *last;
}

}  // namespace

std::optional<Place> norm_obstruction(const QuadraticExtension& E, const FieldElement& b) {
  if (b.is_zero() || E.delta.is_zero()) raise(ErrorKind::ZeroInput, "norm equation with zero input");
  if (b.field() != E.base || E.delta.field() != E.base) raise(ErrorKind::FieldMismatch, "norm equation fields differ");
  PlaceSet places = odd_support(E.delta);
  for (auto& P : odd_support(b)) places.add(P);
  for (auto& P : dyadic_places(E.base)) places.add(P);
  for (auto& P : places)
    if (hilbert_symbol(E.delta, b, P) == -1) return P;
  for (auto& P : real_places(E.base))
    if (hilbert_symbol(E.delta, b, P) == -1) return P;
  return std::nullopt;
}

bool norm_locally_solvable(const QuadraticExtension& E, const FieldElement& b) {
  return !norm_obstruction(E, b).has_value();
}

NormSolution solve_norm(const QuadraticExtension& E, const FieldElement& b, const NormOptions& options) {
  if (b.is_zero() || E.delta.is_zero()) raise(ErrorKind::ZeroInput, "norm equation with zero input");
  const Field& K = E.base;
  const FieldElement& delta = E.delta;
  if (b == K->one()) return {K->one(), K->zero(), b};
  if (auto s = is_square(delta)) {
    NormSolution sol{(b + K->one()) / K->from_rational(2), (b - K->one()) / (mpq_class(2) * *s), b};
    check(sol, delta);
    return sol;
  }
  if (auto w = norm_obstruction(E, b))
    raise(ErrorKind::NotANorm,
          b.to_string() + " is not a norm from K(sqrt(" + delta.to_string() + ")): obstruction at " + label(*w), *w);

  if (auto x = is_square(b)) return {*x, K->zero(), b};
  NormSolution sol{K->zero(), K->zero(), b};
  if (auto y = is_square(-b / delta)) {
    sol = {K->zero(), *y, b};
  } else {
    auto [d0, rho] = reduce_square_class(delta);
    auto [b0, r] = reduce_square_class(b);
    NormSolution raw = solve_reduced(d0, b0, options);
    sol = {r * raw.d_first, (r / rho) * raw.d_second, b};
  }
  check(sol, delta);
  return sol;
}

/// Exposed to the decomposition module: solution with both coordinates nonzero.
NormSolution solve_norm_nonzero(const QuadraticExtension& E, const FieldElement& b, const NormOptions& options) {
  NormSolution s = solve_norm(E, b, options);
  if (s.d_first.is_zero() || s.d_second.is_zero()) {
    if (is_square(E.delta)) raise(ErrorKind::Internal, "degenerate extension in solve_norm_nonzero");
    s = spread(s, E.delta);
  }
  check(s, E.delta);
  return s;
}

}  // namespace nfsos
