#include "nfsos/local_symbols.hpp"

#include <random>

namespace nfsos {

FieldElement DiagonalForm::determinant() const {
  if (coefficients.empty()) raise(ErrorKind::DimensionTooSmall, "empty form");
  FieldElement d = coefficients[0];
  for (std::size_t i = 1; i < coefficients.size(); ++i) d = d * coefficients[i];
  return d;
}

int sign_at(const FieldElement& a, const Place& real_place) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "sign of zero");
  if (!real_place.is_real()) raise(ErrorKind::Internal, "sign_at needs a real place");
  return a.field()->sign_at_real_root(a.coords(), real_place.index);
}

namespace {

// a·π^{-v} for v = ord_P(a); returns v as well.
std::pair<int, FieldElement> split_unit(const FieldElement& a, const Place& P) {
  int v = valuation(a, P);
  if (v == 0) return {0, a};
  FieldElement pi = uniformizer(a.field(), P);
  return {v, a * pi.pow(-v)};
}

// Tame part for odd residue characteristic: (v mod 2, [χ(u) = -1]).
BitVec tame_coordinates(const FieldElement& a, const Place& P) {
  auto [v, u] = split_unit(a, P);
  BitVec out(2);
  out.set(0, v & 1);
  Fq F = residue_field(P);
  out.set(1, F.chi(residue(u, P)) == -1);
  return out;
}

constexpr int kTwoAdicDigits = 4;

struct DyadicData {
  int e = 0, f = 0, d = 0;
  QVec pi;
  std::vector<QVec> basis;  // π, then 1 + z^i π^k (k odd < 2e), then 1 + 4c₀
  std::vector<BitVec> gram;
};

// Multiply by squares of the cofactor until 2-integral, then reduce the
// coordinates mod 2^N; the class at P is unchanged.
FieldElement dyadic_reduce(FieldElement u, const Place& P) {
  auto integral = [](const FieldElement& x) {
    for (auto& c : x.coords())
      if (mpz_even_p(c.get_den_mpz_t())) return false;
    return true;
  };
  if (!integral(u)) {
    FieldElement g(u.field(), to_qpoly(P.cofactor));
    FieldElement g2 = g * g;
    int guard = 0;
    while (!integral(u)) {
      if (++guard > 4096) raise(ErrorKind::Internal, "dyadic reduction did not converge");
      u = u * g2;
    }
  }
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), 2, kTwoAdicDigits);
  QVec c = u.coords();
  for (auto& x : c) {
    mpz_class inv, r;
    mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), mod.get_mpz_t());
    r = x.get_num() * inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    x = r;
  }
  return FieldElement(u.field(), c);
}

BitVec dyadic_unit_coordinates(FieldElement u, const Place& P, const DyadicData& D) {
  const Field& K = u.field();
  Fq F = residue_field(P);
  FieldElement pi(K, D.pi);
  FieldElement one = K->one();
  u = dyadic_reduce(u, P);
  FpPoly r = residue(u, P);
  FieldElement w = lift_residue(K, *F.sqrt(F.inv(r)));
  u = dyadic_reduce(u * w * w, P);
  BitVec out(D.d + 1);
  for (int guard = 0; guard < 8 * D.e + 8; ++guard) {
    FieldElement delta = u - one;
    if (delta.is_zero()) return out;
    int k = valuation(delta, P);
    if (k > 2 * D.e) return out;
    if (k == 2 * D.e) {
      out.set(D.d, F.trace(residue(mpq_class(1, 4) * delta, P)) == 1);
      return out;
    }
    FpPoly lead = residue(delta * pi.pow(-k), P);
    if (k % 2 == 1) {
      int block = (k - 1) / 2 * D.f;
      for (int i = 0; i < D.f; ++i) {
        if (i < static_cast<int>(lead.size()) && lead[i]) {
          out.flip(block + i);
          u = u * FieldElement(K, D.basis[1 + block + i]);
        }
      }
    } else {
      FieldElement s = lift_residue(K, *F.sqrt(lead));
      FieldElement t = one + s * pi.pow(k / 2);
      u = u * t * t;
    }
    u = dyadic_reduce(u, P);
  }
  raise(ErrorKind::Internal, "dyadic square-class reduction did not terminate at " + label(P));
}

BitVec dyadic_coordinates(const FieldElement& a, const Place& P, const DyadicData& D) {
  auto [v, u] = split_unit(a, P);
  BitVec unit = dyadic_unit_coordinates(u, P, D);
  BitVec out(D.d + 2);
  out.set(0, v & 1);
  for (int i = 0; i <= D.d; ++i) out.set(i + 1, unit.get(i));
  return out;
}

const DyadicData& dyadic_data(const Field& K, const Place& P) {
  auto lk = K->cache().lock();
  return K->cache().get<DyadicData>("dyadic:" + place_key(P), [&] {
    DyadicData D;
    D.e = P.e;
    D.f = P.f;
    D.d = P.e * P.f;
    D.pi = P.pi;
    Fq F = residue_field(P);
    FieldElement pi(K, P.pi);
    FieldElement one = K->one();
    D.basis.push_back(P.pi);
    for (int k = 1; k < 2 * D.e; k += 2) {
      FieldElement pk = pi.pow(k);
      for (int i = 0; i < D.f; ++i) {
        FpPoly zi(i + 1, 0);
        zi[i] = 1;
        D.basis.push_back((one + lift_residue(K, zi) * pk).coords());
      }
    }
    FpPoly c0;
    for (u64 idx = 1;; ++idx) {
      FpPoly cand;
      for (u64 v = idx; v; v >>= 1) cand.push_back(v & 1);
      fp_trim(cand);
      if (fp_degree(cand) >= D.f) raise(ErrorKind::Internal, "no trace-one residue found");
      if (F.trace(cand) == 1) {
        c0 = cand;
        break;
      }
    }
    D.basis.push_back((one + mpq_class(4) * lift_residue(K, c0)).coords());

    // Rows of the symbol matrix: the norm group from K_P(√B_i) is a hyperplane;
    // its normal vector is row i.
    const int dim = D.d + 2;
    std::mt19937_64 rng(0xd1ad1c ^ std::hash<std::string>{}(place_key(P)));
    std::uniform_int_distribution<int> coef(-3, 3);
    const int n = K->degree();
    for (int i = 0; i < dim; ++i) {
      FieldElement b(K, D.basis[i]);
      F2Echelon ech(dim);
      ech.insert(dyadic_coordinates(-b, P, D));
      int draws = 0;
      while (static_cast<int>(ech.rank()) < dim - 1) {
        if (++draws > 4000) raise(ErrorKind::Internal, "could not generate the local norm group at " + label(P));
        QVec x(n), y(n);
        for (int t = 0; t < n; ++t) {
          x[t] = coef(rng);
          y[t] = coef(rng);
        }
        FieldElement X(K, x), Y(K, y);
        if (Y.is_zero()) continue;
        FieldElement nrm = X * X - b * Y * Y;
        if (nrm.is_zero()) continue;
        ech.insert(dyadic_coordinates(nrm, P, D));
      }
      auto ker = kernel_f2(F2Matrix::from_rows(ech.rows(), dim));
      if (ker.size() != 1) raise(ErrorKind::Internal, "local norm group has wrong index at " + label(P));
      D.gram.push_back(ker[0]);
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (D.gram[i].get(j) != D.gram[j].get(i))
          raise(ErrorKind::Internal, "dyadic symbol matrix is not symmetric at " + label(P));
    return D;
  });
}

}  // namespace

BitVec square_class_coordinates(const FieldElement& a, const Place& place) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "square class of zero");
  if (!place.is_finite()) raise(ErrorKind::Internal, "square classes are tracked at finite places");
  if (place.dyadic()) return dyadic_coordinates(a, place, dyadic_data(a.field(), place));
  return tame_coordinates(a, place);
}

bool local_square(const FieldElement& a, const Place& place) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "local_square of zero");
  if (place.is_real()) return sign_at(a, place) > 0;
  return !square_class_coordinates(a, place).any();
}

int hilbert_symbol(const FieldElement& a, const FieldElement& b, const Place& place) {
  if (a.is_zero() || b.is_zero()) raise(ErrorKind::ZeroInput, "Hilbert symbol of zero");
  if (place.is_real()) return (sign_at(a, place) < 0 && sign_at(b, place) < 0) ? -1 : 1;
  if (place.dyadic()) {
    const DyadicData& D = dyadic_data(a.field(), place);
    BitVec ca = dyadic_coordinates(a, place, D);
    BitVec cb = dyadic_coordinates(b, place, D);
    bool odd = false;
    for (int i = 0; i < D.d + 2; ++i)
      if (ca.get(i) && D.gram[i].dot(cb)) odd = !odd;
    return odd ? -1 : 1;
  }
  BitVec ca = tame_coordinates(a, place), cb = tame_coordinates(b, place);
  bool alpha = ca.get(0), beta = cb.get(0);
  mpz_class q = absolute_norm(place);
  bool eps = mpz_fdiv_ui(q.get_mpz_t(), 4) == 3;
  bool odd = (alpha && beta && eps) ^ (beta && ca.get(1)) ^ (alpha && cb.get(1));
  return odd ? -1 : 1;
}

int hasse_invariant(const DiagonalForm& q, const Place& place) {
  int s = 1;
  for (std::size_t i = 0; i < q.dimension(); ++i)
    for (std::size_t j = i + 1; j < q.dimension(); ++j)
      s *= hilbert_symbol(q.coefficients[i], q.coefficients[j], place);
  return s;
}

bool local_isotropic(const DiagonalForm& q, const Place& place) {
  const std::size_t n = q.dimension();
  if (n < 2) raise(ErrorKind::DimensionTooSmall, "isotropy needs dimension at least 2");
  for (auto& c : q.coefficients)
    if (c.is_zero()) raise(ErrorKind::ZeroInput, "form with a zero coefficient");
  if (place.is_real()) {
    int first = sign_at(q.coefficients[0], place);
    for (std::size_t i = 1; i < n; ++i)
      if (sign_at(q.coefficients[i], place) != first) return true;
    return false;
  }
  const auto& a = q.coefficients;
  if (n == 2) return local_square(-(a[0] * a[1]), place);
  if (n == 3) return hilbert_symbol(-(a[0] * a[1]), -(a[0] * a[2]), place) == 1;
  if (n == 4) {
    FieldElement minus_one = -a[0].field()->one();
    bool anisotropic = local_square(q.determinant(), place) &&
                       hasse_invariant(q, place) == -hilbert_symbol(minus_one, minus_one, place);
    return !anisotropic;
  }
  return true;
}

}  // namespace nfsos
