#include "nfsos/places.hpp"

#include <algorithm>
#include <set>

namespace nfsos {

bool operator==(const Place& a, const Place& b) {
  if (a.kind != b.kind) return false;
  if (a.is_real()) return a.index == b.index;
  return a.p == b.p && a.residue_modulus == b.residue_modulus;
}

std::string label(const Place& place) {
  if (place.is_real()) return "real#" + std::to_string(place.index);
  QVec g;
  for (auto c : place.residue_modulus) g.push_back(mpq_class(static_cast<unsigned long>(c)));
  return "P(" + std::to_string(place.p) + "; " + format_polynomial(g) + ")";
}

std::string place_key(const Place& place) {
  if (place.is_real()) return "R" + std::to_string(place.index);
  std::string k = "F" + std::to_string(place.p);
  for (auto c : place.residue_modulus) k += ":" + std::to_string(c);
  return k;
}

PlaceSet::PlaceSet(const std::vector<Place>& places) {
  for (const auto& p : places) add(p);
}

bool PlaceSet::add(const Place& place) {
  if (contains(place)) return false;
  items_.push_back(place);
  return true;
}

int PlaceSet::index_of(const Place& place) const {
  for (std::size_t i = 0; i < items_.size(); ++i)
    if (items_[i] == place) return static_cast<int>(i);
  return -1;
}

std::vector<Place> real_places(const Field& field) {
  std::vector<Place> out;
  const auto& iv = field->real_root_intervals();
  for (std::size_t i = 0; i < iv.size(); ++i) {
    Place p;
    p.kind = PlaceKind::real;
    p.index = static_cast<int>(i);
    p.lo = iv[i].first;
    p.hi = iv[i].second;
    out.push_back(p);
  }
  return out;
}

namespace {

int valuation_raw(const FieldElement& a, u64 p, int e, const ZPoly& beta_poly) {
  mpz_class pz(static_cast<unsigned long>(p));
  int m = 0;
  for (auto& c : a.coords())
    if (c != 0) m = std::max(m, -padic_valuation(c, p));
  FieldElement A = a;
  if (m > 0) {
    mpz_class pm;
    mpz_pow_ui(pm.get_mpz_t(), pz.get_mpz_t(), m);
    A = mpq_class(pm) * a;
  }
  FieldElement beta(a.field(), to_qpoly(beta_poly));
  mpq_class inv_p(1, pz);
  int k = 0;
  for (;;) {
    FieldElement C = A * beta;
    bool divisible = true;
    for (auto& c : C.coords())
      if (c != 0 && padic_valuation(c, p) < 1) {
        divisible = false;
        break;
      }
    if (!divisible) break;
    A = inv_p * C;
    ++k;
  }
  return k - m * e;
}

}  // namespace

std::vector<Place> decompose_prime(const Field& field, u64 p) {
  if (!is_prime(p)) raise(ErrorKind::Internal, std::to_string(p) + " is not prime");
  auto lk = field->cache().lock();
  return field->cache().get<std::vector<Place>>("primes:" + std::to_string(p), [&] {
    if (!field->maximal_at(p))
      raise(ErrorKind::NonMaximalOrderAtP,
            "Z[x]/(" + field->polynomial_string() + ") is not maximal at " + std::to_string(p) +
                "; choose another defining polynomial");
    const ZPoly& f = field->polynomial();
    FpPoly fb = fp_from(f, p);
    auto facs = fp_factor(fb, p);
    std::vector<Place> out;
    for (std::size_t i = 0; i < facs.size(); ++i) {
      Place P;
      P.kind = PlaceKind::finite;
      P.p = p;
      P.e = facs[i].second;
      P.f = fp_degree(facs[i].first);
      P.residue_modulus = facs[i].first;
      P.anti_uniformizer = fp_lift(fp_divmod(fb, facs[i].first, p).first);
      FpPoly cof{1};
      for (std::size_t j = 0; j < facs.size(); ++j) {
        if (j == i) continue;
        for (int t = 0; t < facs[j].second; ++t) cof = fp_mul(cof, facs[j].first, p);
      }
      P.cofactor = fp_lift(cof);
      ZPoly g = fp_lift(facs[i].first);
      std::vector<QVec> candidates;
      candidates.push_back(to_qpoly(g));
      QVec gp = to_qpoly(g);
      if (gp.empty()) gp.push_back(0);
      gp[0] += static_cast<unsigned long>(p);
      candidates.push_back(gp);
      candidates.push_back(QVec{mpq_class(static_cast<unsigned long>(p))});
      for (auto& c : candidates) {
        FieldElement pi(field, c);
        if (pi.is_zero()) continue;
        if (valuation_raw(pi, p, P.e, P.anti_uniformizer) == 1) {
          P.pi = pi.coords();
          break;
        }
      }
      if (P.pi.empty()) raise(ErrorKind::Internal, "no uniformizer found at " + label(P));
      out.push_back(std::move(P));
    }
    return out;
  });
}

int valuation(const FieldElement& a, const Place& place) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "valuation of zero");
  if (!place.is_finite()) raise(ErrorKind::Internal, "valuation at a real place");
  return valuation_raw(a, place.p, place.e, place.anti_uniformizer);
}

std::vector<u64> norm_primes(const FieldElement& a) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "norm primes of zero");
  mpq_class n = a.norm();
  std::set<u64> ps;
  for (const mpz_class& part : {mpz_class(n.get_num()), mpz_class(n.get_den()), a.denominator()}) {
    if (abs(part) <= 1) continue;
    for (auto& [q, e] : factor_integer(part)) {
      if (!q.fits_ulong_p()) raise(ErrorKind::SearchBoundExceeded, "prime factor " + q.get_str() + " is too large");
      ps.insert(q.get_ui());
    }
  }
  return {ps.begin(), ps.end()};
}

PlaceSet odd_support(const FieldElement& a) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "odd_support of zero");
  auto [m, b] = integral_scale(a);
  PlaceSet out;
  for (u64 p : norm_primes(b))
    for (const auto& P : decompose_prime(a.field(), p))
      if (valuation(b, P) % 2 != 0) out.add(P);
  return out;
}

PlaceSet dyadic_places(const Field& field) { return PlaceSet(decompose_prime(field, 2)); }

FieldElement uniformizer(const Field& field, const Place& place) { return FieldElement(field, place.pi); }

Fq residue_field(const Place& place) { return Fq(place.p, place.residue_modulus); }

mpz_class absolute_norm(const Place& place) {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), place.p, place.f);
  return q;
}

FieldElement lift_residue(const Field& field, const FpPoly& r) { return FieldElement(field, to_qpoly(fp_lift(r))); }

FpPoly residue(const FieldElement& a, const Place& place) {
  const u64 p = place.p;
  Fq F = residue_field(place);
  auto p_integral = [&](const FieldElement& x) {
    for (auto& c : x.coords())
      if (c != 0 && padic_valuation(c, p) < 0) return false;
    return true;
  };
  FieldElement x = a;
  FieldElement gamma(a.field(), to_qpoly(place.cofactor));
  int m = 0;
  while (!p_integral(x)) {
    if (++m > 4096) raise(ErrorKind::Internal, "residue of a non-integral element at " + label(place));
    x = x * gamma;
  }
  FpPoly r = F.reduce(fp_from(x.coords(), p));
  if (m > 0) {
    FpPoly g = F.reduce(fp_from(gamma.coords(), p));
    r = F.mul(r, F.inv(F.pow(g, m)));
  }
  return r;
}

}  // namespace nfsos
