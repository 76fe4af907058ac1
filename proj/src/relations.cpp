#include "relations.hpp"

#include <algorithm>
#include <cmath>

#include "nfsos/numeric.hpp"

namespace nfsos::detail {

namespace {

constexpr std::size_t kAuxCount = 64;
constexpr std::size_t kPoolCap = 4000;
constexpr u64 kSmallPrimeFloor = 20;
const mpz_class kMaxDiscriminant("100000000");

int box_limit(int n) {
  if (n <= 1) return 60;
  if (n == 2) return 40;
  if (n == 3) return 9;
  if (n == 4) return 5;
  return 2;
}

int special_limit(int n) {
  if (n <= 3) return 3;
  if (n <= 5) return 2;
  return 1;
}

// Divides out every prime of `ps` from n; true if nothing else remains.
bool smooth_over(mpz_class n, const std::set<u64>& ps, std::set<u64>& hit) {
  n = abs(n);
  if (n == 0) return false;
  for (u64 p : ps) {
    if (n == 1) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      hit.insert(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  return n == 1;
}

}  // namespace

std::size_t element_size(const QVec& coords) {
  std::size_t s = 0;
  for (auto& c : coords) s += bit_length(c.get_num()) + bit_length(c.get_den()) - 1;
  return s;
}

double minkowski_bound(const Field& field) {
  const int n = field->degree();
  double b = std::sqrt(std::fabs(field->discriminant().get_d()));
  for (int i = 1; i <= n; ++i) b *= static_cast<double>(i) / n;
  b *= std::pow(4.0 / M_PI, field->r2());
  return b;
}

void for_each_shell_vector(int dim, int radius, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> v(dim, -radius);
  if (radius == 0) {
    fn(std::vector<long>(dim, 0));
    return;
  }
  for (;;) {
    bool on_shell = false;
    int first = -1;
    for (int i = 0; i < dim; ++i) {
      if (std::labs(v[i]) == radius) on_shell = true;
      if (first < 0 && v[i] != 0) first = i;
    }
    if (on_shell && first >= 0 && v[first] > 0) fn(v);
    int i = 0;
    while (i < dim && v[i] == radius) v[i++] = -radius;
    if (i == dim) return;
    ++v[i];
  }
}

ZMatrix ideal_basis(const Field& field, const Place& place) {
  const int n = field->degree();
  ZPoly g = fp_lift(place.residue_modulus);
  FieldElement G(field, to_qpoly(g));
  FieldElement th = field->gen();
  ZMatrix gens;
  FieldElement power = field->one();
  for (int i = 0; i < n; ++i) {
    ZPoly row(n, 0);
    row[i] = static_cast<unsigned long>(place.p);
    gens.push_back(row);
    FieldElement x = G * power;
    ZPoly r(n, 0);
    for (int k = 0; k < n; ++k) r[k] = x.coords()[k].get_num();
    gens.push_back(r);
    power = power * th;
  }
  return hermite_form(gens);
}

const ZMatrix& t2_gram(const Field& field) {
  auto lk = field->cache().lock();
  return field->cache().get<ZMatrix>("t2_gram", [&] {
    const int n = field->degree();
    RootSet rs = complex_roots(field->polynomial(), field->r1(), 96);
    std::vector<std::vector<Real>> re(n), im(n);
    for (std::size_t k = 0; k < rs.roots.size(); ++k) {
      Complex z(rs.prec);
      z.re = Real(rs.prec, 1L);
      for (int i = 0; i < n; ++i) {
        re[i].push_back(z.re);
        im[i].push_back(z.im);
        z = z * rs.roots[k];
      }
    }
    ZMatrix G(n, ZPoly(n));
    Real scale(rs.prec, 1L << 16);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Real s(rs.prec);
        for (std::size_t k = 0; k < rs.roots.size(); ++k) {
          Real t = re[i][k] * re[j][k] + im[i][k] * im[j][k];
          if (static_cast<int>(k) >= rs.r1) t += t;
          s += t;
        }
        G[i][j] = (s * scale).round();
        if (i == j) G[i][j] += 1;
      }
    return G;
  });
}

std::vector<std::pair<u64, u64>> auxiliary_primes(const Field& field, std::size_t count) {
  std::vector<std::pair<u64, u64>> out;
  FpPoly f;
  for (u64 p = next_prime((u64{1} << 45) + 1); out.size() < count; p = next_prime(p)) {
    if (mpz_divisible_ui_p(field->discriminant().get_mpz_t(), p)) continue;
    auto roots = fp_roots(fp_from(field->polynomial(), p), p);
    if (!roots.empty()) out.emplace_back(p, roots.front());
  }
  return out;
}

int aux_character(const FieldElement& a, u64 p, u64 r) {
  u64 acc = 0;
  const auto& c = a.coords();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (mpz_divisible_ui_p(c[i].get_den_mpz_t(), p)) return 0;
    acc = (mulmod(acc, r, p) + reduce_mod(c[i], p)) % p;
  }
  return legendre(acc, p);
}

RelationContext::RelationContext(const Field& field) : r1_(field->r1()), r2_(field->r2()) {
  if (abs(field->discriminant()) > kMaxDiscriminant)
    raise(ErrorKind::DiscriminantTooLarge,
          "|disc| = " + mpz_class(abs(field->discriminant())).get_str() + " exceeds " + kMaxDiscriminant.get_str());
  const auto& cert = field->index_certificate();
  if (!cert.complete())
    raise(ErrorKind::NonMaximalOrderAtP, "Z[x]/(" + field->polynomial_string() + ") is not maximal at " +
                                             std::to_string(cert.failing.front()) +
                                             "; choose another defining polynomial");
  aux_ = auxiliary_primes(field, kAuxCount);
  ech_ = F2Echelon(width());
  const double mink = minkowski_bound(field);
  const u64 bound = std::max<u64>(kSmallPrimeFloor, static_cast<u64>(std::floor(mink)));
  for (u64 p = 2; p <= bound; p = next_prime(p)) include_prime(field, p);
  // a few obvious elements
  offer(field, -field->one());
  if (field->degree() > 1) {
    offer(field, field->gen());
    offer(field, field->gen() + field->one());
    offer(field, field->gen() - field->one());
  }
}

int RelationContext::fb_index(const Place& place) const {
  auto it = fb_pos_.find(place_key(place));
  return it == fb_pos_.end() ? -1 : it->second;
}

void RelationContext::widen_all() {
  const std::size_t w = width();
  ech_.widen(w);
  for (auto& r : independent_) r.chars.resize(w);
  for (auto& r : pool_) r.chars.resize(w);
}

void RelationContext::include_prime(const Field& field, u64 p) {
  if (covers(p)) return;
  auto places = decompose_prime(field, p);
  if (aux_.size() && std::any_of(aux_.begin(), aux_.end(), [&](auto& a) { return a.first == p; }))
    raise(ErrorKind::SearchBoundExceeded, "prime " + std::to_string(p) + " collides with a character prime");
  for (auto& P : places) {
    fb_pos_[place_key(P)] = static_cast<int>(fb_.size());
    fb_.push_back(P);
  }
  fb_rational_.insert(p);
  widen_all();
  offer(field, field->from_rational(mpq_class(static_cast<unsigned long>(p))));
}

std::optional<BitVec> RelationContext::vector_of(const Field& field, const FieldElement& a) const {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "character vector of zero");
  std::set<u64> hit;
  if (!smooth_over(a.denominator(), fb_rational_, hit)) return std::nullopt;
  mpq_class n = a.norm();
  if (!smooth_over(n.get_num(), fb_rational_, hit)) return std::nullopt;
  if (!smooth_over(n.get_den(), fb_rational_, hit)) return std::nullopt;
  BitVec v(width());
  for (std::size_t i = 0; i < r1_; ++i) v.set(i, field->sign_at_real_root(a.coords(), static_cast<int>(i)) < 0);
  for (std::size_t i = 0; i < aux_.size(); ++i) {
    int c = aux_character(a, aux_[i].first, aux_[i].second);
    if (c == 0) raise(ErrorKind::SearchBoundExceeded, "element is not a unit at a character prime");
    v.set(r1_ + i, c < 0);
  }
  const std::size_t off = parity_offset();
  for (u64 p : hit)
    for (std::size_t j = 0; j < fb_.size(); ++j)
      if (fb_[j].p == p && (valuation(a, fb_[j]) & 1)) v.set(off + j);
  return v;
}

BitVec RelationContext::vector_of_enlarging(const Field& field, const FieldElement& a) {
  if (auto v = vector_of(field, a)) return *v;
  for (u64 p : norm_primes(a)) include_prime(field, p);
  auto v = vector_of(field, a);
  if (!v) raise(ErrorKind::Internal, "element still not smooth after enlarging the factor base");
  return *v;
}

bool RelationContext::offer(const Field& field, const FieldElement& a) {
  if (a.is_zero()) return false;
  auto v = vector_of(field, a);
  if (!v) return false;
  Relation r{a.coords(), *v, element_size(a.coords())};
  if (pool_.size() < kPoolCap) pool_.push_back(r);
  if (ech_.in_span(*v)) return false;
  ech_.insert(*v);
  independent_.push_back(std::move(r));
  return true;
}

void RelationContext::box_shell(const Field& field, int radius) {
  const int n = field->degree();
  for_each_shell_vector(n, radius, [&](const std::vector<long>& c) {
    if (rank() >= target_rank()) return;
    QVec q(n);
    for (int i = 0; i < n; ++i) q[i] = c[i];
    offer(field, FieldElement(field, q));
  });
}

void RelationContext::special_q_shell(const Field& field, const Place& place, int radius) {
  const int n = field->degree();
  ZMatrix B = lll(ideal_basis(field, place), t2_gram(field));
  for_each_shell_vector(n, radius, [&](const std::vector<long>& c) {
    if (rank() >= target_rank()) return;
    QVec q(n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) q[k] += c[i] * B[i][k];
    offer(field, FieldElement(field, q));
  });
}

void RelationContext::complete(const Field& field) {
  const int n = field->degree();
  const int rounds = std::max(box_limit(n), special_limit(n));
  for (int round = 1; round <= rounds && rank() < target_rank(); ++round) {
    if (round <= box_limit(n) && round > box_done_) {
      box_shell(field, round);
      box_done_ = round;
    }
    if (round > special_limit(n)) continue;
    std::vector<Place> snapshot = fb_;
    for (const auto& P : snapshot) {
      if (rank() >= target_rank()) break;
      int& done = special_done_[place_key(P)];
      if (done >= round) continue;
      special_q_shell(field, P, round);
      done = round;
    }
  }
  if (rank() < target_rank())
    raise(ErrorKind::SearchBoundExceeded, "relation search stalled at rank " + std::to_string(rank()) + " of " +
                                              std::to_string(target_rank()));
}

RelationContext& relation_context(const Field& field) {
  return field->cache().get<RelationContext>("relations", [&] { return RelationContext(field); });
}

}  // namespace nfsos::detail
