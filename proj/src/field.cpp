#include "nfsos/field.hpp"

#include <algorithm>
#include <numeric>

#include "nfsos/linalg.hpp"
#include "nfsos/modp.hpp"
#include "nfsos/numeric.hpp"

namespace nfsos {

namespace {

int sign_variations(const std::vector<QPoly>& seq, const mpq_class& x) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    int v = sgn(evaluate(s, x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

std::vector<QPoly> sturm_sequence(const ZPoly& f) {
  std::vector<QPoly> seq{to_qpoly(f), derivative(to_qpoly(f))};
  while (!seq.back().empty()) {
    QPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.empty()) break;
    seq.push_back(scale(r, -1));
  }
  return seq;
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const ZPoly& f) {
  std::vector<std::pair<mpq_class, mpq_class>> out;
  if (degree(f) == 1) {
    mpq_class r(-f[0]);
    out.emplace_back(r, r);
    return out;
  }
  auto seq = sturm_sequence(f);
  mpz_class bound = 1;
  for (int i = 0; i < degree(f); ++i) bound = std::max(bound, mpz_class(abs(f[i]) + 1));
  mpq_class lo(-bound), hi(bound);
  // (lo, hi] intervals with their root counts
  std::vector<std::pair<mpq_class, mpq_class>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int count = sign_variations(seq, a) - sign_variations(seq, b);
    if (count == 0) continue;
    if (count == 1 && sign_at(f, b) != 0 && sign_at(f, a) != 0) {
      out.emplace_back(a, b);
      continue;
    }
    mpq_class mid = (a + b) / 2;
    stack.emplace_back(a, mid);
    stack.emplace_back(mid, b);
  }
  std::sort(out.begin(), out.end());
  // neighbours may share an endpoint; shrink until they are disjoint
  auto halve = [&](std::pair<mpq_class, mpq_class>& iv) {
    mpq_class mid = (iv.first + iv.second) / 2;
    int sm = sign_at(f, mid);
    if (sm == 0) {
      iv = {mid, mid};
    } else if (sm != sign_at(f, iv.first)) {
      iv.second = mid;
    } else {
      iv.first = mid;
    }
  };
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    while (out[i].second >= out[i + 1].first) {
      halve(out[i]);
      halve(out[i + 1]);
    }
  return out;
}

std::pair<mpq_class, mpq_class> interval_mul(const std::pair<mpq_class, mpq_class>& x,
                                             const mpq_class& lo, const mpq_class& hi) {
  mpq_class p[4] = {x.first * lo, x.first * hi, x.second * lo, x.second * hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

QPoly qpoly_inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = divmod(a, m).second;
  QPoly s0, s1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (degree(r0) != 0) raise(ErrorKind::DivisionByZero, "element is not invertible");
  return scale(s0, 1 / mpq_class(r0[0]));
}

std::vector<int> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<char> can(n + 1, 0);
  can[0] = 1;
  for (int d : degrees)
    for (int s = n; s >= d; --s)
      if (can[s - d]) can[s] = 1;
  std::vector<int> out;
  for (int s = 1; s < n; ++s)
    if (can[s]) out.push_back(s);
  return out;
}

// Exact search for a monic integer factor among products of complex roots.
bool has_factor_of_degree(const ZPoly& f, int k, const RootSet& rs) {
  const int n = degree(f);
  std::vector<Complex> all;
  for (int i = 0; i < rs.r1; ++i) all.push_back(rs.roots[i]);
  for (int i = rs.r1; i < static_cast<int>(rs.roots.size()); ++i) {
    all.push_back(rs.roots[i]);
    all.push_back(rs.roots[i].conj());
  }
  const mpfr_prec_t prec = rs.prec;
  Real tol(prec, mpq_class(1, 1000));
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<Complex> coef{Complex{Real(prec, 1), Real(prec)}};
    for (int idx : pick) {
      std::vector<Complex> next(coef.size() + 1, Complex(prec));
      for (std::size_t j = 0; j < coef.size(); ++j) {
        next[j + 1] = next[j + 1] + coef[j];
        next[j] = next[j] - coef[j] * all[idx];
      }
      coef = std::move(next);
    }
    bool near = true;
    ZPoly g;
    for (auto& c : coef) {
      mpz_class z = c.re.round();
      if (!(abs(c.im) < tol) || !(abs(c.re - Real(prec, mpq_class(z))) < tol)) {
        near = false;
        break;
      }
      g.push_back(z);
    }
    if (near && divmod(to_qpoly(f), to_qpoly(g)).second.empty()) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void require_irreducible(const ZPoly& f, int real_count) {
  const int n = degree(f);
  if (n == 1) return;
  QPoly fq = to_qpoly(f);
  if (degree(gcd(fq, derivative(fq))) > 0)
    raise(ErrorKind::ReduciblePolynomial, format_polynomial(f) + " has a repeated factor");
  mpz_class disc = discriminant(f);
  std::vector<int> possible;
  for (int s = 1; s < n; ++s) possible.push_back(s);
  int used = 0;
  for (u64 p = 3; used < 40 && !possible.empty(); p = next_prime(p)) {
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) continue;
    std::vector<int> degs;
    for (auto& [g, e] : fp_factor(fp_from(f, p), p))
      for (int i = 0; i < e; ++i) degs.push_back(fp_degree(g));
    auto sums = subset_sums(degs, n);
    std::vector<int> keep;
    std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                          std::back_inserter(keep));
    possible = std::move(keep);
    ++used;
  }
  if (possible.empty()) return;
  mpz_class norm2 = 0;
  for (auto& c : f) norm2 += c * c;
  mpfr_prec_t prec = 160 + 2 * n + static_cast<mpfr_prec_t>(bit_length(norm2));
  RootSet rs = complex_roots(f, real_count, prec);
  for (int k : possible) {
    if (2 * k > n) break;
    if (has_factor_of_degree(f, k, rs))
      raise(ErrorKind::ReduciblePolynomial, format_polynomial(f) + " has a factor of degree " + std::to_string(k));
  }
}

}  // namespace

bool dedekind_maximal(const ZPoly& f, u64 p) {
  FpPoly fb = fp_from(f, p);
  auto facs = fp_factor(fb, p);
  FpPoly grad{1};
  for (auto& [g, e] : facs) grad = fp_mul(grad, g, p);
  FpPoly hbar = fp_divmod(fb, grad, p).first;
  ZPoly g{1};
  for (auto& [gi, e] : facs) g = mul(g, fp_lift(gi));
  ZPoly h = fp_lift(hbar);
  ZPoly gh = mul(g, h);
  ZPoly big(std::max(gh.size(), f.size()), 0);
  for (std::size_t i = 0; i < gh.size(); ++i) big[i] += gh[i];
  for (std::size_t i = 0; i < f.size(); ++i) big[i] -= f[i];
  mpz_class pz(static_cast<unsigned long>(p));
  for (auto& c : big) c /= pz;
  trim(big);
  FpPoly fbar = fp_from(big, p);
  FpPoly d = fp_gcd(fp_gcd(fbar, grad, p), hbar, p);
  return fp_degree(d) <= 0;
}

Field NumberField::create(const ZPoly& f0) {
  ZPoly f = f0;
  trim(f);
  if (nfsos::degree(f) < 1) raise(ErrorKind::ParseError, "defining polynomial must have degree at least 1");
  if (f.back() != 1) raise(ErrorKind::NonMonic, format_polynomial(f) + " is not monic");
  return Field(new NumberField(std::move(f)));
}

Field NumberField::create(std::string_view text) {
  QPoly q = parse_polynomial(text);
  ZPoly z;
  for (auto& c : q) {
    if (c.get_den() != 1) raise(ErrorKind::ParseError, "defining polynomial must have integer coefficients");
    z.push_back(c.get_num());
  }
  return create(z);
}

NumberField::NumberField(ZPoly f) : f_(std::move(f)) {
  const int n = degree();
  disc_ = nfsos::discriminant(f_);
  if (n > 1 && disc_ == 0) raise(ErrorKind::ReduciblePolynomial, format_polynomial(f_) + " has a repeated factor");
  if (n > 1) {
    // integer roots divide the constant term
    if (f_[0] == 0) raise(ErrorKind::ReduciblePolynomial, format_polynomial(f_) + " is divisible by x");
    std::vector<mpz_class> divisors{1};
    for (auto& [q, e] : factor_integer(f_[0])) {
      std::size_t count = divisors.size();
      mpz_class pk = 1;
      for (int i = 0; i < e; ++i) {
        pk *= q;
        for (std::size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pk);
      }
    }
    for (auto& d : divisors)
      for (int s : {1, -1})
        if (sign_at(f_, mpq_class(s * d)) == 0)
          raise(ErrorKind::ReduciblePolynomial, format_polynomial(f_) + " has the root " + mpz_class(s * d).get_str());
  }
  real_roots_ = isolate_real_roots(f_);
  require_irreducible(f_, static_cast<int>(real_roots_.size()));
  traces_.assign(n, 0);
  traces_[0] = n;
  // Newton identities for monic f
  for (int k = 1; k < n; ++k) {
    mpz_class s = -mpz_class(k) * f_[n - k];
    for (int i = 1; i < k; ++i) s -= f_[n - i] * traces_[k - i];
    traces_[k] = s;
  }
}

const IndexCertificate& NumberField::index_certificate() const {
  return cache_.get<IndexCertificate>("index_certificate", [&] {
    IndexCertificate cert;
    if (degree() == 1) return cert;
    for (auto& [q, e] : factor_integer(disc_)) {
      if (e < 2) continue;
      if (!q.fits_ulong_p()) raise(ErrorKind::DiscriminantTooLarge, "discriminant has a huge square factor");
      u64 p = q.get_ui();
      cert.checked.push_back(p);
      if (!maximal_at(p)) cert.failing.push_back(p);
    }
    return cert;
  });
}

bool NumberField::maximal_at(u64 p) const {
  auto lk = cache_.lock();
  auto& memo = cache_.get<std::map<u64, bool>>("dedekind", [] { return std::map<u64, bool>(); });
  auto it = memo.find(p);
  if (it != memo.end()) return it->second;
  bool ok = degree() == 1 || !mpz_divisible_ui_p(disc_.get_mpz_t(), p) || dedekind_maximal(f_, p);
  memo[p] = ok;
  return ok;
}

mpz_class NumberField::index_bound() const {
  const auto& cert = index_certificate();
  mpz_class bound = 1;
  for (u64 p : cert.failing) {
    int v = padic_valuation(disc_, p);
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, v / 2);
    bound *= pk;
  }
  return bound;
}

int NumberField::sign_at_real_root(const QVec& a0, int index) const {
  QVec a = a0;
  trim(a);
  if (a.empty()) raise(ErrorKind::ZeroInput, "sign of zero");
  auto lk = cache_.lock();
  auto& intervals = cache_.get<std::vector<std::pair<mpq_class, mpq_class>>>("real_intervals", [&] { return real_roots_; });
  auto& [lo, hi] = intervals.at(index);
  for (int iter = 0; iter < 20000; ++iter) {
    if (lo == hi) return sgn(evaluate(a, lo));
    std::pair<mpq_class, mpq_class> acc{a.back(), a.back()};
    for (int k = static_cast<int>(a.size()) - 2; k >= 0; --k) {
      acc = interval_mul(acc, lo, hi);
      acc.first += a[k];
      acc.second += a[k];
    }
    if (acc.first > 0) return 1;
    if (acc.second < 0) return -1;
    mpq_class mid = (lo + hi) / 2;
    int s = sign_at(f_, mid);
    if (s == 0) {
      lo = hi = mid;
    } else if (s == sign_at(f_, lo)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  raise(ErrorKind::Internal, "real sign refinement did not terminate");
}

QVec NumberField::reduce(QPoly a) const {
  const int n = degree();
  for (int k = static_cast<int>(a.size()) - 1; k >= n; --k) {
    if (a[k] == 0) continue;
    mpq_class c = a[k];
    for (int i = 0; i < n; ++i) a[k - n + i] -= c * f_[i];
    a[k] = 0;
  }
  a.resize(n);
  return a;
}

FieldElement NumberField::zero() const { return element(QVec(degree())); }
FieldElement NumberField::one() const { return from_rational(1); }
FieldElement NumberField::gen() const { return element(QVec{0, 1}); }
FieldElement NumberField::from_rational(const mpq_class& q) const { return element(QVec{q}); }
FieldElement NumberField::element(const QVec& coords) const { return FieldElement(shared_from_this(), coords); }

FieldElement::FieldElement(Field field, QVec coords) : field_(std::move(field)) {
  const int n = field_->degree();
  if (static_cast<int>(coords.size()) > n) coords = field_->reduce(std::move(coords));
  coords.resize(n);
  for (auto& c : coords) c.canonicalize();
  c_ = std::move(coords);
}

bool FieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const mpq_class& x) { return x == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const mpq_class& x) { return x == 0; });
}

mpz_class FieldElement::denominator() const {
  mpz_class d = 1;
  for (auto& c : c_) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  return d;
}

static void same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && a.field()->polynomial() != b.field()->polynomial())
    raise(ErrorKind::FieldMismatch, "elements belong to different fields");
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  QVec c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  QVec c = a.c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  same_field(a, b);
  const std::size_t n = a.c_.size();
  QPoly prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return FieldElement(a.field_, a.field_->reduce(std::move(prod)));
}

FieldElement operator*(const mpq_class& q, const FieldElement& a) {
  QVec c = a.c_;
  for (auto& x : c) x *= q;
  return FieldElement(a.field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) { return a.c_ == b.c_; }

FieldElement FieldElement::operator-() const { return mpq_class(-1) * *this; }

FieldElement FieldElement::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  if (is_rational()) return field_->from_rational(1 / c_[0]);
  QPoly a = c_;
  trim(a);
  return FieldElement(field_, qpoly_inverse_mod(a, to_qpoly(field_->polynomial())));
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = field_->one(), base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

mpq_class FieldElement::norm() const {
  QPoly a = c_;
  trim(a);
  if (a.empty()) return 0;
  const int n = field_->degree();
  mpz_class d = denominator();
  ZPoly za;
  for (auto& c : a) za.push_back(mpz_class(c * d));
  mpz_class dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), n);
  mpq_class r(resultant(field_->polynomial(), za), dn);
  r.canonicalize();
  return r;
}

mpq_class FieldElement::trace() const {
  mpq_class t = 0;
  const auto& pt = field_->power_traces();
  for (std::size_t k = 0; k < c_.size(); ++k) t += c_[k] * pt[k];
  return t;
}

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  same_field(a, b);
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  raise(ErrorKind::Internal, "unknown arithmetic operation");
}

std::pair<mpz_class, FieldElement> integral_scale(const FieldElement& a) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "integral_scale of zero");
  mpz_class d = a.denominator();
  mpz_class m = 1;
  if (d != 1) {
    for (auto& [p, e] : factor_integer(d)) {
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), (e + 1) / 2);
      m *= pk;
    }
  }
  return {m, mpq_class(m * m) * a};
}

FieldElement parse_element(const Field& field, std::string_view text) {
  return FieldElement(field, parse_polynomial(text));
}

FieldElement canonical_sign(const FieldElement& a) {
  for (auto& c : a.coords()) {
    if (c == 0) continue;
    return c < 0 ? -a : a;
  }
  return a;
}

namespace {

struct CharacterPrimes {
  std::vector<std::pair<u64, u64>> primes;  // (p, root of f mod p)
};

const CharacterPrimes& character_primes(const NumberField& K) {
  return K.cache().get<CharacterPrimes>("square_characters", [&] {
    CharacterPrimes cp;
    const ZPoly& f = K.polynomial();
    for (u64 p = 10007; cp.primes.size() < 24 && p < 2000000; p = next_prime(p)) {
      if (mpz_divisible_ui_p(K.discriminant().get_mpz_t(), p)) continue;
      auto roots = fp_roots(fp_from(f, p), p);
      if (!roots.empty()) cp.primes.emplace_back(p, roots.front());
    }
    return cp;
  });
}

struct EmbeddingData {
  RootSet roots;
  std::vector<std::vector<Real>> inverse;  // inverse of the real evaluation matrix
};

const EmbeddingData& embedding_data(const NumberField& K, mpfr_prec_t prec) {
  return K.cache().get<EmbeddingData>("embeddings:" + std::to_string(prec), [&] {
    EmbeddingData ed{complex_roots(K.polynomial(), K.r1(), prec), {}};
    const int n = K.degree();
    std::vector<std::vector<Real>> m;
    for (int j = 0; j < static_cast<int>(ed.roots.roots.size()); ++j) {
      const Complex& z = ed.roots.roots[j];
      std::vector<Real> re, im;
      Complex pw{Real(prec, 1), Real(prec)};
      for (int k = 0; k < n; ++k) {
        re.push_back(pw.re);
        im.push_back(pw.im);
        pw = pw * z;
      }
      m.push_back(re);
      if (j >= ed.roots.r1) m.push_back(im);
    }
    // Gauss-Jordan with partial pivoting on [m | I]
    std::vector<std::vector<Real>> inv(n, std::vector<Real>(n, Real(prec)));
    for (int i = 0; i < n; ++i) inv[i][i] = Real(prec, 1);
    for (int c = 0; c < n; ++c) {
      int piv = c;
      for (int r = c + 1; r < n; ++r)
        if (abs(m[piv][c]) < abs(m[r][c])) piv = r;
      std::swap(m[c], m[piv]);
      std::swap(inv[c], inv[piv]);
      Real d = m[c][c];
      for (int k = 0; k < n; ++k) {
        m[c][k] = m[c][k] / d;
        inv[c][k] = inv[c][k] / d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == c || m[r][c].sign() == 0) continue;
        Real t = m[r][c];
        for (int k = 0; k < n; ++k) {
          m[r][k] -= t * m[c][k];
          inv[r][k] -= t * inv[c][k];
        }
      }
    }
    ed.inverse = std::move(inv);
    return ed;
  });
}

std::optional<FieldElement> embedding_sqrt(const FieldElement& A, const mpz_class& D, mpfr_prec_t prec) {
  const NumberField& K = *A.field();
  const int n = K.degree();
  const EmbeddingData& ed = embedding_data(K, prec);
  const int places = ed.roots.r1 + ed.roots.r2;
  std::vector<Complex> s;
  for (int j = 0; j < places; ++j) s.push_back(sqrt(evaluate(A.coords(), ed.roots.roots[j])));
  Real quarter(prec, mpq_class(1, 4));
  Real dreal(prec, mpq_class(D));
  for (unsigned long mask = 0; mask < (1UL << (places - 1)); ++mask) {
    std::vector<Real> rhs;
    for (int j = 0; j < places; ++j) {
      bool neg = j > 0 && ((mask >> (j - 1)) & 1);
      Complex v = s[j];
      if (neg) v = Complex{-v.re, -v.im};
      rhs.push_back(v.re);
      if (j >= ed.roots.r1) rhs.push_back(v.im);
    }
    QVec coords(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Real acc(prec);
      for (int k = 0; k < n; ++k) acc += ed.inverse[i][k] * rhs[k];
      Real scaled = acc * dreal;
      mpz_class z = scaled.round();
      if (!(abs(scaled - Real(prec, mpq_class(z))) < quarter)) ok = false;
      coords[i] = mpq_class(z, D);
      coords[i].canonicalize();
    }
    if (!ok) continue;
    FieldElement r(A.field(), coords);
    if (r * r == A) return r;
  }
  return std::nullopt;
}

}  // namespace

bool passes_square_characters(const FieldElement& a) {
  const auto& cp = character_primes(*a.field());
  mpz_class den = a.denominator();
  for (auto [p, r] : cp.primes) {
    if (mpz_divisible_ui_p(den.get_mpz_t(), p)) continue;
    u64 v = fp_eval(fp_from(a.coords(), p), r, p);
    if (v == 0) continue;
    if (legendre(v, p) == -1) return false;
  }
  return true;
}

std::optional<FieldElement> is_square(const FieldElement& a) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "is_square of zero");
  const NumberField& K = *a.field();
  if (K.degree() == 1 || a.is_rational()) {
    mpq_class root;
    if (perfect_square(a.rational(), root)) return K.from_rational(root);
    if (K.degree() == 1) return std::nullopt;
  }
  mpq_class nroot;
  if (!perfect_square(a.norm(), nroot)) return std::nullopt;
  if (!passes_square_characters(a)) return std::nullopt;
  for (int i = 0; i < K.r1(); ++i)
    if (K.sign_at_real_root(a.coords(), i) < 0) return std::nullopt;

  auto [m, A] = integral_scale(a);
  mpz_class D = K.index_bound();
  // magnitude estimate for the root's coordinates
  mpz_class biggest = 1;
  for (auto& c : A.coords()) biggest = std::max(biggest, mpz_class(abs(c.get_num())));
  mpz_class fmax = 1;
  for (auto& c : K.polynomial()) fmax = std::max(fmax, mpz_class(abs(c)));
  long bits = static_cast<long>(bit_length(biggest)) / 2 + static_cast<long>(bit_length(D)) +
              K.degree() * static_cast<long>(bit_length(fmax) + 2) + 96;
  mpfr_prec_t prec = ((bits + 63) / 64) * 64;
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    if (auto r = embedding_sqrt(A, D, prec)) return canonical_sign(mpq_class(1, m) * *r);
  }
  return std::nullopt;
}

}  // namespace nfsos
