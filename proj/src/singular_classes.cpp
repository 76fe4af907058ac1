#include "nfsos/singular_classes.hpp"

#include <algorithm>
#include <cmath>

#include "nfsos/f2.hpp"
#include "nfsos/linalg.hpp"
#include "relations.hpp"

namespace nfsos {

namespace {

// Integral scaling with the square part of the content removed.
FieldElement reduce_representative(const FieldElement& a) {
  auto [m, b] = integral_scale(a);
  mpz_class g = 0;
  for (auto& c : b.coords()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  if (g <= 1) return b;
  mpz_class s = 1;
  for (auto& [p, e] : factor_integer(g))
    for (int i = 0; i < e / 2; ++i) s *= p;
  return mpq_class(1, s * s) * b;
}

SingularBasis compute_basis(const Field& K, const PlaceSet& S, const std::vector<FieldElement>& prefix) {
  auto lk = K->cache().lock();
  auto& ctx = detail::relation_context(K);
  for (const auto& P : S) {
    if (!P.is_finite()) raise(ErrorKind::Internal, "S must consist of finite places");
    ctx.include_prime(K, P.p);
  }
  for (const auto& x : prefix) ctx.vector_of_enlarging(K, x);
  ctx.complete(K);

  const auto& fb = ctx.factor_base();
  const std::size_t off = ctx.parity_offset();
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < fb.size(); ++j)
    if (!S.contains(fb[j])) outside.push_back(off + j);
  auto singular = [&](const BitVec& v) {
    for (auto i : outside)
      if (v.get(i)) return false;
    return true;
  };

  const auto& rel = ctx.independent();
  F2Matrix M(outside.size(), rel.size());
  for (std::size_t i = 0; i < outside.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j) M.set(i, j, rel[j].chars.get(outside[i]));
  auto ker = kernel_f2(M);
  const std::size_t dim = ker.size();

  SingularBasis out;
  out.field = K;
  out.S = S;
  F2Echelon chosen(ctx.width());
  auto accept = [&](const FieldElement& x, const BitVec& v) {
    if (chosen.rank() >= dim || chosen.in_span(v)) return false;
    chosen.insert(v);
    out.basis.push_back(x);
    return true;
  };
  for (const auto& x : prefix) {
    auto v = ctx.vector_of(K, x);
    if (!v || !singular(*v) || !accept(x, *v))
      raise(ErrorKind::Internal, "previous basis is not independent in the enlarged group");
  }

  std::vector<const detail::Relation*> pool;
  for (const auto& r : ctx.pool())
    if (singular(r.chars)) pool.push_back(&r);
  std::stable_sort(pool.begin(), pool.end(), [](auto* a, auto* b) { return a->size < b->size; });
  for (auto* r : pool) {
    if (chosen.rank() >= dim) break;
    accept(reduce_representative(FieldElement(K, r->coords)), r->chars);
  }
  for (const auto& x : ker) {
    if (chosen.rank() >= dim) break;
    BitVec v(ctx.width());
    FieldElement prod = K->one();
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (x.get(j)) {
        v ^= rel[j].chars;
        prod = prod * FieldElement(K, rel[j].coords);
      }
    accept(reduce_representative(prod), v);
  }
  if (chosen.rank() != dim) raise(ErrorKind::Internal, "could not assemble a basis of Sing{S}");

  for (const auto& x : out.basis) {
    auto v = *ctx.vector_of(K, x);
    std::string note;
    for (std::size_t j = 0; j < fb.size(); ++j)
      if (v.get(off + j)) note += (note.empty() ? "odd at " : ", ") + label(fb[j]);
    out.provenance.push_back(note.empty() ? "unit" : note);
  }
  return out;
}

}  // namespace

SingularBasis singular_basis(const Field& field, const PlaceSet& S) { return compute_basis(field, S, {}); }

SingularBasis extend_basis(const SingularBasis& B, const Place& q) {
  if (B.S.contains(q)) raise(ErrorKind::Internal, label(q) + " is already in S");
  PlaceSet S = B.S;
  S.add(q);
  return compute_basis(B.field, S, B.basis);
}

ClassGroup class_group_small(const Field& field) {
  auto lk = field->cache().lock();
  return field->cache().get<ClassGroup>("class_group", [&] {
    detail::relation_context(field);  // same scope checks
    ClassGroup cg;
    cg.minkowski_bound = detail::minkowski_bound(field);
    const u64 bound = static_cast<u64>(std::floor(cg.minkowski_bound));
    std::vector<Place> fb;
    std::set<u64> ps;
    for (u64 p = 2; p <= bound; p = next_prime(p))
      for (auto& P : decompose_prime(field, p))
        if (absolute_norm(P) <= bound) {
          fb.push_back(P);
          ps.insert(p);
        }
    cg.generators = fb;
    if (fb.empty()) {
      cg.order = 1;
      return cg;
    }
    const int n = field->degree();
    const std::size_t m = fb.size();
    ZMatrix rels;
    auto try_element = [&](const FieldElement& a) {
      if (a.is_zero()) return;
      mpz_class N = abs(mpz_class(a.norm().get_num()));
      std::set<u64> hit;
      for (u64 p : ps)
        if (mpz_divisible_ui_p(N.get_mpz_t(), p)) {
          hit.insert(p);
          while (mpz_divisible_ui_p(N.get_mpz_t(), p)) mpz_divexact_ui(N.get_mpz_t(), N.get_mpz_t(), p);
        }
      if (N != 1) return;
      ZPoly row(m, 0);
      bool any = false;
      for (u64 p : hit)
        for (auto& P : decompose_prime(field, p)) {
          int v = valuation(a, P);
          if (v == 0) continue;
          auto it = std::find(fb.begin(), fb.end(), P);
          if (it == fb.end()) return;
          row[it - fb.begin()] = v;
          any = true;
        }
      if (any) rels.push_back(row);
    };
    for (u64 p : ps) try_element(field->from_rational(mpq_class(static_cast<unsigned long>(p))));

    // Relations keep coming until the lattice determinant has been stable for
    // several shells after reaching full rank.
    mpz_class last = 0;
    int stable = 0;
    const int max_radius = n <= 2 ? 40 : (n == 3 ? 10 : 5);
    for (int r = 1; r <= max_radius; ++r) {
      detail::for_each_shell_vector(n, r, [&](const std::vector<long>& c) {
        QVec q(n);
        for (int i = 0; i < n; ++i) q[i] = c[i];
        try_element(FieldElement(field, q));
      });
      for (auto& P : fb) {
        ZMatrix B = lll(detail::ideal_basis(field, P), detail::t2_gram(field));
        detail::for_each_shell_vector(n, std::min(r, 2), [&](const std::vector<long>& c) {
          QVec q(n, 0);
          for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) q[k] += c[i] * B[i][k];
          try_element(FieldElement(field, q));
        });
      }
      rels = hermite_form(rels);
      if (rels.size() == m) {
        mpz_class h = determinant(rels);
        h = abs(h);
        if (h == last) {
          if (++stable >= 3) break;
        } else {
          last = h;
          stable = 0;
        }
      }
    }
    if (rels.size() != m) raise(ErrorKind::SearchBoundExceeded, "class group relations do not reach full rank");
    cg.order = last;
    for (auto& d : smith_invariants(rels))
      if (d > 1) cg.invariants.push_back(d);
    return cg;
  });
}

}  // namespace nfsos
