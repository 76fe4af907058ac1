#include "nfsos/decomposition.hpp"

#include "nfsos/f2.hpp"
#include "nfsos/local_symbols.hpp"
#include "nfsos/norm_equations.hpp"

namespace nfsos {

namespace {

std::string infinity_or(int v) { return v == kInfinity ? "infinity" : std::to_string(v); }

void require_length(const LengthReport& r, int want, const char* who) {
  if (r.length != want)
    raise(ErrorKind::LengthMismatch,
          std::string(who) + " needs length " + std::to_string(want) + ", element has length " + infinity_or(r.length));
}

Decomposition finish(const FieldElement& a, std::vector<FieldElement> summands, std::vector<LoopTrace> traces = {}) {
  for (auto& c : summands)
    if (c.is_zero()) raise(ErrorKind::Internal, "decomposition produced a zero summand");
  if (!verify_sum(a, summands)) raise(ErrorKind::Internal, "decomposition failed verification");
  return Decomposition{a, std::move(summands), true, std::move(traces)};
}

std::string form_label(const DiagonalForm& q) {
  std::string s = "<";
  for (std::size_t i = 0; i < q.dimension(); ++i) s += (i ? ", " : "") + q.coefficients[i].to_string();
  return s + ">";
}

// Search loop for length 3 (four == false) and length 4 (four == true). Returns b and
// records the adjoined primes and the isotropy certification in `trace`.
FieldElement find_b(const FieldElement& a, PlaceSet S, const std::vector<Place>& D, const std::vector<FieldElement>& h,
                    bool four, const PrimeSearchStrategy& strategy, LoopTrace& trace) {
  const Field& K = a.field();
  const FieldElement minus_one = -K->one();
  const auto reals = real_places(K);
  SingularBasis B = singular_basis(K, S);
  PrimeSearch search(K, strategy);
  for (;;) {
    const auto& kappa = B.basis;
    const std::size_t k = kappa.size();
    std::vector<BitVec> rows;
    BitVec rhs;
    auto add_row = [&](auto&& bit, bool target) {
      BitVec r(k);
      for (std::size_t j = 0; j < k; ++j) r.set(j, bit(kappa[j]));
      rows.push_back(r);
      rhs.push_back(target);
    };
    for (auto& r : reals) add_row([&](const FieldElement& x) { return sign_at(x, r) < 0; }, true);
    if (!four) {
      for (auto& P : S)
        add_row([&](const FieldElement& x) { return hilbert_symbol(minus_one, x, P) == -1; },
                hilbert_symbol(minus_one, minus_one, P) == -1);
    } else {
      for (std::size_t i = 0; i < D.size(); ++i)
        add_row([&](const FieldElement& x) { return hilbert_symbol(h[i], x, D[i]) == -1; }, true);
    }
    for (auto& P : S) add_row([&](const FieldElement& x) { return hilbert_symbol(a, x, P) == -1; }, false);

    if (auto xi = solve_f2(F2Matrix::from_rows(rows, k), rhs)) {
      FieldElement b = K->one();
      for (std::size_t j = 0; j < k; ++j)
        if (xi->get(j)) b = b * kappa[j];
      trace.basis_dimension = k;

      for (auto& r : reals)
        if (sign_at(b, r) >= 0) raise(ErrorKind::Internal, "b is not totally negative");
      DiagonalForm q1 = four ? DiagonalForm{K->one(), K->one(), K->one(), b} : DiagonalForm{K->one(), K->one(), b};
      DiagonalForm q2{K->one(), -a, -b};
      std::vector<Place> places = reals;
      for (auto& P : S) places.push_back(P);
      for (auto& P : places)
        for (const DiagonalForm* q : {&q1, &q2}) {
          bool iso = local_isotropic(*q, P);
          trace.checks.push_back({form_label(*q), label(P), iso});
          if (!iso) raise(ErrorKind::Internal, form_label(*q) + " is anisotropic at " + label(P));
        }
      return b;
    }
    Place q = search.next(S);
    trace.candidates.push_back(label(q));
    B = extend_basis(B, q);
    S = B.S;
  }
}

PlaceSet initial_S(const FieldElement& a) {
  PlaceSet S = dyadic_places(a.field());
  for (auto& P : odd_support(a)) S.add(P);
  return S;
}

}  // namespace

bool verify_sum(const FieldElement& a, const std::vector<FieldElement>& summands) {
  if (summands.empty()) return false;
  FieldElement s = a.field()->zero();
  for (auto& c : summands) s = s + c * c;
  return s == a;
}

int level(const Field& field) {
  auto lk = field->cache().lock();
  return field->cache().get<int>("level", [&] {
    FieldElement m1 = -field->one();
    if (is_square(m1)) return 1;
    if (field->r1() > 0) return kInfinity;
    for (auto& P : dyadic_places(field))
      if (hilbert_symbol(m1, m1, P) == -1) return 4;
    return 2;
  });
}

std::vector<Place> odd_dyadic_places(const Field& field) {
  std::vector<Place> out;
  for (auto& P : dyadic_places(field))
    if (P.e % 2 == 1 && P.f % 2 == 1) out.push_back(P);
  return out;
}

int pythagoras_number(const Field& field) {
  switch (level(field)) {
    case 1:
      return 2;
    case 2:
      return 3;
    case 4:
      return 4;
    default:
      return odd_dyadic_places(field).empty() ? 3 : 4;
  }
}

LengthReport compute_length(const FieldElement& a) {
  if (a.is_zero()) raise(ErrorKind::ZeroInput, "length of zero");
  const Field& K = a.field();
  LengthReport r;
  r.level = level(K);
  for (auto& P : real_places(K))
    if (sign_at(a, P) < 0) {
      r.totally_positive = false;
      r.negative_place = P;
      r.length = kInfinity;
      return r;
    }
  if (is_square(a)) {
    r.length = 1;
    return r;
  }
  if (r.level == 1 || norm_locally_solvable(QuadraticExtension(K, -K->one()), a)) {
    r.length = 2;
    return r;
  }
  for (auto& d : odd_dyadic_places(K))
    if (local_square(-a, d)) r.obstruction_places.push_back(d);
  r.length = r.obstruction_places.empty() ? 3 : 4;
  return r;
}

PrimeSearch::PrimeSearch(Field field, PrimeSearchStrategy strategy)
    : field_(std::move(field)), strategy_(strategy), rng_(strategy.seed.value_or(0)) {
  if (strategy_.mode == PrimeSearchStrategy::Mode::random && !strategy_.seed)
    raise(ErrorKind::Internal, "random prime search needs a seed");
}

Place PrimeSearch::next(const PlaceSet& S) {
  if (strategy_.mode == PrimeSearchStrategy::Mode::deterministic) {
    for (;;) {
      while (pending_.empty()) {
        p_ = next_prime(p_);
        if (p_ > strategy_.ceiling)
          raise(ErrorKind::PrimeSearchExhausted, "no suitable prime up to " + std::to_string(strategy_.ceiling));
        if (!field_->maximal_at(p_)) continue;
        auto ps = decompose_prime(field_, p_);
        pending_.assign(ps.rbegin(), ps.rend());
      }
      Place q = pending_.back();
      pending_.pop_back();
      if (S.contains(q)) continue;
      ++tried_;
      return q;
    }
  }
  if (strategy_.ceiling < 3) raise(ErrorKind::PrimeSearchExhausted, "prime ceiling below 3");
  std::uniform_int_distribution<std::uint64_t> pick(3, strategy_.ceiling);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::uint64_t p = next_prime(pick(rng_) - 1);
    if (p > strategy_.ceiling || !field_->maximal_at(p)) continue;
    auto ps = decompose_prime(field_, p);
    std::uniform_int_distribution<std::size_t> which(0, ps.size() - 1);
    const Place& q = ps[which(rng_)];
    if (S.contains(q)) continue;
    ++tried_;
    return q;
  }
  raise(ErrorKind::PrimeSearchExhausted, "random prime search found no new prime below " +
                                             std::to_string(strategy_.ceiling));
}

Place next_candidate_prime(PrimeSearch& state, const PlaceSet& S) { return state.next(S); }

DyadicObstructionData find_dyadic_pair(const FieldElement& a, const Place& d, std::uint64_t seed) {
  const Field& K = a.field();
  const int n = K->degree();
  std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc909ULL ^ std::hash<std::string>{}(place_key(d)));
  auto draw = [&](long height) {
    std::uniform_int_distribution<long> c(-height, height);
    QVec v(n);
    for (int i = 0; i < n; ++i) v[i] = c(rng);
    return FieldElement(K, v);
  };
  for (long height = 2; height <= 64; height *= 2) {
    for (int t = 0; t < 256; ++t) {
      FieldElement g = draw(height);
      if (g.is_zero() || hilbert_symbol(a, g, d) != 1 || local_square(g, d)) continue;
      for (int s = 0; s < 256; ++s) {
        FieldElement h = draw(height);
        if (h.is_zero()) continue;
        if (hilbert_symbol(g, h, d) == -1) return {d, g, h};
      }
    }
  }
  raise(ErrorKind::SearchBoundExceeded, "no dyadic pair found at " + label(d));
}

Decomposition decompose_len2(const FieldElement& a, const PrimeSearchStrategy& strategy) {
  const Field& K = a.field();
  require_length(compute_length(a), 2, "decompose_len2");
  const FieldElement half = K->from_rational(mpq_class(1, 2));
  if (auto i = is_square(-K->one())) {
    return finish(a, {(a + K->one()) * half, (a - K->one()) * half * *i});
  }
  NormSolution s = solve_norm(QuadraticExtension(K, -K->one()), a, {strategy.height_ceiling});
  return finish(a, {s.d_first, s.d_second});
}

Decomposition decompose_len3_level2(const FieldElement& a, const PrimeSearchStrategy& strategy) {
  const Field& K = a.field();
  if (level(K) != 2) raise(ErrorKind::LevelMismatch, "decompose_len3_level2 needs level 2");
  require_length(compute_length(a), 3, "decompose_len3_level2");
  NormSolution s = solve_norm(QuadraticExtension(K, -K->one()), -K->one(), {strategy.height_ceiling});
  const FieldElement half = K->from_rational(mpq_class(1, 2));
  FieldElement m = (a - K->one()) * half;
  return finish(a, {(a + K->one()) * half, m * s.d_first, m * s.d_second});
}

Decomposition decompose_len3_general(const FieldElement& a, const PrimeSearchStrategy& strategy) {
  const Field& K = a.field();
  int s = level(K);
  if (s == 1 || s == 2) raise(ErrorKind::LevelMismatch, "decompose_len3_general needs level 4 or infinity");
  require_length(compute_length(a), 3, "decompose_len3_general");
  LoopTrace trace;
  trace.algorithm = "len3";
  FieldElement b = find_b(a, initial_S(a), {}, {}, false, strategy, trace);
  NormSolution l = solve_norm(QuadraticExtension(K, -K->one()), -b, {strategy.height_ceiling});
  NormSolution m = solve_norm_nonzero(QuadraticExtension(K, a), b, {strategy.height_ceiling});
  FieldElement inv = m.d_second.inverse();
  return finish(a, {l.d_first * inv, l.d_second * inv, m.d_first * inv}, {trace});
}

Decomposition decompose_len4(const FieldElement& a, const PrimeSearchStrategy& strategy) {
  const Field& K = a.field();
  LengthReport rep = compute_length(a);
  require_length(rep, 4, "decompose_len4");
  std::vector<Place> D = odd_dyadic_places(K);
  std::vector<FieldElement> h;
  for (auto& d : D) {
    auto pair = find_dyadic_pair(a, d, strategy.seed.value_or(0));
    h.push_back(pair.h);
  }
  LoopTrace trace;
  trace.algorithm = "len4";
  FieldElement b = find_b(a, initial_S(a), D, h, true, strategy, trace);
  FieldElement minus_b = -b;
  if (compute_length(minus_b).length != 3) raise(ErrorKind::Internal, "-b does not have length 3");
  Decomposition inner = decompose_len3_general(minus_b, strategy);
  NormSolution m = solve_norm_nonzero(QuadraticExtension(K, a), b, {strategy.height_ceiling});
  FieldElement inv = m.d_second.inverse();
  std::vector<FieldElement> out;
  for (auto& c : inner.summands) out.push_back(c * inv);
  out.push_back(m.d_first * inv);
  std::vector<LoopTrace> traces{trace};
  for (auto& t : inner.traces) traces.push_back(t);
  return finish(a, out, traces);
}

Decomposition decompose(const FieldElement& a, const PrimeSearchStrategy& strategy) {
  LengthReport rep = compute_length(a);
  Decomposition d;
  switch (rep.length) {
    case kInfinity:
      raise(ErrorKind::NotASumOfSquares,
            a.to_string() + " is not totally positive: negative at " + label(*rep.negative_place), rep.negative_place);
    case 1:
      d = finish(a, {*is_square(a)});
      break;
    case 2:
      d = decompose_len2(a, strategy);
      break;
    case 3:
      d = rep.level == 2 ? decompose_len3_level2(a, strategy) : decompose_len3_general(a, strategy);
      break;
    default:
      d = decompose_len4(a, strategy);
  }
  if (static_cast<int>(d.summands.size()) != rep.length) raise(ErrorKind::Internal, "summand count differs from length");
  return d;
}

}  // namespace nfsos
