#include <catch_amalgamated.hpp>

#include "nfsos/decomposition.hpp"
#include "nfsos/local_symbols.hpp"
#include "oracles.hpp"

using namespace nfsos;
using oracle::el;
using oracle::field;

namespace {

void check_decomposition(const FieldElement& a, const Decomposition& d, int expected) {
  INFO(a.field()->polynomial_string() << ": " << a.to_string());
  CHECK(d.verified);
  CHECK(verify_sum(a, d.summands));
  CHECK(static_cast<int>(d.summands.size()) == expected);
  for (auto& c : d.summands) CHECK_FALSE(c.is_zero());
  for (auto& t : d.traces)
    for (auto& c : t.checks) CHECK(c.isotropic);
}

PrimeSearchStrategy seeded(std::uint64_t seed) {
  PrimeSearchStrategy s;
  s.mode = PrimeSearchStrategy::Mode::random;
  s.seed = seed;
  return s;
}

}  // namespace

TEST_CASE("levels and Pythagoras numbers", "[decomposition]") {
  CHECK(level(field("x^2+1")) == 1);
  CHECK(level(field("x^2+2")) == 2);
  CHECK(level(field("x^2+x+2")) == 4);  // Q(√−7): −1 is not a sum of 3 squares 2-adically
  CHECK(level(field("x^2+x+1")) == 2);
  CHECK(level(field("x")) == kInfinity);
  CHECK(level(field("x^2-2")) == kInfinity);
  CHECK(level(field("x^4+1")) == 1);
  CHECK(pythagoras_number(field("x")) == 4);
  CHECK(pythagoras_number(field("x^2+1")) == 2);
  CHECK(pythagoras_number(field("x^2+2")) == 3);
  CHECK(pythagoras_number(field("x^2+x+2")) == 4);
  CHECK(pythagoras_number(field("x^2-2")) == 3);
}

TEST_CASE("compute_length examples", "[decomposition]") {
  auto Q = field("x");
  CHECK(compute_length(el(Q, "7")).length == 4);
  auto r = compute_length(el(Q, "-1"));
  CHECK(r.length == kInfinity);
  CHECK_FALSE(r.totally_positive);
  REQUIRE(r.negative_place);
  CHECK(r.negative_place->is_real());
  CHECK(compute_length(el(Q, "3")).length == 3);
  CHECK(compute_length(el(Q, "9/4")).length == 1);
  CHECK(compute_length(el(Q, "13")).length == 2);
  CHECK(compute_length(el(Q, "28")).length == 4);
  CHECK(compute_length(el(Q, "7/4")).length == 4);
  CHECK(compute_length(el(Q, "7/2")).length == 3);
  auto Ki = field("x^2+1");
  CHECK(compute_length(el(Ki, "7")).length == 2);
  CHECK(compute_length(el(Ki, "-1")).length == 1);
  try {
    compute_length(Q->zero());
    FAIL("expected ZeroInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInput);
  }
}

TEST_CASE("length over Q follows the classical criteria", "[decomposition][property]") {
  auto Q = field("x");
  for (long n = 1; n <= 200; ++n) {
    INFO(n);
    CHECK(compute_length(el(Q, std::to_string(n))).length == oracle::classical_length(n));
  }
  // rational scaling by squares does not change the length
  for (long n : {3L, 6L, 7L, 15L, 21L})
    CHECK(compute_length(el(Q, std::to_string(n) + "/25")).length == oracle::classical_length(n));
}

TEST_CASE("decompose examples over Q", "[decomposition]") {
  auto Q = field("x");
  auto d = decompose(el(Q, "9/4"));
  check_decomposition(el(Q, "9/4"), d, 1);
  CHECK(d.summands[0] == el(Q, "3/2"));
  check_decomposition(el(Q, "2"), decompose(el(Q, "2")), 2);
  check_decomposition(el(Q, "13"), decompose_len2(el(Q, "13")), 2);
  check_decomposition(el(Q, "3"), decompose_len3_general(el(Q, "3")), 3);
  check_decomposition(el(Q, "6"), decompose_len3_general(el(Q, "6")), 3);
  check_decomposition(el(Q, "7"), decompose_len4(el(Q, "7")), 4);
  check_decomposition(el(Q, "15"), decompose_len4(el(Q, "15")), 4);
  check_decomposition(el(Q, "7"), decompose(el(Q, "7")), 4);
}

TEST_CASE("decompose_len2 examples", "[decomposition]") {
  auto Ki = field("x^2+1");
  auto d = decompose_len2(el(Ki, "5"));
  check_decomposition(el(Ki, "5"), d, 2);
  CHECK(d.summands[0] == el(Ki, "3"));
  CHECK(d.summands[1] == el(Ki, "2*x"));
  auto K = field("x^2+2");
  check_decomposition(el(K, "-1"), decompose_len2(el(K, "-1")), 2);
  check_decomposition(el(K, "-1"), decompose(el(K, "-1")), 2);
}

TEST_CASE("decompose_len3_level2", "[decomposition]") {
  auto K = field("x^2+2");
  std::mt19937_64 rng(61);
  int seen = 0;
  for (int i = 0; i < 60 && seen < 5; ++i) {
    auto a = oracle::random_element(K, rng, 30, 5);
    if (compute_length(a).length != 3) continue;
    ++seen;
    check_decomposition(a, decompose_len3_level2(a), 3);
  }
  CHECK(seen > 0);
  auto a = el(K, "-x");
  int l = compute_length(a).length;
  check_decomposition(a, decompose(a), l);
}

TEST_CASE("sums of squares are found in formally real fields", "[decomposition]") {
  for (const char* f : {"x^2-2", "x^2-x-1", "x^3-x-1", "x^3-2"}) {
    auto K = field(f);
    for (const char* s : {"3", "7", "6", "5+x^2", "1+x^2"}) {
      auto a = el(K, s);
      auto r = compute_length(a);
      if (r.length == kInfinity) continue;
      check_decomposition(a, decompose(a), r.length);
    }
  }
}

TEST_CASE("length four in fields with odd dyadic places", "[decomposition]") {
  auto K = field("x^2+x+2");
  REQUIRE(odd_dyadic_places(K).size() == 2);
  auto a = el(K, "-1");
  auto r = compute_length(a);
  CHECK(r.length == 4);
  CHECK_FALSE(r.obstruction_places.empty());
  auto d = decompose(a);
  check_decomposition(a, d, 4);
  bool len4 = false;
  for (auto& t : d.traces) len4 |= t.algorithm == "len4";
  CHECK(len4);

  auto C = field("x^3-2");
  a = el(C, "7");
  CHECK(compute_length(a).length == 4);
  check_decomposition(a, decompose(a), 4);
}

TEST_CASE("negative elements are rejected with a real witness", "[decomposition]") {
  auto K = field("x^2-2");
  auto a = el(K, "1-x");
  try {
    decompose(a);
    FAIL("expected NotASumOfSquares");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotASumOfSquares);
    REQUIRE(e.witness());
    CHECK(e.witness()->is_real());
    CHECK(sign_at(a, *e.witness()) == -1);
  }
}

TEST_CASE("next_candidate_prime", "[decomposition]") {
  auto Q = field("x");
  PlaceSet S;
  S.add(decompose_prime(Q, 2)[0]);
  S.add(decompose_prime(Q, 3)[0]);
  PrimeSearch ps(Q, {});
  CHECK(next_candidate_prime(ps, S).p == 5);
  CHECK(next_candidate_prime(ps, S).p == 7);
  CHECK(ps.tried() == 2);

  auto Ki = field("x^2+1");
  PlaceSet D = dyadic_places(Ki);
  PrimeSearch pi(Ki, {});
  auto q = next_candidate_prime(pi, D);
  CHECK(q.p == 3);
  CHECK(q.f == 2);

  PrimeSearch r1(Ki, seeded(99)), r2(Ki, seeded(99));
  for (int i = 0; i < 10; ++i) CHECK(next_candidate_prime(r1, D) == next_candidate_prime(r2, D));

  PrimeSearchStrategy no_seed;
  no_seed.mode = PrimeSearchStrategy::Mode::random;
  try {
    PrimeSearch bad(Ki, no_seed);
    bad.next(D);
    FAIL("expected an error without a seed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Internal);
  }

  PrimeSearchStrategy tight;
  tight.ceiling = 7;
  PrimeSearch small(Q, tight);
  small.next(S);
  small.next(S);
  try {
    small.next(S);
    FAIL("expected PrimeSearchExhausted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrimeSearchExhausted);
  }
}

TEST_CASE("random prime search also decomposes", "[decomposition]") {
  auto Q = field("x");
  for (long n : {3L, 7L, 23L, 111L}) {
    auto a = el(Q, std::to_string(n));
    check_decomposition(a, decompose(a, seeded(static_cast<std::uint64_t>(n))), oracle::classical_length(n));
  }
}

TEST_CASE("find_dyadic_pair", "[decomposition]") {
  auto Q = field("x");
  auto d = decompose_prime(Q, 2)[0];
  for (const char* s : {"7", "15", "-1", "23"}) {
    auto a = el(Q, s);
    auto pair = find_dyadic_pair(a, d, 5);
    CHECK(hilbert_symbol(a, pair.g, d) == 1);
    CHECK(hilbert_symbol(pair.g, pair.h, d) == -1);
    CHECK(pair.place == d);
  }
  auto K = field("x^2+x+2");
  for (auto& P : odd_dyadic_places(K)) {
    auto a = el(K, "-1");
    auto pair = find_dyadic_pair(a, P, 1);
    CHECK(hilbert_symbol(a, pair.g, P) == 1);
    CHECK(hilbert_symbol(pair.g, pair.h, P) == -1);
  }
}

TEST_CASE("loop traces certify isotropy", "[decomposition][property]") {
  auto Q = field("x");
  for (long n : {3L, 6L, 7L, 11L, 15L, 19L, 22L, 39L, 47L, 71L}) {
    auto d = decompose(el(Q, std::to_string(n)));
    REQUIRE_FALSE(d.traces.empty());
    for (auto& t : d.traces) {
      CHECK(t.candidates.size() <= 25);
      CHECK_FALSE(t.checks.empty());
      for (auto& c : t.checks) CHECK(c.isotropic);
    }
  }
}

TEST_CASE("soundness on random elements", "[decomposition][property]") {
  std::mt19937_64 rng(62);
  for (const char* f : {"x^2+1", "x^2+2", "x^2+x+2", "x^2-2", "x^2-x-1", "x^3-2"}) {
    auto K = field(f);
    for (int i = 0; i < 12; ++i) {
      auto a = oracle::random_element(K, rng, 25, 6);
      auto r = compute_length(a);
      if (r.length == kInfinity) {
        CHECK_FALSE(r.totally_positive);
        continue;
      }
      CHECK(r.length <= pythagoras_number(K));
      check_decomposition(a, decompose(a), r.length);
    }
  }
}
