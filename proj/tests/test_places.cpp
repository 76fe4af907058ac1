#include <catch_amalgamated.hpp>

#include "nfsos/local_symbols.hpp"
#include "nfsos/places.hpp"
#include "oracles.hpp"

using namespace nfsos;
using oracle::el;
using oracle::field;

TEST_CASE("real_places examples", "[places]") {
  CHECK(real_places(field("x^2+1")).empty());
  CHECK(real_places(field("x^2-2")).size() == 2);
  CHECK(real_places(field("x^3-2")).size() == 1);
  CHECK(real_places(field("x^4+1")).empty());
  CHECK(real_places(field("x-5")).size() == 1);
}

TEST_CASE("real intervals are disjoint and isolate one root each", "[places]") {
  for (const char* f : {"x^2-2", "x^2-x-1", "x^3-x-1", "x^4-10*x^2+1", "x^3-3*x+1"}) {
    auto K = field(f);
    auto rp = real_places(K);
    CHECK(static_cast<int>(rp.size()) + 2 * K->r2() == K->degree());
    for (std::size_t i = 0; i + 1 < rp.size(); ++i) CHECK(rp[i].hi < rp[i + 1].lo);
    for (const auto& P : rp) {
      // f changes sign across the interval
      auto val = [&](const mpq_class& x) {
        mpq_class v = 0;
        for (std::size_t i = K->polynomial().size(); i-- > 0;) v = v * x + K->polynomial()[i];
        return v;
      };
      CHECK(sgn(val(P.lo)) * sgn(val(P.hi)) < 0);
    }
  }
}

TEST_CASE("decompose_prime examples", "[places]") {
  auto K = field("x^2+1");
  auto p5 = decompose_prime(K, 5);
  REQUIRE(p5.size() == 2);
  for (auto& P : p5) CHECK((P.e == 1 && P.f == 1));
  auto p2 = decompose_prime(K, 2);
  REQUIRE(p2.size() == 1);
  CHECK((p2[0].e == 2 && p2[0].f == 1 && p2[0].dyadic()));
  auto p3 = decompose_prime(K, 3);
  REQUIRE(p3.size() == 1);
  CHECK((p3[0].e == 1 && p3[0].f == 2));
}

TEST_CASE("non-maximal orders are rejected", "[places]") {
  auto K = field("x^2+3");  // Z[√−3] has index 2
  try {
    decompose_prime(K, 2);
    FAIL("expected NonMaximalOrderAtP");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonMaximalOrderAtP);
  }
  CHECK(decompose_prime(K, 7).size() == 2);
}

TEST_CASE("sum of e*f is the degree", "[places][property]") {
  for (const char* f : {"x", "x^2+1", "x^2-2", "x^2+2", "x^2-x-1", "x^2+x+2", "x^3-2", "x^3-x-1", "x^4+1"}) {
    auto K = field(f);
    for (u64 p = 2; p <= 100; p = next_prime(p)) {
      if (!K->maximal_at(p)) continue;
      int s = 0;
      for (auto& P : decompose_prime(K, p)) {
        s += P.e * P.f;
        CHECK(P.dyadic() == (p == 2));
        CHECK(valuation(uniformizer(K, P), P) == 1);
      }
      INFO(f << " p = " << p);
      CHECK(s == K->degree());
    }
  }
}

TEST_CASE("valuation examples", "[places]") {
  auto Q = field("x");
  CHECK(valuation(el(Q, "12"), decompose_prime(Q, 2)[0]) == 2);
  CHECK(valuation(el(Q, "1/5"), decompose_prime(Q, 5)[0]) == -1);
  auto Ki = field("x^2+1");
  auto D = decompose_prime(Ki, 2)[0];
  CHECK(valuation(el(Ki, "1+x"), D) == 1);
  CHECK(valuation(el(Ki, "2"), D) == 2);
  try {
    valuation(Ki->zero(), D);
    FAIL("expected ZeroInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInput);
  }
}

TEST_CASE("split primes separate conjugates", "[places]") {
  auto K = field("x^2+1");
  auto p5 = decompose_prime(K, 5);
  auto a = el(K, "2+x");  // norm 5
  CHECK(valuation(a, p5[0]) + valuation(a, p5[1]) == 1);
  CHECK(valuation(a * a * el(K, "2-x"), p5[0]) + valuation(a * a * el(K, "2-x"), p5[1]) == 3);
}

TEST_CASE("valuation axioms on random pairs", "[places][property]") {
  std::mt19937_64 rng(21);
  for (const char* f : {"x^2+1", "x^2-2", "x^2+x+2", "x^3-2"}) {
    auto K = field(f);
    std::vector<Place> primes;
    for (u64 p : {2, 3, 5, 7, 11})
      for (auto& P : decompose_prime(K, p)) primes.push_back(P);
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_element(K, rng, 60, 20), b = oracle::random_element(K, rng, 60, 20);
      const auto& P = primes[i % primes.size()];
      CHECK(valuation(a * b, P) == valuation(a, P) + valuation(b, P));
      if (!(a + b).is_zero()) CHECK(valuation(a + b, P) >= std::min(valuation(a, P), valuation(b, P)));
    }
  }
}

TEST_CASE("odd_support examples", "[places]") {
  auto Q = field("x");
  auto s = odd_support(el(Q, "12"));
  REQUIRE(s.size() == 1);
  CHECK(s[0].p == 3);
  CHECK(odd_support(el(Q, "4")).empty());
  auto Ki = field("x^2+1");
  s = odd_support(el(Ki, "1+x"));
  REQUIRE(s.size() == 1);
  CHECK(s[0].p == 2);
}

TEST_CASE("dyadic_places examples", "[places]") {
  auto d = dyadic_places(field("x"));
  REQUIRE(d.size() == 1);
  CHECK((d[0].e == 1 && d[0].f == 1));
  d = dyadic_places(field("x^2+1"));
  REQUIRE(d.size() == 1);
  CHECK(d[0].e == 2);
  d = dyadic_places(field("x^2+x+2"));
  CHECK(d.size() == 2);
}

TEST_CASE("PlaceSet keeps insertion order without duplicates", "[places]") {
  auto K = field("x^2+1");
  PlaceSet S;
  auto p5 = decompose_prime(K, 5);
  CHECK(S.add(p5[1]));
  CHECK(S.add(p5[0]));
  CHECK_FALSE(S.add(p5[1]));
  CHECK(S.size() == 2);
  CHECK(S.index_of(p5[1]) == 0);
  CHECK(S.index_of(decompose_prime(K, 2)[0]) == -1);
}

TEST_CASE("signs agree with floating evaluation", "[places][property]") {
  std::mt19937_64 rng(22);
  for (const char* f : {"x^2-2", "x^2-x-1", "x^3-x-1", "x^3-3*x+1"}) {
    auto K = field(f);
    auto rp = real_places(K);
    for (int i = 0; i < 100; ++i) {
      auto a = oracle::random_element(K, rng, 50, 10);
      for (const auto& P : rp) {
        double v = oracle::real_value(a, P.lo, P.hi);
        if (std::fabs(v) < 1e-6) continue;
        CHECK(sign_at(a, P) == (v > 0 ? 1 : -1));
        CHECK(sign_at(a, P) == sign_at(a, P));
      }
    }
  }
}
