#include <catch_amalgamated.hpp>

#include "nfsos/local_symbols.hpp"
#include "oracles.hpp"

using namespace nfsos;
using oracle::el;
using oracle::field;

namespace {

Place prime_of(const Field& K, u64 p, std::size_t i = 0) { return decompose_prime(K, p).at(i); }

// All places relevant to the pair (a, b): odd support, dyadic, real.
std::vector<Place> relevant_places(const FieldElement& a, const FieldElement& b) {
  PlaceSet S = dyadic_places(a.field());
  for (auto& P : odd_support(a)) S.add(P);
  for (auto& P : odd_support(b)) S.add(P);
  auto out = S.items();
  for (auto& r : real_places(a.field())) out.push_back(r);
  return out;
}

}  // namespace

TEST_CASE("sign_at examples", "[local]") {
  auto K = field("x^2-2");
  auto rp = real_places(K);
  REQUIRE(rp.size() == 2);
  CHECK(sign_at(el(K, "x"), rp[0]) == -1);
  CHECK(sign_at(el(K, "x"), rp[1]) == 1);
  CHECK(sign_at(el(K, "3+2*x"), rp[0]) == 1);
  CHECK(sign_at(el(K, "3+2*x"), rp[1]) == 1);
  // 577 - 408√2 ≈ 0.0009 and 1393 - 985√2 ≈ -0.0004
  CHECK(sign_at(el(K, "577-408*x"), rp[1]) == 1);
  CHECK(sign_at(el(K, "1393-985*x"), rp[1]) == -1);
  CHECK(sign_at(el(K, "1393-985*x"), rp[0]) == 1);
}

TEST_CASE("local_square examples", "[local]") {
  auto Q = field("x");
  auto two = prime_of(Q, 2);
  CHECK_FALSE(local_square(el(Q, "2"), two));
  CHECK(local_square(el(Q, "17"), two));
  CHECK_FALSE(local_square(el(Q, "5"), two));
  CHECK(local_square(el(Q, "-7"), two));
  CHECK(local_square(el(Q, "2"), prime_of(Q, 7)));
  CHECK_FALSE(local_square(el(Q, "3"), prime_of(Q, 7)));
  CHECK(local_square(el(Q, "9/49"), prime_of(Q, 7)));

  auto Ki = field("x^2+1");
  CHECK(local_square(el(Ki, "-1"), prime_of(Ki, 2)));
  CHECK_FALSE(local_square(el(Ki, "1+x"), prime_of(Ki, 2)));
}

TEST_CASE("local squares agree with global squares", "[local][property]") {
  std::mt19937_64 rng(31);
  for (const char* f : {"x^2+1", "x^2-2", "x^2+x+2", "x^3-2"}) {
    auto K = field(f);
    for (int i = 0; i < 30; ++i) {
      auto a = oracle::random_element(K, rng, 30, 5);
      for (u64 p : {2, 3, 5, 7})
        for (auto& P : decompose_prime(K, p)) CHECK(local_square(a * a, P));
    }
  }
}

TEST_CASE("hilbert_symbol examples", "[local]") {
  auto Q = field("x");
  auto two = prime_of(Q, 2);
  CHECK(hilbert_symbol(el(Q, "-1"), el(Q, "-1"), two) == -1);
  CHECK(hilbert_symbol(el(Q, "2"), el(Q, "5"), prime_of(Q, 5)) == -1);
  std::mt19937_64 rng(32);
  for (const char* f : {"x", "x^2+1", "x^2+x+2", "x^3-2"}) {
    auto K = field(f);
    for (int i = 0; i < 20; ++i) {
      auto a = oracle::random_element(K, rng, 20, 5), b = oracle::random_element(K, rng, 20, 5);
      for (auto& P : decompose_prime(K, 2)) CHECK(hilbert_symbol(a, b * b, P) == 1);
      for (auto& P : decompose_prime(K, 3)) CHECK(hilbert_symbol(a, b * b, P) == 1);
    }
  }
}

TEST_CASE("hilbert symbols over Q match the closed formulas", "[local][property]") {
  auto Q = field("x");
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> N(-300, 300);
  for (int i = 0; i < 300; ++i) {
    long x = N(rng), y = N(rng);
    if (!x || !y) continue;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
      INFO(x << ", " << y << " at " << p);
      CHECK(hilbert_symbol(el(Q, std::to_string(x)), el(Q, std::to_string(y)), prime_of(Q, p)) ==
            oracle::hilbert_q(x, y, p));
    }
  }
}

TEST_CASE("hilbert symbol identities", "[local][property]") {
  std::mt19937_64 rng(34);
  for (const char* f : {"x", "x^2+1", "x^2-2", "x^2+2", "x^2+x+2", "x^3-2"}) {
    auto K = field(f);
    std::vector<Place> primes;
    for (u64 p : {2, 3, 5, 7})
      for (auto& P : decompose_prime(K, p)) primes.push_back(P);
    for (int i = 0; i < 200; ++i) {
      auto a = oracle::random_element(K, rng, 40, 8), a2 = oracle::random_element(K, rng, 40, 8),
           b = oracle::random_element(K, rng, 40, 8);
      const auto& P = primes[i % primes.size()];
      INFO(f << " at " << label(P) << ": " << a.to_string() << ", " << a2.to_string() << ", " << b.to_string());
      CHECK(hilbert_symbol(a * a2, b, P) == hilbert_symbol(a, b, P) * hilbert_symbol(a2, b, P));
      CHECK(hilbert_symbol(a, b, P) == hilbert_symbol(b, a, P));
      CHECK(hilbert_symbol(a, -a, P) == 1);
      if (!P.dyadic() && valuation(a, P) % 2 == 0 && valuation(b, P) % 2 == 0) CHECK(hilbert_symbol(a, b, P) == 1);
    }
  }
}

TEST_CASE("hilbert reciprocity", "[local][property]") {
  std::mt19937_64 rng(35);
  for (const char* f : {"x", "x^2+1", "x^2-2", "x^2+x+2", "x^3-2", "x^3-x-1"}) {
    auto K = field(f);
    for (int i = 0; i < 40; ++i) {
      auto a = oracle::random_element(K, rng, 50, 10), b = oracle::random_element(K, rng, 50, 10);
      int prod = 1;
      for (auto& P : relevant_places(a, b)) prod *= hilbert_symbol(a, b, P);
      INFO(f << ": " << a.to_string() << ", " << b.to_string());
      CHECK(prod == 1);
    }
  }
}

TEST_CASE("hasse_invariant examples", "[local]") {
  auto Q = field("x");
  auto two = prime_of(Q, 2);
  CHECK(hasse_invariant({Q->one(), Q->one(), Q->one()}, two) == 1);
  CHECK(hasse_invariant({Q->one(), Q->one(), Q->one()}, prime_of(Q, 3)) == 1);
  CHECK(hasse_invariant({el(Q, "-1"), el(Q, "-1")}, two) == -1);
  CHECK(hasse_invariant({Q->one(), el(Q, "-1"), el(Q, "-1")}, two) == -1);
}

TEST_CASE("local_isotropic examples", "[local]") {
  auto Q = field("x");
  auto two = prime_of(Q, 2);
  CHECK_FALSE(local_isotropic({Q->one(), Q->one(), Q->one(), el(Q, "-7")}, two));
  CHECK(local_isotropic({Q->one(), Q->one(), Q->one(), el(Q, "-6")}, two));
  CHECK(local_isotropic({Q->one(), el(Q, "-1")}, two));
  CHECK(local_isotropic({Q->one(), el(Q, "-1")}, real_places(Q)[0]));
  CHECK_FALSE(local_isotropic({Q->one(), Q->one(), Q->one()}, real_places(Q)[0]));
  CHECK_FALSE(local_isotropic({Q->one(), Q->one(), Q->one()}, two));
  CHECK(local_isotropic({Q->one(), Q->one(), Q->one()}, prime_of(Q, 3)));
  CHECK_FALSE(local_isotropic({Q->one(), Q->one(), el(Q, "-3")}, two));
  CHECK(local_isotropic({Q->one(), Q->one(), el(Q, "-2")}, two));
  CHECK(local_isotropic({Q->one(), Q->one(), Q->one(), Q->one(), Q->one()}, two));
  CHECK(local_isotropic({Q->one(), Q->one()}, prime_of(Q, 5)));
  CHECK_FALSE(local_isotropic({Q->one(), Q->one()}, prime_of(Q, 3)));
  try {
    local_isotropic(DiagonalForm{Q->one()}, two);
    FAIL("expected DimensionTooSmall");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooSmall);
  }
}

TEST_CASE("ternary isotropy over Q matches the closed symbol formula", "[local][property]") {
  auto Q = field("x");
  std::mt19937_64 rng(36);
  std::uniform_int_distribution<long> N(-30, 30);
  for (int i = 0; i < 200; ++i) {
    long a = N(rng), b = N(rng), c = N(rng);
    if (!a || !b || !c) continue;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
      bool expect = oracle::hilbert_q(-a * b, -a * c, p) == 1;
      CHECK(local_isotropic({el(Q, std::to_string(a)), el(Q, std::to_string(b)), el(Q, std::to_string(c))},
                            prime_of(Q, p)) == expect);
    }
  }
}
