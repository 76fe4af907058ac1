#include <catch_amalgamated.hpp>

#include "nfsos/local_symbols.hpp"
#include "nfsos/norm_equations.hpp"
#include "oracles.hpp"

using namespace nfsos;
using oracle::el;
using oracle::field;

namespace {

QuadraticExtension ext(const Field& K, const std::string& d) { return QuadraticExtension(K, el(K, d)); }

void check_solution(const QuadraticExtension& E, const FieldElement& b, const NormSolution& s) {
  CHECK(s.d_first * s.d_first - E.delta * s.d_second * s.d_second == b);
  CHECK(s.b == b);
}

}  // namespace

TEST_CASE("norm_locally_solvable examples", "[norm]") {
  auto Q = field("x");
  auto E = ext(Q, "-1");
  CHECK_FALSE(norm_locally_solvable(E, el(Q, "-1")));
  CHECK(norm_locally_solvable(E, el(Q, "5")));
  CHECK_FALSE(norm_locally_solvable(E, el(Q, "3")));
  try {
    norm_locally_solvable(E, Q->zero());
    FAIL("expected ZeroInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroInput);
  }
}

TEST_CASE("solve_norm examples", "[norm]") {
  auto Q = field("x");
  auto s = solve_norm(ext(Q, "-1"), el(Q, "5"));
  check_solution(ext(Q, "-1"), el(Q, "5"), s);
  s = solve_norm(ext(Q, "2"), el(Q, "-1"));
  check_solution(ext(Q, "2"), el(Q, "-1"), s);
  for (const char* f : {"x", "x^2+1", "x^3-2"}) {
    auto K = field(f);
    auto E = ext(K, "3");
    s = solve_norm(E, K->one());
    CHECK(s.d_first == K->one());
    CHECK(s.d_second.is_zero());
  }
}

TEST_CASE("degenerate extension with a square delta", "[norm]") {
  auto Ki = field("x^2+1");
  auto E = ext(Ki, "-1");  // -1 = i^2
  auto b = el(Ki, "7/3+2*x");
  check_solution(E, b, solve_norm(E, b));
  auto Q = field("x");
  E = ext(Q, "9/4");
  check_solution(E, el(Q, "-5"), solve_norm(E, el(Q, "-5")));
}

TEST_CASE("obstructed instances raise NotANorm with a witness", "[norm]") {
  auto Q = field("x");
  for (auto [d, b] : std::vector<std::pair<const char*, const char*>>{{"-1", "3"}, {"-1", "-1"}, {"2", "3"}, {"5", "2"}}) {
    auto E = ext(Q, d);
    try {
      solve_norm(E, el(Q, b));
      FAIL("expected NotANorm");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotANorm);
      REQUIRE(e.witness());
      const Place& w = *e.witness();
      unsigned long p = w.is_real() ? 0 : w.p;
      CHECK(oracle::hilbert_q(mpq_class(d), mpq_class(b), p) == -1);
    }
  }
}

TEST_CASE("norm round trip", "[norm][property]") {
  std::mt19937_64 rng(51);
  for (const char* f : {"x", "x^2+1", "x^2-2", "x^2+2", "x^2-x-1", "x^2+x+2", "x^3-2"}) {
    auto K = field(f);
    for (int i = 0; i < 15; ++i) {
      auto delta = oracle::random_element(K, rng, 12, 3);
      if (is_square(delta)) continue;
      QuadraticExtension E(K, delta);
      auto x1 = oracle::random_element(K, rng, 10, 3), x2 = oracle::random_element(K, rng, 10, 3);
      auto b = x1 * x1 - delta * x2 * x2;
      if (b.is_zero()) continue;
      INFO(f << " delta = " << delta.to_string() << " b = " << b.to_string());
      CHECK(norm_locally_solvable(E, b));
      check_solution(E, b, solve_norm(E, b));
      auto s = solve_norm_nonzero(E, b);
      check_solution(E, b, s);
      CHECK_FALSE(s.d_first.is_zero());
      CHECK_FALSE(s.d_second.is_zero());
    }
  }
}

TEST_CASE("witnesses are confirmed by hilbert_symbol", "[norm][property]") {
  std::mt19937_64 rng(52);
  int seen = 0;
  for (const char* f : {"x^2+1", "x^2-2", "x^2+x+2"}) {
    auto K = field(f);
    for (int i = 0; i < 40; ++i) {
      auto delta = oracle::random_element(K, rng, 15, 1), b = oracle::random_element(K, rng, 15, 1);
      if (is_square(delta)) continue;
      QuadraticExtension E(K, delta);
      auto w = norm_obstruction(E, b);
      CHECK(norm_locally_solvable(E, b) == !w.has_value());
      if (!w) continue;
      ++seen;
      CHECK(hilbert_symbol(delta, b, *w) == -1);
      try {
        solve_norm(E, b);
        FAIL("expected NotANorm");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotANorm);
        REQUIRE(e.witness());
        CHECK(hilbert_symbol(delta, b, *e.witness()) == -1);
      }
    }
  }
  CHECK(seen > 10);
}
