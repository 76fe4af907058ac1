#include <catch_amalgamated.hpp>

#include "nfsos/error.hpp"
#include "nfsos/f2.hpp"
#include "oracles.hpp"

using namespace nfsos;

namespace {

BitVec bits(std::initializer_list<int> v) {
  BitVec b(v.size());
  std::size_t i = 0;
  for (int x : v) b.set(i++, x);
  return b;
}

F2Matrix matrix(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  F2Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("solve_f2 examples", "[f2]") {
  auto id = matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  auto x = solve_f2(id, bits({1, 0, 1}));
  REQUIRE(x);
  CHECK(*x == bits({1, 0, 1}));

  x = solve_f2(matrix({{1, 1}}, 2), bits({1}));
  REQUIRE(x);
  CHECK(*x == bits({1, 0}));

  CHECK_FALSE(solve_f2(matrix({{1, 1}, {1, 1}}, 2), bits({1, 0})));

  try {
    solve_f2(id, bits({1, 0}));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
}

TEST_CASE("empty systems", "[f2]") {
  F2Matrix none(0, 4);
  auto x = solve_f2(none, BitVec(0));
  REQUIRE(x);
  CHECK_FALSE(x->any());
  F2Matrix no_unknowns(2, 0);
  CHECK(solve_f2(no_unknowns, BitVec(2)));
  CHECK_FALSE(solve_f2(no_unknowns, bits({0, 1})));
}

TEST_CASE("solve_f2 agrees with exhaustive search", "[f2][property]") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 500; ++t) {
    int k = 1 + static_cast<int>(rng() % 12), m = 1 + static_cast<int>(rng() % 14);
    std::vector<std::vector<int>> rows(m, std::vector<int>(k));
    std::vector<int> rhs(m);
    for (auto& r : rows)
      for (auto& v : r) v = static_cast<int>(rng() & 1);
    for (auto& v : rhs) v = static_cast<int>(rng() & 1);
    auto M = matrix(rows, k);
    BitVec b(m);
    for (int i = 0; i < m; ++i) b.set(i, rhs[i]);
    auto x = solve_f2(M, b);
    auto y = oracle::brute_force_f2(rows, rhs, k);
    REQUIRE(x.has_value() == y.has_value());
    if (x) CHECK(M.apply(*x) == b);
  }
}

TEST_CASE("kernel and rank", "[f2][property]") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 200; ++t) {
    std::size_t k = 1 + rng() % 20, m = 1 + rng() % 20;
    F2Matrix M(m, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) M.set(i, j, rng() & 1);
    auto ker = kernel_f2(M);
    CHECK(ker.size() + rank_f2(M) == k);
    for (auto& v : ker) CHECK_FALSE(M.apply(v).any());
    F2Echelon e(k);
    for (auto& v : ker) CHECK(e.insert(v));
  }
}

TEST_CASE("echelon tracks combinations", "[f2]") {
  std::mt19937_64 rng(43);
  F2Echelon e(70);
  std::vector<BitVec> in;
  for (int i = 0; i < 40; ++i) {
    BitVec v(70);
    for (int j = 0; j < 70; ++j) v.set(j, rng() & 1);
    e.insert(v);
    in.push_back(v);
  }
  BitVec target(70);
  for (int i : {3, 7, 19}) target ^= in[i];
  BitVec combo;
  auto rest = e.reduce(target, &combo);
  CHECK_FALSE(rest.any());
  BitVec again(70);
  for (std::size_t i = 0; i < combo.size(); ++i)
    if (combo.get(i)) again ^= in[i];
  CHECK(again == target);
  e.widen(80);
  CHECK(e.width() == 80);
}
