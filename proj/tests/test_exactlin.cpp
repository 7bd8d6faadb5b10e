#include <doctest.h>

#include <numeric>
#include <random>

#include "coalition_forge/exactlin.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace coalition_forge;
using namespace coalition_forge::testing;

namespace {

RationalMatrix random_integer_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, long lo = -4,
                                     long hi = 4) {
  std::uniform_int_distribution<long> d(lo, hi);
  RationalMatrix m(rows, cols);
  for (auto& x : m.data()) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rank") {
  const RationalMatrix ex2{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}};
  CHECK(oracle::det_cofactor(ex2) == -1);
  CHECK(rank(ex2) == 3);
  CHECK(rank(RationalMatrix{{1, 1}, {1, 1}}) == 1);
  for (std::size_t n : {1, 4, 9}) CHECK(rank(RationalMatrix::identity(n)) == n);
  CHECK(rank(RationalMatrix(3, 2)) == 0);
  CHECK(rank(RationalMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
}

TEST_CASE("is_invertible") {
  CHECK(is_invertible(RationalMatrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}));
  CHECK_FALSE(is_invertible(RationalMatrix{{1, 1}, {1, 1}}));
  CHECK_FALSE(is_invertible(RationalMatrix{{0}}));
  CHECK_THROWS_AS(is_invertible(RationalMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("solve: unique, inconsistent and underdetermined systems") {
  const auto ex2 = solve(RationalMatrix{{1, 1, 0}, {1, 1, 1}, {0, 1, 1}}, qs({-18, -22, -16}));
  REQUIRE(ex2.kind == SolveResult::Kind::kUnique);
  CHECK(ex2.solution == qs({-6, -12, -4}));

  const auto ex3 = solve(RationalMatrix{{1, 0, 1}, {0, 1, 1}, {1, 1, 1}}, qs({-1, -2, -4}));
  REQUIRE(ex3.kind == SolveResult::Kind::kUnique);
  CHECK(ex3.solution == qs({-2, -3, 1}));

  const auto none = solve(RationalMatrix{{1, 1}, {1, 1}}, qs({1, 2}));
  CHECK(none.kind == SolveResult::Kind::kNone);
  CHECK_FALSE(none.has_solution());

  const RationalMatrix ones{{1, 1}, {1, 1}};
  const auto many = solve(ones, qs({3, 3}));
  REQUIRE(many.kind == SolveResult::Kind::kInfinite);
  CHECK(many.nullity == 1);
  CHECK(ones * many.solution == qs({3, 3}));

  CHECK_THROWS_AS(solve(ones, qs({1})), std::invalid_argument);
}

TEST_CASE("solve recovers x from m*x for random invertible matrices") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = 1 + rng() % 6;
    const auto m = random_integer_matrix(n, n, rng);
    if (oracle::det_cofactor(m).is_zero()) {
      CHECK_FALSE(is_invertible(m));
      continue;
    }
    CHECK(is_invertible(m));
    std::vector<Rational> x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
    const auto b = m * x;
    const auto r = solve(m, b);
    REQUIRE(r.kind == SolveResult::Kind::kUnique);
    CHECK(r.solution == x);
    ++checked;
  }
}

TEST_CASE("rank is invariant under transposition and row permutation") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    // Narrow entry range so rank deficiency actually happens.
    const auto m = random_integer_matrix(rows, cols, rng, -1, 1);
    CHECK(rank(m) == rank(m.transpose()));
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(rank(m.permute_rows(order)) == rank(m));
    if (rows == cols) CHECK(is_invertible(m) == !oracle::det_cofactor(m).is_zero());
  }
}

TEST_CASE("every returned solution substitutes back exactly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const auto m = random_integer_matrix(rows, cols, rng, -2, 2);
    std::vector<Rational> b;
    for (std::size_t i = 0; i < rows; ++i) b.emplace_back(static_cast<long>(rng() % 7) - 3);
    const auto r = solve(m, b);
    if (!r.has_solution()) {
      // Inconsistent means rank([m | b]) > rank(m).
      RationalMatrix aug(rows, cols + 1);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, cols) = b[i];
      }
      CHECK(rank(aug) == rank(m) + 1);
      continue;
    }
    CHECK(m * r.solution == b);
    CHECK(r.nullity == cols - rank(m));
    CHECK((r.kind == SolveResult::Kind::kUnique) == (r.nullity == 0));
  }
}
