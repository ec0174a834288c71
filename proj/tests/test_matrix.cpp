#include <random>

#include "doctest.h"
#include "superslice/matrix.hpp"

using namespace superslice;

namespace {

RationalMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int rank_cap) {
  // product of r x k and k x c factors, so rank <= k
  std::uniform_int_distribution<int> d(-4, 4), den(1, 3);
  std::size_t k = static_cast<std::size_t>(rank_cap);
  RationalMatrix a(r, k), b(k, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) a(i, j) = make_scalar(d(rng), den(rng));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < c; ++j) b(i, j) = make_scalar(d(rng), den(rng));
  return a * b;
}

}  // namespace

TEST_CASE("exact rank small cases") {
  CHECK(exact_rank(RationalMatrix::identity(2)) == 2);
  CHECK(exact_rank(RationalMatrix::from_rows({{1, 2}, {2, 4}}, 2)) == 1);
  CHECK(exact_rank(RationalMatrix(3, 5)) == 0);
  CHECK(exact_rank(RationalMatrix(0, 0)) == 0);
  // a pivot column that is zero below the current row
  CHECK(exact_rank(RationalMatrix::from_rows({{0, 1, 1}, {0, 2, 3}, {0, 0, 0}}, 3)) == 2);
}

TEST_CASE("rational entries are handled exactly") {
  auto m = RationalMatrix::from_rows({{make_scalar(1, 3), make_scalar(1, 2)}, {make_scalar(2, 3), make_scalar(1, 1)}}, 2);
  CHECK(exact_rank(m) == 1);
  CHECK(exact_rank_serial(m) == 1);
}

TEST_CASE("rank of transpose and agreement with the serial reference") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    int cap = 1 + static_cast<int>(rng() % 6);
    auto m = random_matrix(rng, r, c, cap);
    auto rk = exact_rank(m);
    CHECK(rk == exact_rank(m.transpose()));
    CHECK(rk == exact_rank_serial(m));
    CHECK(rk <= static_cast<std::size_t>(cap));
  }
}

TEST_CASE("nullspace, solve and inverse") {
  auto m = RationalMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m.apply(ns[0])));
  auto x = solve(m, {6, 12, 2});
  REQUIRE(x);
  CHECK(m.apply(*x) == Vector{6, 12, 2});
  CHECK_FALSE(solve(m, {1, 0, 0}));
  CHECK_FALSE(inverse(m));
  auto a = RationalMatrix::from_rows({{2, 1}, {1, 1}}, 2);
  auto ai = inverse(a);
  REQUIRE(ai);
  CHECK(a * *ai == RationalMatrix::identity(2));
  CHECK(span_rank({{1, 1}, {2, 2}, {0, 1}}, 2) == 2);
}
