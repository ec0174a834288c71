#include <random>

#include "doctest.h"
#include "superslice/polynomial.hpp"

using namespace superslice;

namespace {

RingPtr small_ring() {
  return Ring::make({{"x", Parity::Even, 2, 0},
                     {"y", Parity::Even, 1, 0},
                     {"t1", Parity::Odd, 1, 0},
                     {"t2", Parity::Odd, 3, 0},
                     {"t3", Parity::Odd, 0, 0}});
}

SuperPolynomial var(const RingPtr& r, const char* n) { return SuperPolynomial::variable(r, n); }

// random polynomial with up to `terms` terms, each homogeneous of parity p if given
SuperPolynomial random_poly(const RingPtr& r, std::mt19937& rng, int terms, std::optional<Parity> p = {}) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 2), bitd(0, 1);
  SuperPolynomial out(r);
  for (int t = 0; t < terms; ++t) {
    SuperPolynomial m = SuperPolynomial::constant(r, coef(rng));
    for (std::size_t v = 0; v < r->size(); ++v) {
      int e = r->info(v).parity == Parity::Odd ? bitd(rng) : expo(rng);
      for (int k = 0; k < e; ++k) m = m * SuperPolynomial::variable(r, Var{static_cast<std::uint32_t>(v), 0});
    }
    if (p && m.parity() != *p) continue;
    out += m;
  }
  return out;
}

}  // namespace

TEST_CASE("odd generators anticommute and square to zero") {
  auto r = small_ring();
  auto t1 = var(r, "t1"), t2 = var(r, "t2"), x = var(r, "x");
  CHECK((t1 * t2).to_string() == "t1*t2");
  CHECK(t2 * t1 == -(t1 * t2));
  CHECK((t1 * t1).is_zero());
  CHECK((x + t1) * (x - t1) == x * x);
}

TEST_CASE("ring mismatch is rejected") {
  auto r1 = small_ring(), r2 = small_ring();
  CHECK_THROWS_AS(var(r1, "x") * var(r2, "x"), Error);
  CHECK_THROWS_AS(SuperPolynomial::variable(r1, "nope"), Error);
}

TEST_CASE("left partial derivatives") {
  auto r = small_ring();
  auto x = var(r, "x"), t1 = var(r, "t1"), t2 = var(r, "t2");
  Var vx{0, 0}, vt1{2, 0}, vt2{3, 0};
  CHECK(partial_derivative(x * x * t1, vx) == 2 * (x * t1));
  CHECK(partial_derivative(t1 * t2, vt1) == t2);
  CHECK(partial_derivative(t1 * t2, vt2) == -t1);
  CHECK(right_partial_derivative(t1 * t2, vt2) == t1);
  CHECK(right_partial_derivative(t1 * t2, vt1) == -t2);
  CHECK_THROWS_AS(partial_derivative(x, Var{17, 0}), Error);
}

TEST_CASE("total derivative on a differential ring") {
  auto r = Ring::make({{"u", Parity::Even, 4, 0}, {"th", Parity::Odd, 3, 0}}, true);
  auto u = var(r, "u"), th = var(r, "th");
  auto up = SuperPolynomial::variable(r, Var{0, 1});
  auto thp = SuperPolynomial::variable(r, Var{1, 1});
  CHECK(total_derivative(u) == up);
  CHECK(total_derivative(u * u) == 2 * (u * up));
  CHECK(total_derivative(th * u) == thp * u + th * up);
  CHECK(total_derivative(u, 3) == SuperPolynomial::variable(r, Var{0, 3}));
  CHECK(homogeneous_weight2(total_derivative(u * th)) == 4 + 3 + 2);
  CHECK_THROWS_AS(total_derivative(var(small_ring(), "x")), Error);
}

TEST_CASE("supercommutativity on random monomials") {
  auto r = small_ring();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly(r, rng, 1), b = random_poly(r, rng, 1);
    if (a.is_zero() || b.is_zero()) continue;
    int s = sign_pow(bit(*a.parity()) * bit(*b.parity()));
    CHECK(a * b == s * (b * a));
  }
}

TEST_CASE("associativity and distributivity on random polynomials") {
  auto r = small_ring();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(r, rng, 4), b = random_poly(r, rng, 4), c = random_poly(r, rng, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("graded Leibniz rule for left derivatives") {
  auto r = small_ring();
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    Parity pp = trial % 2 ? Parity::Odd : Parity::Even;
    auto p = random_poly(r, rng, 4, pp), q = random_poly(r, rng, 4);
    for (std::uint32_t v = 0; v < r->size(); ++v) {
      Var var_v{v, 0};
      int s = sign_pow(bit(r->parity(var_v)) * bit(pp));
      CHECK(partial_derivative(p * q, var_v) ==
            partial_derivative(p, var_v) * q + s * (p * partial_derivative(q, var_v)));
    }
  }
}

TEST_CASE("total derivative commutes with order-shifting embeddings") {
  auto r = Ring::make({{"u", Parity::Even, 2, 0}, {"th", Parity::Odd, 1, 0}}, true);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, 1), ord(0, 2);
  // shift: x^(n) -> x^(n+1) is a ring map; the composition with d must commute
  auto shift = [&](const SuperPolynomial& p) {
    return substitute(p, r, [&](Var v) { return SuperPolynomial::variable(r, Var{v.base, v.order + 1}); });
  };
  for (int trial = 0; trial < 30; ++trial) {
    SuperPolynomial p(r);
    for (int t = 0; t < 3; ++t) {
      SuperPolynomial m = SuperPolynomial::constant(r, coef(rng));
      for (int k = 0; k < 3; ++k)
        m = m * SuperPolynomial::variable(r, Var{static_cast<std::uint32_t>(pick(rng)),
                                                 static_cast<std::uint32_t>(ord(rng))});
      p += m;
    }
    CHECK(total_derivative(shift(p)) == shift(total_derivative(p)));
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  auto r = small_ring();
  auto x = var(r, "x"), y = var(r, "y"), t1 = var(r, "t1"), t2 = var(r, "t2"), t3 = var(r, "t3");
  auto img = [&](Var v) -> SuperPolynomial {
    switch (v.base) {
      case 0: return y * y + t1 * t2;
      case 1: return x - 3 * y;
      case 2: return t2 + x * t3;
      case 3: return t1;
      default: return y * t3;
    }
  };
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_poly(r, rng, 3), b = random_poly(r, rng, 3);
    CHECK(substitute(a * b, r, img) == substitute(a, r, img) * substitute(b, r, img));
  }
  CHECK_THROWS_AS(substitute(t1, r, [&](Var) { return x; }), Error);
}

TEST_CASE("canonical rendering is deterministic") {
  auto r = small_ring();
  auto x = var(r, "x"), y = var(r, "y"), t1 = var(r, "t1");
  auto p = x * y - Scalar(1, 2) * t1 + 3 * x * x;
  auto q = 3 * x * x + x * y - Scalar(1, 2) * t1;
  CHECK(p.to_string() == q.to_string());
  CHECK(p.to_string() == "-1/2*t1 + 3*x^2 + x*y");
}
