#include "doctest.h"
#include "superslice/arc.hpp"

using namespace superslice;

namespace {

Presentation parabola() {
  // y - x^2 = 0
  auto p = affine_space({{"x", Parity::Even, 2, 0}, {"y", Parity::Even, 4, 0}});
  auto x = SuperPolynomial::variable(p.ring, "x"), y = SuperPolynomial::variable(p.ring, "y");
  p.relations.push_back(y - x * x);
  return p;
}

}  // namespace

TEST_CASE("arc space of the affine line has no relations") {
  auto a = arc_ring(affine_space({{"x", Parity::Even, 2, 0}}), 3);
  CHECK(a.relations.empty());
  CHECK(a.ring->differential());
  CHECK(a.jet_name(Var{0, 2}) == "x_(-3)");
  CHECK(a.jet(0, -1) == SuperPolynomial::variable(a.ring, Var{0, 0}));
  // x_(-3) = x''/2
  CHECK(a.jet(0, -3) == Scalar(1, 2) * SuperPolynomial::variable(a.ring, Var{0, 2}));
  CHECK_THROWS_AS(a.jet(0, 0), Error);
  CHECK_THROWS_AS(arc_ring(affine_space({}), -1), Error);
}

TEST_CASE("jets of x^2 by direct series expansion") {
  auto p = affine_space({{"x", Parity::Even, 2, 0}});
  p.relations.push_back(pow(SuperPolynomial::variable(p.ring, "x"), 2));
  auto a = arc_ring(p, 3);
  auto x = [&](int n) { return a.jet(0, n); };
  CHECK(a.relations.at({0, -1}) == x(-1) * x(-1));
  CHECK(a.relations.at({0, -2}) == 2 * (x(-1) * x(-2)));
  CHECK(a.relations.at({0, -3}) == 2 * (x(-1) * x(-3)) + x(-2) * x(-2));
  CHECK(a.relations.at({0, -4}) == 2 * (x(-1) * x(-4)) + 2 * (x(-2) * x(-3)));
  CHECK_FALSE(check_relation_expansion(a));
}

TEST_CASE("relations agree with the derivative expansion") {
  auto a = arc_ring(parabola(), 5);
  CHECK(a.relations.size() == 6);
  CHECK_FALSE(check_relation_expansion(a));

  // odd coordinates: theta1 theta2 - x
  auto q = affine_space({{"t1", Parity::Odd, 1, 0}, {"t2", Parity::Odd, 1, 0}, {"x", Parity::Even, 2, 0}});
  q.relations.push_back(SuperPolynomial::variable(q.ring, "t1") * SuperPolynomial::variable(q.ring, "t2") -
                        SuperPolynomial::variable(q.ring, "x"));
  auto b = arc_ring(q, 4);
  CHECK_FALSE(check_relation_expansion(b));
  auto t = [&](std::size_t i, int n) { return b.jet(i, n); };
  CHECK(b.relations.at({0, -2}) == t(0, -1) * t(1, -2) + t(0, -2) * t(1, -1) - t(2, -2));
}

TEST_CASE("products of presentations") {
  auto p = product_presentation(parabola(), affine_space({{"t", Parity::Odd, 1, 0}}));
  CHECK(p.ring->size() == 3);
  CHECK(p.relations.size() == 1);
  CHECK(p.ring->index("t") == 2);
  auto a = arc_ring(p, 2);
  CHECK_FALSE(check_relation_expansion(a));
  CHECK_THROWS_AS(product_presentation(parabola(), parabola()), Error);
}

TEST_CASE("projection onto the base sends every jet to its order-zero coordinate") {
  auto a = arc_ring(parabola(), 2);
  auto x0 = SuperPolynomial::variable(a.ring, Var{0, 0});
  CHECK(a.projection(a.jet(0, -3)) == Scalar(1, 2) * x0);
  auto r = a.projection(a.relations.at({0, -1}));
  CHECK(r == SuperPolynomial::variable(a.ring, Var{1, 0}) - x0 * x0);
}
