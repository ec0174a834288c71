#include "doctest.h"
#include "oracles.hpp"
#include "superslice/slice.hpp"

using namespace superslice;

namespace {

SliceChart principal_chart(const LieSuperalgebra& g) {
  auto t = sl2_triple_for(g, *g.principal());
  return gauge_fix(g, t, dynkin_grading(g, t));
}

SuperPolynomial var(const RingPtr& r, const std::string& n) { return SuperPolynomial::variable(r, n); }

void exact_checks(const SliceChart& c) {
  CHECK_FALSE(check_chart_parity(c));
  CHECK_FALSE(check_chart_weights(c));
  CHECK_FALSE(check_round_trip(c));
  CHECK_FALSE(check_dimension_accounting(c));
}

}  // namespace

TEST_CASE("sampler is reproducible and stays in range") {
  RationalSampler a(5), b(5);
  for (int i = 0; i < 200; ++i) {
    auto x = a.rational();
    CHECK(x == b.rational());
    CHECK(x >= -10);
    CHECK(x <= 10);
    CHECK(x.get_den() <= 4);
  }
}

TEST_CASE("sl2: one invariant a + b^2") {
  auto g = build_sl(2, 0);
  auto c = principal_chart(g);
  REQUIRE(c.generators.size() == 1);
  CHECK(c.generators[0].label == "e12");
  CHECK(c.generators[0].conformal_weight2() == 4);
  auto a = var(c.ring, "z_e12"), b = var(c.ring, "z_h1");
  CHECK(c.invariants[0] == a + b * b);
  CHECK(c.gauge[g.index("e12")] == b);
  exact_checks(c);
  auto rep = verify_invariance(c, 10, 1);
  CHECK(rep.pass);
  CHECK_FALSE(rep.counterexample);

  auto m = finite_miura(c);
  CHECK(m.images[0] == var(m.ring, "z_h1") * var(m.ring, "z_h1"));
  CHECK(m.witness == Vector{-1});
  auto cert = injectivity_certificate(m, 5, 3);
  CHECK(cert.pass);
  CHECK(cert.even_rank == 1);

  auto tab = slice_poisson_table(c);
  // a single even generator Poisson-commutes with itself
  CHECK(tab.entries.at({0, 0}).is_zero());
}

TEST_CASE("sl3 principal: invariants give the characteristic polynomial") {
  auto g = build_sl(3, 0);
  auto c = principal_chart(g);
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0].weight2 == 2);
  CHECK(c.generators[1].weight2 == 4);
  exact_checks(c);
  CHECK(verify_invariance(c, 6, 7).pass);

  // oracle: char poly of the generic matrix Z vs the slice representative
  auto mats = sl_matrix_basis(3, 0);
  auto rows = oracle::sl_row_parity(3, 0);
  auto lam_ring = Ring::make([&] {
    auto v = c.ring->variables();
    v.push_back({"lambda", Parity::Even, 0, 0});
    return v;
  }());
  auto up = [&](const SuperPolynomial& p) {
    return substitute(p, lam_ring, [&](Var v) { return SuperPolynomial::variable(lam_ring, v); });
  };
  PolyVector z = c.generic_point(), s = lift(c.ring, c.triple.f);
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (c.generators[k].vector[i] != 0) s[i] += c.generators[k].vector[i] * c.invariants[k];
  auto charpoly = [&](const PolyVector& x) {
    PolyVector y;
    for (const auto& p : x) y.push_back(up(p));
    auto mm = oracle::realize(mats, rows, y);
    auto lam = SuperPolynomial::variable(lam_ring, "lambda");
    for (int i = 0; i < 3; ++i) mm[i][i] -= lam;
    return oracle::det(mm);
  };
  CHECK(charpoly(z) == charpoly(s));

  auto tab = slice_poisson_table(c);
  CHECK_FALSE(check_poisson_antisymmetry(tab));
  CHECK_FALSE(check_poisson_jacobi(tab));
  // the quadratic invariant is central in the finite W-algebra of sl3
  CHECK(tab.entries.at({0, 1}).is_zero());

  // Miura on diag-type coordinates: h block gives symmetric functions of the eigenvalues
  auto m = finite_miura(c);
  CHECK_FALSE(check_miura_parity(m));
  auto cert = injectivity_certificate(m, 5, 11);
  CHECK(cert.pass);
  CHECK(cert.even_target == 2);
  CHECK(cert.even_points.size() >= 1);
  CHECK(cert.even_points.back().rank == 2);
}

TEST_CASE("osp(1|2): odd invariant and Poisson table") {
  auto g = build_osp_1_2();
  auto c = principal_chart(g);
  REQUIRE(c.generators.size() == 2);
  CHECK(c.generators[0].parity == Parity::Odd);
  CHECK(c.generators[0].weight2 == 1);
  CHECK(c.generators[1].parity == Parity::Even);
  exact_checks(c);
  auto rep = verify_invariance(c, 8, 2);
  CHECK(rep.pass);

  auto tab = slice_poisson_table(c);
  CHECK_FALSE(check_poisson_antisymmetry(tab));
  CHECK_FALSE(check_poisson_jacobi(tab));
  // the odd generator brackets with itself to something nonzero
  CHECK_FALSE(tab.entries.at({0, 0}).is_zero());

  auto m = finite_miura(c);
  CHECK_FALSE(check_miura_parity(m));
  auto cert = injectivity_certificate(m, 5, 4);
  CHECK(cert.pass);
  CHECK(cert.odd_target == 1);
  CHECK(cert.odd_rank == 1);
  // at the origin the odd coefficient vanishes
  auto at_origin = injectivity_certificate(MiuraImage{m.ring, m.coordinates, m.generators, m.images, Vector{0, 0}}, 0, 0);
  CHECK_FALSE(at_origin.pass);
}

TEST_CASE("Zhu bracket on linear functions reproduces the algebra") {
  for (auto g : {build_sl(2, 0), build_osp_1_2(), build_sl(2, 1)}) {
    auto c = principal_chart(g);
    ZhuPoisson zp(c);
    auto low = [&](std::size_t i) { return c.grading.weight2[i] <= 0; };
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        if (!low(i) || !low(j)) continue;
        auto lhs = zp.bracket(zp.psi(g.unit(i)), zp.psi(g.unit(j)));
        CHECK(lhs == zp.psi(g.bracket(g.unit(i), g.unit(j))));
      }
  }
}

TEST_CASE("sl(2|1) and sl(3|1): counts and closure") {
  for (auto g : {build_sl(2, 1), build_sl(1, 2)}) {
    auto c = principal_chart(g);
    exact_checks(c);
    std::size_t odd = 0;
    for (const auto& s : c.generators) odd += s.parity == Parity::Odd;
    CHECK(c.generators.size() == 4);
    CHECK(odd == 2);
    CHECK(verify_invariance(c, 4, 9).pass);
    auto tab = slice_poisson_table(c);
    CHECK_FALSE(check_poisson_antisymmetry(tab));
    CHECK_FALSE(check_poisson_jacobi(tab));
    auto m = finite_miura(c);
    CHECK(injectivity_certificate(m, 8, 5).pass);
  }
  auto g = build_sl(3, 1);
  auto c = principal_chart(g);
  exact_checks(c);
  CHECK(verify_invariance(c, 2, 13).pass);
}

TEST_CASE("a broken invariant is caught") {
  auto g = build_sl(2, 0);
  auto c = principal_chart(g);
  c.invariants[0] = c.invariants[0] + var(c.ring, "z_h1");
  auto rep = verify_invariance(c, 5, 1);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.counterexample);
  CHECK(rep.counterexample->find("e12") != std::string::npos);
  CHECK(check_chart_weights(c));
  CHECK(check_round_trip(c));
}
