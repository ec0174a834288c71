#include "doctest.h"
#include "superslice/catalogue.hpp"

using namespace superslice;

namespace {

// independent matrix arithmetic for the oracle
using M = std::vector<std::vector<Scalar>>;

M zero(int n) { return M(n, std::vector<Scalar>(n)); }
M unit(int n, int i, int j) {
  M m = zero(n);
  m[i][j] = 1;
  return m;
}
M mul(const M& a, const M& b) {
  int n = static_cast<int>(a.size());
  M c = zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}
M lin(const M& a, const Scalar& s, const M& b) {
  M c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += s * b[i][j];
  return c;
}
M scom(const M& a, const M& b, int pa, int pb) { return lin(mul(a, b), -sign_pow(pa * pb), mul(b, a)); }

M from(const RationalMatrix& r) {
  M m = zero(static_cast<int>(r.rows()));
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m[i][j] = r(i, j);
  return m;
}

M expand(const LieSuperalgebra& g, const std::vector<M>& mats, const Vector& v) {
  M out = zero(static_cast<int>(mats[0].size()));
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (v[k] != 0) out = lin(out, v[k], mats[k]);
  return out;
}

}  // namespace

TEST_CASE("sl2 basics") {
  auto g = build_sl(2, 0);
  CHECK(g.dim() == 3);
  auto e = g.unit(g.index("e12")), h = g.unit(g.index("h1")), f = g.unit(g.index("e21"));
  CHECK(g.bracket(e, f) == h);
  CHECK(g.bracket(h, e) == 2 * e);
  CHECK(g.bracket(h, f) == -2 * f);
  CHECK(g.form(h, h) == 2);
  CHECK(g.form(e, f) == 1);
  Vector x = e + 3 * h - f;
  CHECK(is_zero(g.bracket(x, x)));
  CHECK(g.principal() == f);
}

TEST_CASE("sl3 and sl(2|1) agree with direct supermatrix commutators") {
  for (auto [m, n] : {std::pair{3, 0}, std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    auto g = build_sl(m, n);
    auto rm = sl_matrix_basis(m, n);
    std::vector<M> mats;
    for (const auto& x : rm) mats.push_back(from(x));
    const int N = m + n;
    // parities from the matrix positions, not from the algebra
    auto par = [&](const M& x) {
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          if (x[i][j] != 0) return int(i >= m) ^ int(j >= m);
      return 0;
    };
    for (std::size_t a = 0; a < g.dim(); ++a) {
      CHECK(bit(g.parity(a)) == par(mats[a]));
      for (std::size_t b = 0; b < g.dim(); ++b) {
        M lhs = scom(mats[a], mats[b], par(mats[a]), par(mats[b]));
        CHECK(expand(g, mats, g.bracket(g.unit(a), g.unit(b))) == lhs);
      }
    }
  }
  auto g21 = build_sl(2, 1);
  CHECK(g21.dim() == 8);
  CHECK(g21.even_dim() == 4);
  CHECK(g21.odd_dim() == 4);
  CHECK(g21.principal() == g21.unit(g21.index("e21")));
  auto g22 = build_sl(2, 2);
  CHECK(g22.dim() == 16);
  CHECK_FALSE(g22.notes().empty());
  CHECK_THROWS_AS(build_sl(1, 1), Error);
}

TEST_CASE("osp(1|2) matches its 3x3 realization") {
  auto g = build_osp_1_2();
  // C^{1|2}: index 0 even, 1 and 2 odd
  M e = unit(3, 1, 2), f = unit(3, 2, 1);
  M h = lin(unit(3, 1, 1), -1, unit(3, 2, 2));
  M vp = lin(unit(3, 1, 0), 1, unit(3, 0, 2));
  M vm = lin(unit(3, 0, 1), -1, unit(3, 2, 0));
  std::vector<M> mats = {e, h, f, vp, vm};
  std::vector<int> par = {0, 0, 0, 1, 1};
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b)
      CHECK(expand(g, mats, g.bracket(g.unit(a), g.unit(b))) == scom(mats[a], mats[b], par[a], par[b]));
  CHECK(g.bracket(g.unit(3), g.unit(4)) == g.unit(1));
  CHECK(g.bracket(g.unit(1), g.unit(3)) == g.unit(3));
  CHECK(g.bracket(g.unit(3), g.unit(3)) == 2 * g.unit(0));
  CHECK(find_jacobi_violation_serial(g) == std::nullopt);
}

TEST_CASE("parallel and serial Jacobi scans agree") {
  for (auto g : {build_sl(3, 0), build_sl(2, 1), build_osp_1_2(), build_heisenberg()}) {
    CHECK(find_jacobi_violation(g) == std::nullopt);
    CHECK(find_jacobi_violation_serial(g) == std::nullopt);
    CHECK(find_form_violation(g) == std::nullopt);
  }
}

TEST_CASE("invalid structure constants are rejected with indices") {
  std::vector<BasisElement> b = {{"a", Parity::Even}, {"b", Parity::Even}, {"c", Parity::Even}};
  try {
    LieSuperalgebra bad(b, {{0, 1, 2, 1}, {1, 0, 2, 1}});
    FAIL("antisymmetry violation accepted");
  } catch (const InvariantViolation& ex) {
    CHECK(ex.where() == std::vector<std::size_t>{0, 1, 2});
  }
  // odd output of an even bracket
  std::vector<BasisElement> b2 = {{"a", Parity::Even}, {"t", Parity::Odd}};
  CHECK_THROWS_AS(LieSuperalgebra(b2, {{0, 0, 1, 1}}), InvariantViolation);
  // Jacobi failure: [a,b] = c, [a,c] = a
  try {
    LieSuperalgebra bad(b, {{0, 1, 2, 1}, {0, 2, 0, 1}});
    FAIL("Jacobi violation accepted");
  } catch (const InvariantViolation& ex) {
    CHECK(ex.where().size() == 3);
  }
}

TEST_CASE("odd self-brackets are allowed, even ones are not") {
  std::vector<BasisElement> b = {{"z", Parity::Even}, {"t", Parity::Odd}};
  LieSuperalgebra g(b, {{1, 1, 0, 1}});
  CHECK(g.bracket(g.unit(1), g.unit(1)) == g.unit(0));
  std::vector<BasisElement> b2 = {{"x", Parity::Even}};
  CHECK_THROWS_AS(LieSuperalgebra(b2, {{0, 0, 0, 1}}), InvariantViolation);
}

TEST_CASE("descending central series") {
  auto heis = build_heisenberg();
  auto s = descending_central_series(heis);
  REQUIRE(s.terms.size() == 3);
  CHECK(s.terms[0].dim() == 3);
  CHECK(s.terms[1].dim() == 1);
  CHECK(s.terms[2].dim() == 0);
  CHECK(s.nilpotent);
  auto ab = descending_central_series(build_abelian(2, 1));
  CHECK(ab.terms.size() == 2);
  CHECK(ab.nilpotent);
  auto sl2 = descending_central_series(build_sl(2, 0));
  CHECK_FALSE(sl2.nilpotent);
  CHECK(sl2.terms.back().dim() == 3);
}

TEST_CASE("basis subalgebra and vector parsing") {
  auto g = build_sl(3, 0);
  auto plus = basis_subalgebra(g, {g.index("e12"), g.index("e23"), g.index("e13")});
  CHECK(plus.dim() == 3);
  CHECK(descending_central_series(plus).nilpotent);
  CHECK_THROWS_AS(basis_subalgebra(g, {g.index("e12"), g.index("e21")}), Error);
  auto v = parse_vector(g, "e21 + e32");
  CHECK(v == g.unit(g.index("e21")) + g.unit(g.index("e32")));
  auto w = parse_vector(g, "2*e12 - 1/2*h1");
  CHECK(g.render(w) == "2*e12 - 1/2*h1");
  CHECK_THROWS_AS(parse_vector(g, "e99"), Error);
}

TEST_CASE("catalogue names") {
  CHECK(catalogue_algebra("sl2").dim() == 3);
  CHECK(catalogue_algebra("sl(2|1)").dim() == 8);
  CHECK(catalogue_algebra("osp12").dim() == 5);
  CHECK(catalogue_algebra("heisenberg").dim() == 3);
  CHECK_THROWS_AS(catalogue_algebra("e8"), Error);
}
