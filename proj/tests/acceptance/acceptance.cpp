// End-to-end acceptance run: one line per criterion with its runtime.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "superslice/catalogue.hpp"
#include "superslice/cohomology.hpp"
#include "superslice/pipeline.hpp"
#include "superslice/pva.hpp"

using namespace superslice;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      note = what;
    }
  }
};

SliceChart principal_chart(const LieSuperalgebra& g) {
  auto t = sl2_triple_for(g, *g.principal());
  return gauge_fix(g, t, dynkin_grading(g, t));
}

SuperPolynomial var(const RingPtr& r, const std::string& n) { return SuperPolynomial::variable(r, n); }

Outcome sl2_end_to_end() {
  Outcome o;
  auto g = build_sl(2, 0);
  auto c = principal_chart(g);
  auto a = var(c.ring, "z_e12"), b = var(c.ring, "z_h1");
  o.require(c.invariants.size() == 1 && c.invariants[0] == a + b * b, "invariant is not a + b^2");
  o.require(c.gauge[g.index("e12")] == b, "gauge is not s = b");
  o.require(!check_round_trip(c), "round trip");
  auto m = finite_miura(c);
  o.require(m.images[0] == var(m.ring, "z_h1") * var(m.ring, "z_h1"), "Miura image is not b^2");
  o.require(injectivity_certificate(m, 5, 1).pass, "certificate");
  return o;
}

Outcome sl3_characteristic_polynomial() {
  Outcome o;
  auto g = build_sl(3, 0);
  auto c = principal_chart(g);
  o.require(c.generators.size() == 2, "expected two invariants");
  auto mats = sl_matrix_basis(3, 0);
  auto rows = oracle::sl_row_parity(3, 0);
  auto with_lambda = [](const RingPtr& r) {
    auto v = r->variables();
    v.push_back({"lambda", Parity::Even, 0, 0});
    return Ring::make(v);
  };
  auto charpoly = [&](const RingPtr& lr, const PolyVector& x) {
    PolyVector y;
    for (const auto& p : x) y.push_back(substitute(p, lr, [&](Var v) { return SuperPolynomial::variable(lr, v); }));
    auto mm = oracle::realize(mats, rows, y);
    for (int i = 0; i < 3; ++i) mm[i][i] -= var(lr, "lambda");
    return oracle::det(mm);
  };
  auto slice_point = [&](const RingPtr& r, const std::vector<SuperPolynomial>& vals) {
    PolyVector s = lift(r, c.triple.f);
    for (std::size_t k = 0; k < vals.size(); ++k)
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (c.generators[k].vector[i] != 0) s[i] += c.generators[k].vector[i] * vals[k];
    return s;
  };
  auto lr = with_lambda(c.ring);
  o.require(charpoly(lr, c.generic_point()) == charpoly(lr, slice_point(c.ring, c.invariants)),
            "char poly of Z differs from its slice representative");

  // on S_f itself: lambda^3 + (linear in x) lambda + (linear in y), nothing else
  auto sr = Ring::make({{"x", Parity::Even, 4, 0}, {"y", Parity::Even, 6, 0}});
  auto slr = with_lambda(sr);
  auto p = charpoly(slr, slice_point(sr, {var(sr, "x"), var(sr, "y")}));
  auto lam = var(slr, "lambda");
  auto x = var(slr, "x"), y = var(slr, "y");
  Scalar cx = p.coefficient(Monomial({{Var{0, 0}, 1}, {Var{2, 0}, 1}}));
  Scalar cy = p.coefficient(Monomial({{Var{1, 0}, 1}}));
  o.require(cx != 0 && cy != 0, "slice char poly misses a generator");
  o.require(p == -1 * (lam * lam * lam) + cx * (x * lam) + cy * y, "slice char poly is not of the companion form");

  // on f + g_0 the Miura images give prod (b_i - lambda), f being strictly lower triangular
  auto m = finite_miura(c);
  auto mr = with_lambda(m.ring);
  PolyVector h = lift(m.ring, c.triple.f);
  for (std::size_t a = 0; a < m.coordinates.size(); ++a)
    h[m.coordinates[a]] += SuperPolynomial::variable(m.ring, Var{static_cast<std::uint32_t>(a), 0});
  PolyVector hl;
  for (const auto& q : h) hl.push_back(substitute(q, mr, [&](Var v) { return SuperPolynomial::variable(mr, v); }));
  auto diag = oracle::realize(mats, rows, hl);
  SuperPolynomial prod = SuperPolynomial::constant(mr, -1);
  for (int i = 0; i < 3; ++i) prod = prod * (var(mr, "lambda") - diag[i][i]);
  o.require(charpoly(mr, slice_point(m.ring, m.images)) == prod, "Miura side is not prod (lambda - b_i)");

  auto cert = injectivity_certificate(m, 5, 1);
  o.require(cert.pass && cert.even_rank == 2, "certificate rank 2");
  return o;
}

Outcome osp12() {
  Outcome o;
  auto c = principal_chart(build_osp_1_2());
  std::size_t even = 0, odd = 0;
  for (const auto& s : c.generators) (s.parity == Parity::Even ? even : odd)++;
  o.require(even == 1 && odd == 1, "expected one even and one odd invariant");
  o.require(!check_round_trip(c), "round trip");
  auto cert = injectivity_certificate(finite_miura(c), 5, 1);
  o.require(cert.pass && cert.odd_rank == cert.odd_target && cert.odd_target == 1, "odd certificate block");
  auto tab = slice_poisson_table(c);
  o.require(!check_poisson_antisymmetry(tab), "Poisson antisymmetry");
  o.require(!check_poisson_jacobi(tab), "Poisson super-Jacobi");
  return o;
}

Outcome sl21() {
  Outcome o;
  JobConfig cfg;
  cfg.algebra = "sl(2|1)";
  auto r = run_pipeline(cfg);
  o.require(r.pass, r.body.contains("failure") ? r.body["failure"].dump() : "pipeline failed");
  for (const auto& s : r.body["stages"])
    if (s["stage"] == "chart") {
      o.require(s["centralizer_dim"]["even"] == 2 && s["centralizer_dim"]["odd"] == 2, "dim g^e is not 2|2");
      std::size_t ev = 0, od = 0;
      for (const auto& gen : s["generators"]) (gen["parity"] == "even" ? ev : od)++;
      o.require(ev == 2 && od == 2, "invariant count per parity");
    }
  return o;
}

Outcome invariance_suite() {
  Outcome o;
  for (const char* name : {"sl2", "sl3", "sl4", "osp12", "sl(2|1)", "sl(1|2)", "sl(3|1)"}) {
    auto rep = verify_invariance(principal_chart(catalogue_algebra(name)), 5, 2024);
    o.require(rep.pass && rep.trials == 5, std::string(name) + ": " + rep.counterexample.value_or("trials"));
  }
  return o;
}

Outcome cohomology() {
  Outcome o;
  auto g = build_sl(3, 0);
  auto t = sl2_triple_for(g, *g.principal());
  auto gr = dynkin_grading(g, t);
  auto idx = gr.indices_at_least(1);
  std::vector<int> w;
  for (auto i : idx) w.push_back(gr.weight2[i]);
  auto cx = build_ce_complex(basis_subalgebra(g, idx), w, 8);
  auto tab = compute_cohomology(cx);
  for (int k = 0; k <= 3; ++k)
    for (int n = -8; n <= 0; ++n)
      o.require(tab.at(k, n) == (k == 0 && n == 0 ? 1u : 0u),
                "H^" + std::to_string(k) + " at weight " + half_integer_text(n));
  for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {1, 1}})
    o.require(de_rham_check(p, q, 6).pass, "Poincare lemma for C^{" + std::to_string(p) + "|" + std::to_string(q) + "}");
  return o;
}

Outcome pva_h0() {
  Outcome o;
  BrstComplex s(principal_chart(build_sl(2, 0)));
  BrstComplex p(principal_chart(build_osp_1_2()));
  o.require(!check_q_squared(s), "Q^2 on sl2");
  o.require(!check_q_squared(p), "Q^2 on osp(1|2)");
  auto hs = h0_truncated(s, 6);
  const std::vector<std::size_t> want_s{1, 0, 1, 1};
  for (int w = 0; w <= 3; ++w) o.require(hs.dims.at(2 * w) == want_s[w], "sl2 H^0 at weight " + std::to_string(w));
  o.require(hs.pass(), "sl2 H^0 vs free count");
  auto hp = h0_truncated(p, 4);
  o.require(hp.pass(), "osp(1|2) H^0 vs free superfield count");
  const std::vector<std::size_t> want_p{1, 0, 0, 1, 1};
  for (int w = 0; w <= 4; ++w) o.require(hp.dims.at(w) == want_p[w], "osp(1|2) H^0 at weight " + half_integer_text(w));
  return o;
}

Outcome graded_miura_map() {
  Outcome o;
  for (auto g : {build_sl(2, 0), build_osp_1_2()}) {
    auto c = principal_chart(g);
    BrstComplex b(c);
    auto r = check_miura_intertwining(graded_miura(c), b, 6);
    o.require(r.pass && r.pairs > 0, g.name() + ": " + r.failure.value_or("no pairs"));
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const char* name : {"sl2", "osp12", "sl(2|1)"}) {
    JobConfig c;
    c.algebra = name;
    c.seed = 7;
    const auto first = run_pipeline(c).body_text();
    for (int i = 0; i < 2; ++i) o.require(run_pipeline(c).body_text() == first, std::string(name) + " report changed");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;  // seconds, 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all = {
      {1, "sl2 principal end to end", 1, sl2_end_to_end},
      {2, "sl3 principal vs characteristic polynomial", 10, sl3_characteristic_polynomial},
      {3, "osp(1|2) principal, odd invariant and Poisson table", 10, osp12},
      {4, "sl(2|1) with the even principal nilpotent", 60, sl21},
      {5, "seeded invariance trials on the catalogue", 0, invariance_suite},
      {6, "Heisenberg cohomology and Poincare lemma", 30, cohomology},
      {7, "BRST Q^2 = 0 and truncated H^0", 60, pva_h0},
      {8, "graded Miura map intertwines lambda-brackets", 0, graded_miura_map},
      {9, "identical seeds give identical reports", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget > 0 && dt > c.budget) o.require(false, "over the time budget");
    if (!o.pass) ++failures;
    std::printf("[%s] %d %s (%.3f s%s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, dt,
                c.budget > 0 ? (", budget " + std::to_string(static_cast<int>(c.budget)) + " s").c_str() : "",
                o.pass ? "" : ": ", o.note.c_str());
  }
  std::printf("%d/%zu passed\n", static_cast<int>(all.size()) - failures, all.size());
  return failures == 0 ? 0 : 1;
}
