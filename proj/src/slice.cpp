#include "superslice/slice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superslice {

long RationalSampler::integer(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

Scalar RationalSampler::rational() {
  long n = integer(-10, 10);
  long d = integer(1, 4);
  return make_scalar(n, d);
}

namespace {

// value of a polynomial in even variables only
Scalar evaluate_even(const SuperPolynomial& p, const Vector& values) {
  Scalar out = 0;
  for (const auto& [m, c] : p.terms()) {
    Scalar t = c;
    for (const auto& [v, e] : m.factors()) {
      if (p.ring()->parity(v) == Parity::Odd) throw Error("evaluate_even met an odd variable");
      Scalar x = values.at(v.base);
      for (std::uint32_t k = 0; k < e; ++k) t *= x;
    }
    out += t;
  }
  return out;
}

std::string describe_generator(const SliceGenerator& s) {
  return s.label + " (degree " + half_integer_text(s.weight2) + ", " + parity_name(s.parity) + ")";
}

}  // namespace

PolyVector SliceChart::point(const PolyVector& coords) const {
  if (coords.size() != coordinates.size()) throw Error("wrong number of slice coordinates");
  const RingPtr& r = coords.empty() ? ring : coords[0].ring();
  PolyVector z = lift(r, triple.f);
  for (std::size_t a = 0; a < coordinates.size(); ++a) z[coordinates[a]] += coords[a];
  return z;
}

PolyVector SliceChart::generic_point() const {
  PolyVector coords;
  for (std::size_t a = 0; a < coordinates.size(); ++a)
    coords.push_back(SuperPolynomial::variable(ring, Var{static_cast<std::uint32_t>(a), 0}));
  return point(coords);
}

PolyVector SliceChart::coordinates_of(const PolyVector& z) const {
  PolyVector out;
  for (auto i : coordinates) out.push_back(z.at(i));
  return out;
}

SuperPolynomial SliceChart::evaluate(const SuperPolynomial& p, const PolyVector& coords) const {
  if (coords.size() != coordinates.size()) throw Error("wrong number of slice coordinates");
  return substitute(p, coords[0].ring(), [&](Var v) { return coords[v.base]; });
}

std::size_t SliceChart::variable_of(std::size_t basis_index) const {
  for (std::size_t a = 0; a < coordinates.size(); ++a)
    if (coordinates[a] == basis_index) return a;
  throw Error("basis vector " + g.label(basis_index) + " is not a slice coordinate");
}

SliceChart gauge_fix(const LieSuperalgebra& g, const Sl2Triple& t, const GoodGrading& gr) {
  SliceChart c{g, t, gr, graded_slice_decomposition(g, gr, t), nullptr, {}, {}, {}, {}, {}};
  c.coordinates = gr.indices_at_least(-1);
  c.plus = gr.indices_at_least(1);
  std::vector<VariableInfo> vars;
  for (auto i : c.coordinates) vars.push_back({"z_" + g.label(i), g.parity(i), gr.weight2[i] + 2, 0});
  c.ring = Ring::make(vars);

  for (const auto& piece : c.decomposition.pieces)
    for (const auto& v : piece.centralizer) {
      SliceGenerator s;
      s.vector = v;
      s.weight2 = piece.weight2;
      s.parity = *g.parity_of(v);
      std::size_t support = 0, last = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) ++support, last = i;
      s.label = (support == 1 && v[last] == 1) ? g.label(last) : "x" + std::to_string(c.generators.size() + 1);
      if (support != 1 && g.find(s.label)) s.label = "ge" + std::to_string(c.generators.size() + 1);
      c.generators.push_back(std::move(s));
    }

  const PolyVector z = c.generic_point();
  PolyVector y(g.dim(), SuperPolynomial(c.ring));
  // Z_p + R_p = X_p - [f, Y_{p+1}], degree by degree
  for (const auto& piece : c.decomposition.pieces) {
    if (piece.indices.empty()) continue;
    PolyVector w = adjoint_orbit_map(g, z, y);
    auto [x, u] = piece.decompose(w);
    for (std::size_t k = 0; k < piece.upper.size(); ++k) y[piece.upper[k]] = -u[k];
    for (auto& xi : x) c.invariants.push_back(xi);
  }
  c.gauge = y;

  // the chart identity holds by construction; check it anyway
  PolyVector w = adjoint_orbit_map(g, z, y);
  PolyVector expect = lift(c.ring, t.f);
  for (std::size_t k = 0; k < c.generators.size(); ++k)
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (c.generators[k].vector[i] != 0) expect[i] += c.generators[k].vector[i] * c.invariants[k];
  if (w != expect) throw DecompositionError("gauge fixing did not land in the slice", 0);
  return c;
}

std::optional<std::string> check_chart_parity(const SliceChart& c) {
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    const auto& p = c.invariants[k];
    if (!p.is_zero() && p.parity() != c.generators[k].parity)
      return "invariant for " + describe_generator(c.generators[k]) + " has the wrong parity";
  }
  for (auto i : c.plus) {
    const auto& p = c.gauge[i];
    if (!p.is_zero() && p.parity() != c.g.parity(i)) return "gauge component " + c.g.label(i) + " has the wrong parity";
  }
  return std::nullopt;
}

std::optional<std::string> check_chart_weights(const SliceChart& c) {
  for (std::size_t k = 0; k < c.generators.size(); ++k) {
    auto w = homogeneous_weight2(c.invariants[k]);
    if (c.invariants[k].is_zero()) continue;
    if (!w || *w != c.generators[k].conformal_weight2())
      return "invariant for " + describe_generator(c.generators[k]) + " is not homogeneous of weight " +
             half_integer_text(c.generators[k].conformal_weight2());
  }
  for (auto i : c.plus) {
    if (c.gauge[i].is_zero()) continue;
    auto w = homogeneous_weight2(c.gauge[i]);
    if (!w || *w != c.grading.weight2[i]) return "gauge component " + c.g.label(i) + " is not homogeneous";
  }
  return std::nullopt;
}

std::optional<std::string> check_round_trip(const SliceChart& c) {
  PolyVector s = lift(c.ring, c.triple.f);
  for (std::size_t k = 0; k < c.generators.size(); ++k)
    for (std::size_t i = 0; i < c.g.dim(); ++i)
      if (c.generators[k].vector[i] != 0) s[i] += c.generators[k].vector[i] * c.invariants[k];
  PolyVector back = c.gauge;
  for (auto& p : back) p = -p;
  auto z = adjoint_orbit_map(c.g, s, back);
  auto gen = c.generic_point();
  for (std::size_t i = 0; i < c.g.dim(); ++i)
    if (z[i] != gen[i]) return "round trip differs along " + c.g.label(i) + ": " + z[i].to_string();
  return std::nullopt;
}

std::optional<std::string> check_dimension_accounting(const SliceChart& c) {
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::size_t have = 0;
    for (const auto& s : c.generators) have += s.parity == p;
    std::size_t want = c.grading.indices(0, p, c.g).size() + c.grading.indices(1, p, c.g).size();
    if (have != want)
      return std::string("number of ") + parity_name(p) + " invariants is " + std::to_string(have) + ", expected " +
             std::to_string(want);
  }
  return std::nullopt;
}

InvarianceReport verify_invariance(const SliceChart& c, int trials, std::uint64_t seed) {
  InvarianceReport rep;
  rep.trials = trials;
  if (trials <= 0) return rep;
  std::vector<VariableInfo> vars;
  for (auto i : c.coordinates)
    if (c.g.parity(i) == Parity::Odd) vars.push_back({"zeta_" + c.g.label(i), Parity::Odd, 0, 0});
  for (auto i : c.plus)
    if (c.g.parity(i) == Parity::Odd) vars.push_back({"eta_" + c.g.label(i), Parity::Odd, 0, 0});
  auto tr = Ring::make(vars);

  // all draws happen up front so the trials can run in any order
  RationalSampler rs(seed);
  std::vector<Vector> zdraw(trials), ydraw(trials);
  for (int t = 0; t < trials; ++t) {
    for (std::size_t a = 0; a < c.coordinates.size(); ++a) zdraw[t].push_back(rs.rational());
    for (std::size_t a = 0; a < c.plus.size(); ++a) ydraw[t].push_back(rs.rational());
  }
  std::vector<std::optional<std::string>> bad(trials);
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < trials; ++t) {
    PolyVector zc;
    for (std::size_t a = 0; a < c.coordinates.size(); ++a) {
      std::size_t i = c.coordinates[a];
      if (c.g.parity(i) == Parity::Odd)
        zc.push_back(zdraw[t][a] * SuperPolynomial::variable(tr, "zeta_" + c.g.label(i)));
      else
        zc.push_back(SuperPolynomial::constant(tr, zdraw[t][a]));
    }
    PolyVector y(c.g.dim(), SuperPolynomial(tr));
    for (std::size_t a = 0; a < c.plus.size(); ++a) {
      std::size_t i = c.plus[a];
      if (c.g.parity(i) == Parity::Odd)
        y[i] = ydraw[t][a] * SuperPolynomial::variable(tr, "eta_" + c.g.label(i));
      else
        y[i] = SuperPolynomial::constant(tr, ydraw[t][a]);
    }
    auto z = c.point(zc);
    auto w = adjoint_orbit_map(c.g, z, y);
    auto wc = c.coordinates_of(w);
    for (std::size_t k = 0; k < c.invariants.size(); ++k) {
      auto before = c.evaluate(c.invariants[k], zc), after = c.evaluate(c.invariants[k], wc);
      if (before != after) {
        bad[t] = "trial " + std::to_string(t) + ": invariant " + c.generators[k].label + " moves from " +
                 before.to_string() + " to " + after.to_string();
        break;
      }
    }
  }
  for (const auto& b : bad)
    if (b) {
      rep.pass = false;
      rep.counterexample = b;
      break;
    }
  return rep;
}

// ---------------------------------------------------------------------------

ZhuPoisson::ZhuPoisson(const SliceChart& c) : ring_(c.ring), n_(c.coordinates.size()) {
  const auto& g = c.g;
  if (!g.has_form()) throw Error("the Poisson structure needs an invariant form");
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (c.grading.weight2[i] <= 1) low_.push_back(i);
  if (low_.size() != n_) throw Error("g_{<=1/2} and g_{>=-1/2} have different dimensions");
  std::vector<std::size_t> row_of(g.dim(), n_);
  for (std::size_t r = 0; r < low_.size(); ++r) row_of[low_[r]] = r;

  RationalMatrix m(n_, n_);
  for (std::size_t r = 0; r < n_; ++r) {
    const std::size_t i = low_[r];
    const int sign = c.grading.weight2[i] == 1 ? 1 : -sign_pow(bit(g.parity(i)));
    Vector row(n_);
    for (std::size_t a = 0; a < n_; ++a) row[a] = sign * g.form()(c.coordinates[a], i);
    for (std::size_t a = 0; a < n_; ++a) m(r, a) = row[a];
    psi_rows_.push_back(std::move(row));
  }
  auto inv = inverse(m);
  if (!inv) throw Error("the form does not pair g_{<=1/2} with g_{>=-1/2}");

  auto psi_poly = [&](std::size_t r) {
    SuperPolynomial p(ring_);
    for (std::size_t a = 0; a < n_; ++a)
      if (psi_rows_[r][a] != 0) p += psi_rows_[r][a] * SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(a), 0});
    return p;
  };
  // brackets of the psi generators
  std::vector<SuperPolynomial> pb(n_ * n_, SuperPolynomial(ring_));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t s = 0; s < n_; ++s) {
      const std::size_t i = low_[r], j = low_[s];
      const int wi = c.grading.weight2[i], wj = c.grading.weight2[j];
      SuperPolynomial v(ring_);
      if (wi <= 0 && wj <= 0) {
        for (const auto& [k, cc] : g.structure(i, j)) v += cc * psi_poly(row_of[k]);
      } else if (wi == 1 && wj == 1) {
        v = SuperPolynomial::constant(ring_, g.form(c.triple.f, g.bracket(g.unit(i), g.unit(j))));
      }
      pb[r * n_ + s] = std::move(v);
    }
  // z = inv * psi
  table_.assign(n_ * n_, SuperPolynomial(ring_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      SuperPolynomial v(ring_);
      for (std::size_t r = 0; r < n_; ++r) {
        if ((*inv)(a, r) == 0) continue;
        for (std::size_t s = 0; s < n_; ++s)
          if ((*inv)(b, s) != 0 && !pb[r * n_ + s].is_zero()) v += ((*inv)(a, r) * (*inv)(b, s)) * pb[r * n_ + s];
      }
      table_[a * n_ + b] = std::move(v);
    }
}

SuperPolynomial ZhuPoisson::bracket(const SuperPolynomial& p, const SuperPolynomial& q) const {
  if (p.ring() != ring_ || q.ring() != ring_) throw Error("Poisson bracket of polynomials outside the slice coordinate ring");
  SuperPolynomial out(ring_);
  std::vector<SuperPolynomial> dq;
  for (std::size_t b = 0; b < n_; ++b) dq.push_back(partial_derivative(q, Var{static_cast<std::uint32_t>(b), 0}));
  for (std::size_t a = 0; a < n_; ++a) {
    auto pa = right_partial_derivative(p, Var{static_cast<std::uint32_t>(a), 0});
    if (pa.is_zero()) continue;
    for (std::size_t b = 0; b < n_; ++b) {
      const auto& t = table_[a * n_ + b];
      if (t.is_zero() || dq[b].is_zero()) continue;
      out += pa * t * dq[b];
    }
  }
  return out;
}

SuperPolynomial ZhuPoisson::psi(const Vector& u) const {
  SuperPolynomial p(ring_);
  for (std::size_t r = 0; r < low_.size(); ++r) {
    if (u.at(low_[r]) == 0) continue;
    for (std::size_t a = 0; a < n_; ++a)
      if (psi_rows_[r][a] != 0)
        p += (u[low_[r]] * psi_rows_[r][a]) * SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(a), 0});
  }
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0 && std::find(low_.begin(), low_.end(), i) == low_.end())
      throw Error("psi is only defined on g_{<=1/2}");
  return p;
}

SuperPolynomial zhu_poisson_bracket(const SliceChart& c, const SuperPolynomial& p, const SuperPolynomial& q) {
  return ZhuPoisson(c).bracket(p, q);
}

SuperPolynomial PoissonTable::bracket(const SuperPolynomial& p, const SuperPolynomial& q) const {
  SuperPolynomial out(slice_ring);
  const std::size_t n = slice_ring->size();
  for (std::size_t a = 0; a < n; ++a) {
    auto pa = right_partial_derivative(p, Var{static_cast<std::uint32_t>(a), 0});
    if (pa.is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      auto it = entries.find({a, b});
      if (it == entries.end() || it->second.is_zero()) continue;
      auto qb = partial_derivative(q, Var{static_cast<std::uint32_t>(b), 0});
      if (!qb.is_zero()) out += pa * it->second * qb;
    }
  }
  return out;
}

PoissonTable slice_poisson_table(const SliceChart& c) {
  ZhuPoisson zp(c);
  PoissonTable t;
  std::vector<VariableInfo> vars;
  for (const auto& s : c.generators) vars.push_back({"s_" + s.label, s.parity, s.conformal_weight2(), 0});
  t.slice_ring = Ring::make(vars);
  PolyVector sp = lift(t.slice_ring, c.triple.f);
  for (std::size_t k = 0; k < c.generators.size(); ++k)
    for (std::size_t i = 0; i < c.g.dim(); ++i)
      if (c.generators[k].vector[i] != 0)
        sp[i] += c.generators[k].vector[i] * SuperPolynomial::variable(t.slice_ring, Var{static_cast<std::uint32_t>(k), 0});
  const PolyVector coords = c.coordinates_of(sp);
  const std::size_t n = c.generators.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<SuperPolynomial> vals(pairs.size(), SuperPolynomial(t.slice_ring));
  std::vector<int> ok(pairs.size(), 1);
#pragma omp parallel for schedule(dynamic)
  for (long q = 0; q < static_cast<long>(pairs.size()); ++q) {
    auto [a, b] = pairs[q];
    auto full = zp.bracket(c.invariants[a], c.invariants[b]);
    auto restricted = c.evaluate(full, coords);
    auto pulled = substitute(restricted, c.ring, [&](Var v) { return c.invariants[v.base]; });
    ok[q] = pulled == full;
    vals[q] = std::move(restricted);
  }
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    if (!ok[q])
      throw Error("Poisson bracket {" + c.generators[pairs[q].first].label + ", " + c.generators[pairs[q].second].label +
                  "} is not a function on the slice");
    t.entries.insert_or_assign(pairs[q], vals[q]);
  }
  return t;
}

std::optional<std::string> check_poisson_antisymmetry(const PoissonTable& t) {
  const auto& r = *t.slice_ring;
  for (const auto& [ab, v] : t.entries) {
    auto [a, b] = ab;
    int s = -sign_pow(bit(r.info(a).parity) * bit(r.info(b).parity));
    const auto& w = t.entries.at({b, a});
    if (v != s * w) return "antisymmetry fails for (" + r.info(a).name + ", " + r.info(b).name + ")";
  }
  return std::nullopt;
}

std::optional<std::string> check_poisson_jacobi(const PoissonTable& t) {
  const auto& r = t.slice_ring;
  const std::size_t n = r->size();
  auto gen = [&](std::size_t k) { return SuperPolynomial::variable(r, Var{static_cast<std::uint32_t>(k), 0}); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = t.bracket(gen(a), t.bracket(gen(b), gen(c)));
        int s = sign_pow(bit(r->info(a).parity) * bit(r->info(b).parity));
        auto rhs = t.bracket(t.bracket(gen(a), gen(b)), gen(c)) + s * t.bracket(gen(b), t.bracket(gen(a), gen(c)));
        if (lhs != rhs)
          return "Jacobi fails for (" + r->info(a).name + ", " + r->info(b).name + ", " + r->info(c).name + ")";
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

MiuraImage finite_miura(const SliceChart& c) {
  MiuraImage m;
  m.generators = c.generators;
  std::vector<VariableInfo> vars;
  std::vector<long> to_ini(c.coordinates.size(), -1);
  for (std::size_t a = 0; a < c.coordinates.size(); ++a) {
    std::size_t i = c.coordinates[a];
    if (c.grading.weight2[i] <= 0) {
      to_ini[a] = static_cast<long>(m.coordinates.size());
      m.coordinates.push_back(i);
      vars.push_back(c.ring->info(a));
    }
  }
  m.ring = Ring::make(vars);
  for (const auto& inv : c.invariants)
    m.images.push_back(substitute(inv, m.ring, [&](Var v) {
      if (to_ini[v.base] < 0) return SuperPolynomial(m.ring);
      return SuperPolynomial::variable(m.ring, Var{static_cast<std::uint32_t>(to_ini[v.base]), 0});
    }));
  for (auto i : m.coordinates) m.witness.push_back(c.g.parity(i) == Parity::Even ? Scalar(-c.triple.h[i]) : Scalar(0));
  return m;
}

std::optional<std::string> check_miura_parity(const MiuraImage& m) {
  for (std::size_t k = 0; k < m.images.size(); ++k)
    if (!m.images[k].is_zero() && m.images[k].parity() != m.generators[k].parity)
      return "Miura image of " + m.generators[k].label + " has the wrong parity";
  return std::nullopt;
}

InjectivityCertificate injectivity_certificate(const MiuraImage& m, int trials, std::uint64_t seed) {
  InjectivityCertificate cert;
  const std::size_t nv = m.ring->size();
  std::vector<std::size_t> even_vars, odd_vars, even_gens, odd_gens;
  for (std::size_t a = 0; a < nv; ++a) (m.ring->info(a).parity == Parity::Even ? even_vars : odd_vars).push_back(a);
  for (std::size_t k = 0; k < m.generators.size(); ++k)
    (m.generators[k].parity == Parity::Even ? even_gens : odd_gens).push_back(k);
  cert.even_target = even_gens.size();
  cert.odd_target = odd_gens.size();

  // even part with odd coordinates set to zero
  std::vector<std::vector<SuperPolynomial>> jac;
  for (auto k : even_gens) {
    auto reduced = m.images[k].odd_degree_part(0);
    std::vector<SuperPolynomial> row;
    for (auto a : even_vars) row.push_back(partial_derivative(reduced, Var{static_cast<std::uint32_t>(a), 0}));
    jac.push_back(std::move(row));
  }
  // odd part: coefficient of each odd coordinate in the odd-linear part
  std::vector<std::vector<SuperPolynomial>> odd;
  for (auto k : odd_gens) {
    auto lin = m.images[k].odd_degree_part(1);
    std::vector<SuperPolynomial> row;
    for (auto a : odd_vars) row.push_back(partial_derivative(lin, Var{static_cast<std::uint32_t>(a), 0}));
    odd.push_back(std::move(row));
  }
  auto rank_at = [&](const std::vector<std::vector<SuperPolynomial>>& mat, std::size_t cols, const Vector& pt) {
    RationalMatrix r(mat.size(), cols);
    for (std::size_t i = 0; i < mat.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) r(i, j) = evaluate_even(mat[i][j], pt);
    return exact_rank(r);
  };

  RationalSampler rs(seed);
  std::vector<Vector> random_points;
  for (int t = 0; t < trials; ++t) {
    Vector pt(nv);
    for (auto a : even_vars) pt[a] = rs.integer(-10, 10);
    random_points.push_back(pt);
  }
  auto run = [&](const std::vector<std::vector<SuperPolynomial>>& mat, std::size_t cols, std::size_t target,
                 std::vector<WitnessPoint>& log) -> std::size_t {
    if (target == 0) return 0;
    std::size_t best = 0;
    std::vector<std::pair<std::string, Vector>> candidates;
    for (const auto& p : random_points) candidates.emplace_back("random", p);
    candidates.emplace_back("exp(e)", m.witness);
    for (const auto& [src, pt] : candidates) {
      std::size_t rk = rank_at(mat, cols, pt);
      Vector even_only;
      for (auto a : even_vars) even_only.push_back(pt[a]);
      log.push_back({src, even_only, rk});
      best = std::max(best, rk);
      if (rk == target) break;
    }
    return best;
  };
  cert.even_rank = run(jac, even_vars.size(), cert.even_target, cert.even_points);
  cert.odd_rank = run(odd, odd_vars.size(), cert.odd_target, cert.odd_points);
  cert.pass = cert.even_rank == cert.even_target && cert.odd_rank == cert.odd_target;
  return cert;
}

}  // namespace superslice
