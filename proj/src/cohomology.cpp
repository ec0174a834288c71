#include "superslice/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "superslice/nilpotent_group.hpp"

namespace superslice {

SuperPolynomial VectorFieldAction::apply(std::size_t a, const SuperPolynomial& p) const {
  return apply_derivation(p, parities.at(a), [&](Var v) { return images.at(a).at(v.base); });
}

namespace {

// a ring with the given variables plus an even and an odd infinitesimal
RingPtr with_epsilon(const std::vector<VariableInfo>& vars) {
  auto v = vars;
  v.push_back({"eps0", Parity::Even, 0, 0});
  v.push_back({"eps1", Parity::Odd, 0, 0});
  return Ring::make(v);
}

// first-order coefficient of eps in p, moved back to the ring without eps
SuperPolynomial first_order(const SuperPolynomial& p, Var eps, const RingPtr& target) {
  auto d = partial_derivative(p, eps);
  const auto n = target->size();
  return substitute(d, target, [&](Var v) {
    if (v.base >= n) return SuperPolynomial(target);
    return SuperPolynomial::variable(target, v);
  });
}

}  // namespace

VectorFieldAction regular_action(const LieSuperalgebra& n, const std::vector<int>& weight2) {
  if (weight2.size() != n.dim()) throw Error("one weight per basis vector expected");
  for (int w : weight2)
    if (w <= 0) throw Error("regular action needs a positive grading");
  if (!descending_central_series(n).nilpotent) throw Error(n.name() + " is not nilpotent");
  std::vector<VariableInfo> vars;
  for (std::size_t i = 0; i < n.dim(); ++i) vars.push_back({"x_" + n.label(i), n.parity(i), -weight2[i], 0});
  VectorFieldAction act;
  act.ring = Ring::make(vars);
  auto ext = with_epsilon(vars);
  const Var eps[2] = {Var{static_cast<std::uint32_t>(n.dim()), 0}, Var{static_cast<std::uint32_t>(n.dim() + 1), 0}};
  PolyVector y;
  for (std::size_t i = 0; i < n.dim(); ++i) y.push_back(SuperPolynomial::variable(ext, Var{static_cast<std::uint32_t>(i), 0}));
  for (std::size_t a = 0; a < n.dim(); ++a) {
    const Var e = eps[bit(n.parity(a))];
    PolyVector step(n.dim(), SuperPolynomial(ext));
    step[a] = SuperPolynomial::variable(ext, e);
    auto prod = bch_product(n, y, step);
    PolyVector img;
    for (const auto& comp : prod) img.push_back(first_order(comp, e, act.ring));
    act.parities.push_back(n.parity(a));
    act.images.push_back(std::move(img));
  }
  return act;
}

VectorFieldAction slice_module_action(const SliceChart& c) {
  const auto& g = c.g;
  auto ext = with_epsilon(c.ring->variables());
  const std::size_t nv = c.ring->size();
  const Var eps[2] = {Var{static_cast<std::uint32_t>(nv), 0}, Var{static_cast<std::uint32_t>(nv + 1), 0}};
  PolyVector coords;
  for (std::size_t a = 0; a < nv; ++a) coords.push_back(SuperPolynomial::variable(ext, Var{static_cast<std::uint32_t>(a), 0}));
  const auto z = c.point(coords);
  VectorFieldAction act;
  act.ring = c.ring;
  for (auto i : c.plus) {
    const Var e = eps[bit(g.parity(i))];
    PolyVector y(g.dim(), SuperPolynomial(ext));
    y[i] = SuperPolynomial::variable(ext, e);
    auto w = g.bracket(z, y);
    PolyVector img;
    for (auto k : c.coordinates) img.push_back(first_order(w[k], e, c.ring));
    act.parities.push_back(g.parity(i));
    act.images.push_back(std::move(img));
  }
  return act;
}

std::optional<std::string> check_action_homomorphism(const VectorFieldAction& act, const LieSuperalgebra& n) {
  const std::size_t nv = act.ring->size();
  for (std::size_t a = 0; a < n.dim(); ++a)
    for (std::size_t b = 0; b < n.dim(); ++b) {
      const int s = sign_pow(bit(n.parity(a)) * bit(n.parity(b)));
      for (std::size_t v = 0; v < nv; ++v) {
        auto x = SuperPolynomial::variable(act.ring, Var{static_cast<std::uint32_t>(v), 0});
        auto lhs = act.apply(a, act.apply(b, x)) - s * act.apply(b, act.apply(a, x));
        SuperPolynomial rhs(act.ring);
        for (const auto& [k, c] : n.structure(a, b)) rhs += c * act.images[k][v];
        if (lhs != rhs)
          return "[D(" + n.label(a) + "), D(" + n.label(b) + ")] differs from D([" + n.label(a) + ", " + n.label(b) +
                 "]) on " + act.ring->info(v).name;
      }
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GradedComplex::GradedComplex(RingPtr ring, std::vector<Var> generators, const VarImage& d, int max_abs_weight2)
    : ring_(std::move(ring)), generators_(std::move(generators)), max_abs_weight2_(max_abs_weight2) {
  std::sort(generators_.begin(), generators_.end());
  if (max_abs_weight2_ < 0) throw Error("negative weight cutoff");
  int sign = 0;
  for (auto v : generators_) {
    ring_->check(v);
    int w = ring_->weight2(v);
    if (w == 0) throw Error("generator " + ring_->var_name(v) + " has weight zero");
    int s = w > 0 ? 1 : -1;
    if (sign != 0 && s != sign) throw Error("generator weights must share a sign");
    sign = s;
  }
  sign_ = sign == 0 ? 1 : sign;
  for (auto v : generators_) {
    auto img = d(v);
    if (img.ring() != ring_) throw Error("differential image outside the complex ring");
    if (!img.is_zero()) {
      auto w = homogeneous_weight2(img);
      if (!w || *w != ring_->weight2(v)) throw Error("d does not preserve the weight of " + ring_->var_name(v));
      if (img.parity() != flip(ring_->parity(v))) throw Error("d(" + ring_->var_name(v) + ") has the wrong parity");
      for (const auto& [m, c] : img.terms())
        if (m.cohomological_degree(*ring_) != ring_->degree(v) + 1)
          throw Error("d(" + ring_->var_name(v) + ") is not of degree one higher");
    }
    images_.emplace(v, std::move(img));
  }

  // all monomials with |weight| within the cutoff
  std::vector<Monomial::Factor> cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int used, int deg) {
    if (idx == generators_.size()) {
      blocks_[{deg, sign_ * used}].push_back(Monomial(cur));
      return;
    }
    const Var v = generators_[idx];
    const int w = std::abs(ring_->weight2(v));
    const std::uint32_t cap = ring_->parity(v) == Parity::Odd ? 1u : ~0u;
    rec(idx + 1, used, deg);
    for (std::uint32_t e = 1; e <= cap && used + static_cast<int>(e) * w <= max_abs_weight2_; ++e) {
      cur.push_back({v, e});
      rec(idx + 1, used + static_cast<int>(e) * w, deg + static_cast<int>(e) * ring_->degree(v));
      cur.pop_back();
    }
  };
  rec(0, 0, 0);
  for (auto& [key, b] : blocks_) std::sort(b.begin(), b.end());
}

SuperPolynomial GradedComplex::d(const SuperPolynomial& p) const {
  return apply_derivation(p, Parity::Odd, [&](Var v) {
    auto it = images_.find(v);
    if (it == images_.end()) throw Error("d is not defined on " + ring_->var_name(v));
    return it->second;
  });
}

std::vector<std::pair<int, int>> GradedComplex::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, b] : blocks_) out.push_back(key);
  return out;
}

bool GradedComplex::in_range(int weight2) const {
  return std::abs(weight2) <= max_abs_weight2_ && (weight2 == 0 || (weight2 > 0) == (sign_ > 0));
}

const std::vector<Monomial>& GradedComplex::basis(int k, int weight2) const {
  static const std::vector<Monomial> empty;
  if (!in_range(weight2)) throw Error("block outside the weight truncation");
  auto it = blocks_.find({k, weight2});
  return it == blocks_.end() ? empty : it->second;
}

RationalMatrix GradedComplex::differential(int k, int weight2) const {
  const auto& src = basis(k, weight2);
  const auto& dst = basis(k + 1, weight2);
  std::map<Monomial, std::size_t> row;
  for (std::size_t i = 0; i < dst.size(); ++i) row.emplace(dst[i], i);
  RationalMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    auto img = d(SuperPolynomial::monomial(ring_, src[j]));
    for (const auto& [mono, c] : img.terms()) {
      auto it = row.find(mono);
      if (it == row.end()) throw Error("d left the block it was applied to");
      m(it->second, j) = c;
    }
  }
  return m;
}

std::optional<std::string> check_d_squared(const GradedComplex& c) {
  for (auto v : c.generators()) {
    auto dd = c.d(c.d_of(v));
    if (!dd.is_zero()) return "d^2(" + c.ring()->var_name(v) + ") = " + dd.to_string();
  }
  for (auto [k, w] : c.blocks()) {
    if (c.basis(k + 1, w).empty() || c.basis(k + 2, w).empty()) continue;
    auto prod = c.differential(k + 1, w) * c.differential(k, w);
    if (!prod.is_zero()) return "d^2 != 0 on block (" + std::to_string(k) + ", " + half_integer_text(w) + ")";
  }
  return std::nullopt;
}

std::size_t CohomologyTable::at(int k, int weight2) const {
  auto it = dims.find({k, weight2});
  return it == dims.end() ? 0 : it->second;
}

CohomologyTable compute_cohomology(const GradedComplex& c, Execution ex) {
  const auto keys = c.blocks();
  std::vector<std::size_t> rk(keys.size(), 0);
  const bool par = ex == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (long q = 0; q < static_cast<long>(keys.size()); ++q) {
    auto [k, w] = keys[q];
    if (c.basis(k + 1, w).empty()) continue;
    auto m = c.differential(k, w);
    rk[q] = par ? exact_rank(m) : exact_rank_serial(m);
  }
  CohomologyTable t;
  for (std::size_t q = 0; q < keys.size(); ++q) t.ranks[keys[q]] = rk[q];
  for (auto [k, w] : keys) {
    std::size_t in = 0;
    auto it = t.ranks.find({k - 1, w});
    if (it != t.ranks.end()) in = it->second;
    t.dims[{k, w}] = c.basis(k, w).size() - t.ranks[{k, w}] - in;
  }
  return t;
}

std::size_t cohomology_dims(const GradedComplex& c, int k, int weight2) {
  c.basis(k, weight2);  // range check
  auto rank_of = [&](int kk) -> std::size_t {
    if (c.basis(kk, weight2).empty() || c.basis(kk + 1, weight2).empty()) return 0;
    return exact_rank(c.differential(kk, weight2));
  };
  return c.basis(k, weight2).size() - rank_of(k) - rank_of(k - 1);
}

GradedComplex build_ce_complex(const LieSuperalgebra& n, const VectorFieldAction& act,
                               const std::vector<int>& ghost_weight2, int max_abs_weight2) {
  if (act.images.size() != n.dim() || ghost_weight2.size() != n.dim())
    throw Error("one vector field and one ghost weight per basis vector expected");
  auto vars = act.ring->variables();
  const std::size_t nc = vars.size();
  for (std::size_t i = 0; i < n.dim(); ++i) vars.push_back({"phi_" + n.label(i), flip(n.parity(i)), ghost_weight2[i], 1});
  auto ring = Ring::make(vars);
  auto embed = [&](const SuperPolynomial& p) {
    return substitute(p, ring, [&](Var v) { return SuperPolynomial::variable(ring, v); });
  };
  auto phi = [&](std::size_t i) { return SuperPolynomial::variable(ring, Var{static_cast<std::uint32_t>(nc + i), 0}); };

  std::vector<SuperPolynomial> img(vars.size(), SuperPolynomial(ring));
  for (std::size_t v = 0; v < nc; ++v)
    for (std::size_t a = 0; a < n.dim(); ++a)
      if (!act.images[a][v].is_zero()) img[v] += phi(a) * embed(act.images[a][v]);
  // Maurer-Cartan: d(sum phi^a x_a) = -1/2 [sum phi^a x_a, sum phi^b x_b]
  for (std::size_t a = 0; a < n.dim(); ++a)
    for (std::size_t b = 0; b < n.dim(); ++b) {
      const int s = sign_pow(bit(n.parity(a)) * (bit(n.parity(b)) + 1));
      for (const auto& [gm, c] : n.structure(a, b)) img[nc + gm] += (Scalar(-s, 2) * c) * (phi(a) * phi(b));
    }
  std::vector<Var> gens;
  for (std::size_t v = 0; v < vars.size(); ++v) gens.push_back(Var{static_cast<std::uint32_t>(v), 0});
  GradedComplex cx(ring, gens, [&](Var v) { return img[v.base]; }, max_abs_weight2);
  for (auto v : cx.generators()) {
    auto dd = cx.d(cx.d_of(v));
    if (!dd.is_zero()) throw Error("d^2 != 0 on " + ring->var_name(v) + ": " + dd.to_string());
  }
  return cx;
}

GradedComplex build_ce_complex(const LieSuperalgebra& n, const std::vector<int>& weight2, int max_abs_weight2) {
  auto act = regular_action(n, weight2);
  std::vector<int> gw;
  for (int w : weight2) gw.push_back(-w);
  return build_ce_complex(n, act, gw, max_abs_weight2);
}

GradedComplex build_slice_ce_complex(const SliceChart& c, int max_weight2) {
  auto n = basis_subalgebra(c.g, c.plus, "g_+");
  auto act = slice_module_action(c);
  std::vector<int> gw;
  for (auto i : c.plus) gw.push_back(c.grading.weight2[i]);
  return build_ce_complex(n, act, gw, max_weight2);
}

std::map<int, std::size_t> free_monomial_counts(const std::vector<int>& weight2, const std::vector<Parity>& parity,
                                                int max_weight2, bool jets) {
  std::vector<Scalar> series(max_weight2 + 1, 0);
  series[0] = 1;
  for (std::size_t g = 0; g < weight2.size(); ++g) {
    if (weight2[g] <= 0) throw Error("generator weights must be positive");
    for (int w = weight2[g]; w <= max_weight2; w += 2) {
      if (parity[g] == Parity::Odd) {
        for (int t = max_weight2; t >= w; --t) series[t] += series[t - w];
      } else {
        for (int t = w; t <= max_weight2; ++t) series[t] += series[t - w];
      }
      if (!jets) break;
    }
  }
  std::map<int, std::size_t> out;
  for (int t = 0; t <= max_weight2; ++t) out[t] = series[t].get_num().get_ui();
  return out;
}

DeRhamReport de_rham_check(int p, int q, int max_degree) {
  if (p < 0 || q < 0 || max_degree < 0) throw Error("de Rham check needs non-negative sizes");
  std::vector<VariableInfo> vars;
  for (int i = 1; i <= p; ++i) vars.push_back({"x" + std::to_string(i), Parity::Even, 2, 0});
  for (int j = 1; j <= q; ++j) vars.push_back({"theta" + std::to_string(j), Parity::Odd, 2, 0});
  for (int i = 1; i <= p; ++i) vars.push_back({"dx" + std::to_string(i), Parity::Odd, 2, 1});
  for (int j = 1; j <= q; ++j) vars.push_back({"dtheta" + std::to_string(j), Parity::Even, 2, 1});
  auto ring = Ring::make(vars);
  const std::size_t half = static_cast<std::size_t>(p + q);
  std::vector<Var> gens;
  for (std::size_t v = 0; v < vars.size(); ++v) gens.push_back(Var{static_cast<std::uint32_t>(v), 0});
  GradedComplex cx(
      ring, gens,
      [&](Var v) {
        if (v.base < half) return SuperPolynomial::variable(ring, Var{static_cast<std::uint32_t>(v.base + half), 0});
        return SuperPolynomial(ring);
      },
      2 * max_degree);
  DeRhamReport rep;
  rep.table = compute_cohomology(cx);
  rep.pass = !check_d_squared(cx);
  for (const auto& [key, dim] : rep.table.dims)
    if (dim != (key == std::make_pair(0, 0) ? 1u : 0u)) rep.pass = false;
  return rep;
}

}  // namespace superslice
