#include "superslice/pva.hpp"

#include <algorithm>

namespace superslice {

namespace {

Scalar binom(unsigned n, unsigned k) {
  Scalar r = 1;
  for (unsigned i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

Monomial without_first(const Monomial& m) {
  auto f = m.factors();
  if (f.front().second == 1) f.erase(f.begin());
  else --f.front().second;
  return Monomial(f);
}

// rows of the inverse identification: chart variable a -> coefficients over psi generators
std::vector<Vector> identification_inverse(const ZhuPoisson& zp) {
  const auto& rows = zp.psi_rows();
  const std::size_t n = rows.size();
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t a = 0; a < n; ++a) m(r, a) = rows[r][a];
  auto inv = inverse(m);
  if (!inv) throw Error("identification is singular");
  std::vector<Vector> out(n, Vector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r) out[a][r] = (*inv)(a, r);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

LambdaPolynomial LambdaPolynomial::constant(const SuperPolynomial& c) {
  LambdaPolynomial l(c.ring());
  l.add(0, c);
  return l;
}

SuperPolynomial LambdaPolynomial::coefficient(unsigned k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? SuperPolynomial(ring_) : it->second;
}

void LambdaPolynomial::add(unsigned k, const SuperPolynomial& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(k);
  if (it == coeffs_.end()) {
    coeffs_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

LambdaPolynomial& LambdaPolynomial::operator+=(const LambdaPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

LambdaPolynomial& LambdaPolynomial::operator-=(const LambdaPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

LambdaPolynomial operator*(const Scalar& s, const LambdaPolynomial& a) {
  LambdaPolynomial out(a.ring_);
  for (const auto& [k, c] : a.coeffs_) out.add(k, s * c);
  return out;
}

LambdaPolynomial operator*(const SuperPolynomial& p, const LambdaPolynomial& a) {
  LambdaPolynomial out(a.ring_);
  for (const auto& [k, c] : a.coeffs_) out.add(k, p * c);
  return out;
}

LambdaPolynomial operator*(const LambdaPolynomial& a, const SuperPolynomial& p) {
  LambdaPolynomial out(a.ring_);
  for (const auto& [k, c] : a.coeffs_) out.add(k, c * p);
  return out;
}

LambdaPolynomial LambdaPolynomial::shifted(unsigned n) const {
  if (n == 0) return *this;
  LambdaPolynomial out(ring_);
  for (const auto& [k, c] : coeffs_) {
    SuperPolynomial dc = c;
    for (unsigned i = 0; i <= n; ++i) {
      out.add(k + n - i, binom(n, i) * dc);
      if (i < n) dc = total_derivative(dc);
    }
  }
  return out;
}

LambdaPolynomial LambdaPolynomial::reflected() const {
  LambdaPolynomial out(ring_);
  for (const auto& [k, c] : coeffs_) {
    SuperPolynomial dc = c;
    const int s = k % 2 ? -1 : 1;
    for (unsigned i = 0; i <= k; ++i) {
      out.add(k - i, (s * binom(k, i)) * dc);
      if (i < k) dc = total_derivative(dc);
    }
  }
  return out;
}

LambdaPolynomial LambdaPolynomial::map(const std::function<SuperPolynomial(const SuperPolynomial&)>& f,
                                       RingPtr target) const {
  LambdaPolynomial out(std::move(target));
  for (const auto& [k, c] : coeffs_) out.add(k, f(c));
  return out;
}

std::string LambdaPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!s.empty()) s += " + ";
    if (it->first == 0) s += it->second.to_string();
    else {
      s += "(" + it->second.to_string() + ")*lambda";
      if (it->first > 1) s += "^" + std::to_string(it->first);
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

PoissonVertexAlgebra::PoissonVertexAlgebra(RingPtr ring, const Table& table) : ring_(std::move(ring)) {
  if (!ring_->differential()) throw Error("a Poisson vertex algebra lives on a differential ring");
  n_ = ring_->size();
  table_.reserve(n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      auto t = table(a, b);
      if (t.ring() != ring_) throw Error("generator bracket outside the ring");
      table_.push_back(std::move(t));
    }
}

LambdaPolynomial PoissonVertexAlgebra::generator_left(std::size_t b, const Monomial& a) const {
  LambdaPolynomial out(ring_);
  if (a.is_one()) return out;
  const Var w = a.factors().front().first;
  const Monomial rest = without_first(a);
  out += table_[b * n_ + w.base].shifted(w.order) * SuperPolynomial::monomial(ring_, rest);
  const int s = sign_pow(bit(ring_->info(b).parity) * bit(ring_->parity(w)));
  auto inner = generator_left(b, rest);
  if (!inner.is_zero()) out += (s * SuperPolynomial::variable(ring_, w)) * inner;
  return out;
}

LambdaPolynomial PoissonVertexAlgebra::mono_bracket(const Monomial& a, const Monomial& b) const {
  LambdaPolynomial out(ring_);
  if (a.is_one() || b.is_one()) return out;
  const Var v = b.factors().front().first;
  const Monomial rest = without_first(b);
  const int pa = bit(a.parity(*ring_));
  // {a_lambda x} = -(-1)^{a x} {x_{-lambda-d} a}
  auto ax = (-sign_pow(pa * bit(ring_->parity(v)))) * generator_left(v.base, a).reflected();
  out += ax.shifted(v.order) * SuperPolynomial::monomial(ring_, rest);
  auto inner = mono_bracket(a, rest);
  if (!inner.is_zero()) out += (sign_pow(pa * bit(ring_->parity(v))) * SuperPolynomial::variable(ring_, v)) * inner;
  return out;
}

LambdaPolynomial PoissonVertexAlgebra::bracket(const SuperPolynomial& a, const SuperPolynomial& b) const {
  if (a.ring() != ring_ || b.ring() != ring_) throw Error("lambda-bracket of elements outside the ring");
  LambdaPolynomial out(ring_);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      auto t = mono_bracket(ma, mb);
      if (!t.is_zero()) out += (ca * cb) * t;
    }
  return out;
}

std::optional<std::string> check_skewsymmetry(const PoissonVertexAlgebra& p) {
  const auto& r = *p.ring();
  for (std::size_t a = 0; a < r.size(); ++a)
    for (std::size_t b = 0; b < r.size(); ++b) {
      const int s = -sign_pow(bit(r.info(a).parity) * bit(r.info(b).parity));
      if (!(p.generator_bracket(b, a) == s * p.generator_bracket(a, b).reflected()))
        return "skewsymmetry fails for (" + r.info(a).name + ", " + r.info(b).name + ")";
    }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

BrstComplex::BrstComplex(const SliceChart& c) : chart_(c) {
  const auto& g = c.g;
  const auto& gr = c.grading;
  ZhuPoisson zp(c);
  fields_ = zp.low();
  ghosts_ = c.plus;
  std::vector<VariableInfo> vars;
  for (auto i : fields_) vars.push_back({g.label(i), g.parity(i), 2 - gr.weight2[i], 0});
  for (auto i : ghosts_) vars.push_back({"phi_" + g.label(i), flip(g.parity(i)), gr.weight2[i], 1});
  ring_ = Ring::make(vars, true, 2);
  const std::size_t nf = fields_.size();

  auto inv = identification_inverse(zp);
  for (std::size_t a = 0; a < c.coordinates.size(); ++a) {
    SuperPolynomial z(ring_);
    for (std::size_t r = 0; r < nf; ++r)
      if (inv[a][r] != 0) z += inv[a][r] * SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(r), 0});
    z_images_.push_back(std::move(z));
  }

  q_.assign(vars.size(), SuperPolynomial(ring_));
  auto phi = [&](std::size_t k) { return SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(nf + k), 0}); };
  const auto act = slice_module_action(c);
  for (std::size_t r = 0; r < nf; ++r)
    for (std::size_t k = 0; k < ghosts_.size(); ++k) {
      SuperPolynomial dpsi(c.ring);
      for (std::size_t a = 0; a < c.coordinates.size(); ++a)
        if (zp.psi_rows()[r][a] != 0) dpsi += zp.psi_rows()[r][a] * act.images[k][a];
      if (!dpsi.is_zero()) q_[r] += phi(k) * from_chart(dpsi);
    }
  std::vector<long> ghost_of(g.dim(), -1);
  for (std::size_t k = 0; k < ghosts_.size(); ++k) ghost_of[ghosts_[k]] = static_cast<long>(k);
  for (std::size_t a = 0; a < ghosts_.size(); ++a)
    for (std::size_t b = 0; b < ghosts_.size(); ++b) {
      const int s = sign_pow(bit(g.parity(ghosts_[a])) * (bit(g.parity(ghosts_[b])) + 1));
      for (const auto& [k, cc] : g.structure(ghosts_[a], ghosts_[b]))
        q_[nf + ghost_of[k]] += (Scalar(-s, 2) * cc) * (phi(a) * phi(b));
    }

  // generator lambda-brackets; all are independent of lambda
  std::vector<long> field_of(g.dim(), -1);
  for (std::size_t r = 0; r < nf; ++r) field_of[fields_[r]] = static_cast<long>(r);
  auto field_var = [&](std::size_t basis) {
    return SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(field_of.at(basis)), 0});
  };
  auto ghost_field = [&](std::size_t a, std::size_t r) {
    // {phi^a_lambda u} = sum_b (coefficient of x_a in [u, x_b]) phi^b
    SuperPolynomial v(ring_);
    const std::size_t u = fields_[r];
    if (gr.weight2[u] > 0) return v;
    for (std::size_t b = 0; b < ghosts_.size(); ++b)
      for (const auto& [k, cc] : g.structure(u, ghosts_[b]))
        if (k == ghosts_[a]) v += cc * phi(b);
    return v;
  };
  auto table = [&](std::size_t x, std::size_t y) {
    LambdaPolynomial out(ring_);
    if (x < nf && y < nf) {
      const std::size_t i = fields_[x], j = fields_[y];
      const int wi = gr.weight2[i], wj = gr.weight2[j];
      SuperPolynomial v(ring_);
      if (wi <= 0 && wj <= 0) {
        for (const auto& [k, cc] : g.structure(i, j)) v += cc * field_var(k);
      } else if (wi == 1 && wj == 1) {
        v = SuperPolynomial::constant(ring_, g.form(c.triple.f, g.bracket(g.unit(i), g.unit(j))));
      }
      out.add(0, v);
    } else if (x >= nf && y < nf) {
      out.add(0, ghost_field(x - nf, y));
    } else if (x < nf && y >= nf) {
      const int s = -sign_pow(bit(ring_->info(x).parity) * bit(ring_->info(y).parity));
      out.add(0, s * ghost_field(y - nf, x));
    }
    return out;
  };
  pva_ = std::make_shared<PoissonVertexAlgebra>(ring_, table);
}

SuperPolynomial BrstComplex::field(std::size_t basis_index, unsigned order) const {
  auto it = std::find(fields_.begin(), fields_.end(), basis_index);
  if (it == fields_.end()) throw Error(chart_.g.label(basis_index) + " is not a field of the complex");
  return SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(it - fields_.begin()), order});
}

SuperPolynomial BrstComplex::ghost(std::size_t basis_index, unsigned order) const {
  auto it = std::find(ghosts_.begin(), ghosts_.end(), basis_index);
  if (it == ghosts_.end()) throw Error(chart_.g.label(basis_index) + " has no ghost");
  return SuperPolynomial::variable(ring_, Var{static_cast<std::uint32_t>(fields_.size() + (it - ghosts_.begin())), order});
}

SuperPolynomial BrstComplex::Q(const SuperPolynomial& a) const {
  return apply_derivation(a, Parity::Odd, [&](Var v) { return total_derivative(q_.at(v.base), v.order); });
}

SuperPolynomial BrstComplex::from_chart(const SuperPolynomial& p) const {
  return substitute(p, ring_, [&](Var v) { return z_images_.at(v.base); });
}

std::vector<SuperPolynomial> BrstComplex::representatives() const {
  std::vector<SuperPolynomial> out;
  for (const auto& inv : chart_.invariants) out.push_back(from_chart(inv));
  return out;
}

std::optional<std::string> check_q_squared(const BrstComplex& b) {
  for (std::size_t v = 0; v < b.ring()->size(); ++v) {
    auto qq = b.Q(b.Q_generator(v));
    if (!qq.is_zero()) return "Q^2(" + b.ring()->info(v).name + ") = " + qq.to_string();
  }
  return std::nullopt;
}

std::optional<std::string> check_q_bracket_derivation(const BrstComplex& b) {
  const auto& r = b.ring();
  auto q = [&](const SuperPolynomial& p) { return b.Q(p); };
  for (std::size_t x = 0; x < r->size(); ++x)
    for (std::size_t y = 0; y < r->size(); ++y) {
      auto gx = SuperPolynomial::variable(r, Var{static_cast<std::uint32_t>(x), 0});
      auto gy = SuperPolynomial::variable(r, Var{static_cast<std::uint32_t>(y), 0});
      auto lhs = b.pva().bracket(gx, gy).map(q, r);
      const int s = sign_pow(bit(r->info(x).parity));
      auto rhs = b.pva().bracket(b.Q(gx), gy) + s * b.pva().bracket(gx, b.Q(gy));
      if (!(lhs == rhs)) return "Q is not a derivation of {" + r->info(x).name + "_lambda " + r->info(y).name + "}";
    }
  return std::nullopt;
}

GradedComplex jet_complex(const BrstComplex& b, int max_weight2) {
  const auto& r = b.ring();
  std::vector<Var> gens;
  for (std::size_t v = 0; v < r->size(); ++v)
    for (unsigned n = 0; r->info(v).weight2 + 2 * static_cast<int>(n) <= max_weight2; ++n)
      gens.push_back(Var{static_cast<std::uint32_t>(v), n});
  return GradedComplex(r, gens, [&](Var v) { return total_derivative(b.Q_generator(v.base), v.order); }, max_weight2);
}

H0Table h0_truncated(const BrstComplex& b, int max_weight2, Execution ex) {
  const auto& gens = b.chart().generators;
  int smallest = 1 << 30;
  std::vector<int> w;
  std::vector<Parity> p;
  for (const auto& s : gens) {
    smallest = std::min(smallest, s.conformal_weight2());
    w.push_back(s.conformal_weight2());
    p.push_back(s.parity);
  }
  if (max_weight2 < smallest) throw Error("weight cutoff " + half_integer_text(max_weight2) + " is below every generator");
  auto cx = jet_complex(b, max_weight2);
  auto t = compute_cohomology(cx, ex);
  H0Table h;
  for (int wt = 0; wt <= max_weight2; ++wt) {
    h.dims[wt] = t.at(0, wt);
    h.higher[wt] = t.at(1, wt);
  }
  h.expected = free_monomial_counts(w, p, max_weight2, true);
  h.representatives = b.representatives();
  h.representatives_closed = true;
  for (const auto& r : h.representatives)
    if (!b.Q(r).is_zero()) h.representatives_closed = false;
  return h;
}

// ---------------------------------------------------------------------------

SuperPolynomial GradedMiura::apply(const SuperPolynomial& p) const {
  return substitute(p, target, [&](Var v) { return total_derivative(images.at(v.base), v.order); });
}

GradedMiura graded_miura(const SliceChart& c) {
  const auto& g = c.g;
  const auto& gr = c.grading;
  ZhuPoisson zp(c);
  auto fin = finite_miura(c);
  auto inv = identification_inverse(zp);

  std::vector<VariableInfo> svars;
  for (const auto& s : c.generators) svars.push_back({"s_" + s.label, s.parity, s.conformal_weight2(), 0});
  auto source = Ring::make(svars, true, 2);

  std::vector<std::size_t> tb;
  std::vector<VariableInfo> tvars;
  for (auto i : zp.low())
    if (gr.weight2[i] == 0 || gr.weight2[i] == 1) {
      tb.push_back(i);
      tvars.push_back({g.label(i), g.parity(i), 2 - gr.weight2[i], 0});
    }
  auto target = Ring::make(tvars, true, 2);
  std::vector<long> pos(g.dim(), -1);
  for (std::size_t t = 0; t < tb.size(); ++t) pos[tb[t]] = static_cast<long>(t);

  // z_a for a in g_ini through the fields of g_0 + g_{1/2}
  std::vector<SuperPolynomial> zin;
  for (std::size_t a = 0; a < fin.coordinates.size(); ++a) {
    const std::size_t chart_var = c.variable_of(fin.coordinates[a]);
    SuperPolynomial z(target);
    for (std::size_t r = 0; r < zp.low().size(); ++r) {
      if (inv[chart_var][r] == 0) continue;
      if (pos[zp.low()[r]] < 0) throw Error("g_ini coordinate pairs outside g_0 + g_{1/2}");
      z += inv[chart_var][r] * SuperPolynomial::variable(target, Var{static_cast<std::uint32_t>(pos[zp.low()[r]]), 0});
    }
    zin.push_back(std::move(z));
  }
  std::vector<SuperPolynomial> images;
  for (const auto& im : fin.images) images.push_back(substitute(im, target, [&](Var v) { return zin.at(v.base); }));

  auto table = [&](std::size_t x, std::size_t y) {
    LambdaPolynomial out(target);
    const std::size_t i = tb[x], j = tb[y];
    SuperPolynomial v(target);
    if (gr.weight2[i] == 0 && gr.weight2[j] == 0) {
      for (const auto& [k, cc] : g.structure(i, j)) {
        if (pos[k] < 0) throw Error("g_0 is not closed under the bracket");
        v += cc * SuperPolynomial::variable(target, Var{static_cast<std::uint32_t>(pos[k]), 0});
      }
    } else if (gr.weight2[i] == 1 && gr.weight2[j] == 1) {
      v = SuperPolynomial::constant(target, g.form(c.triple.f, g.bracket(g.unit(i), g.unit(j))));
    }
    out.add(0, v);
    return out;
  };
  return GradedMiura{source, target, tb, images, PoissonVertexAlgebra(target, table)};
}

IntertwiningReport check_miura_intertwining(const GradedMiura& m, const BrstComplex& b, int max_weight2) {
  IntertwiningReport rep;
  const auto& gens = b.chart().generators;
  const auto reps = b.representatives();
  // projection killing the fields of g_{<0} and all ghosts
  const auto& fields = b.field_basis();
  std::vector<long> pos(fields.size(), -1);
  for (std::size_t r = 0; r < fields.size(); ++r) {
    auto it = std::find(m.target_basis.begin(), m.target_basis.end(), fields[r]);
    if (it != m.target_basis.end()) pos[r] = it - m.target_basis.begin();
  }
  auto project = [&](const SuperPolynomial& p) {
    return substitute(p, m.target, [&](Var v) {
      if (v.base >= fields.size() || pos[v.base] < 0) return SuperPolynomial(m.target);
      return SuperPolynomial::variable(m.target, Var{static_cast<std::uint32_t>(pos[v.base]), v.order});
    });
  };
  for (std::size_t k = 0; k < gens.size(); ++k)
    if (project(reps[k]) != m.images[k]) {
      rep.pass = false;
      rep.failure = "representative of " + gens[k].label + " does not project to its Miura image";
      return rep;
    }
  struct Elem {
    std::string name;
    SuperPolynomial rep, image;
  };
  std::vector<Elem> elems;
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (unsigned n = 0; gens[k].conformal_weight2() + 2 * static_cast<int>(n) <= max_weight2; ++n)
      elems.push_back({m.source->var_name(Var{static_cast<std::uint32_t>(k), n}), total_derivative(reps[k], n),
                       total_derivative(m.images[k], n)});
  for (const auto& a : elems)
    for (const auto& c : elems) {
      ++rep.pairs;
      auto lhs = m.target_pva.bracket(a.image, c.image);
      auto rhs = b.pva().bracket(a.rep, c.rep).map(project, m.target);
      if (!(lhs == rhs)) {
        rep.pass = false;
        rep.failure = "{" + a.name + "_lambda " + c.name + "}: " + lhs.to_string() + " vs " + rhs.to_string();
        return rep;
      }
    }
  return rep;
}

}  // namespace superslice
