#include "superslice/arc.hpp"

#include <set>

namespace superslice {

namespace {

Scalar factorial(int m) {
  Scalar f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

using Series = std::vector<SuperPolynomial>;

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size(), SuperPolynomial(a[0].ring()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) c[i + j] += a[i] * b[j];
  }
  return c;
}

}  // namespace

Presentation affine_space(std::vector<VariableInfo> vars) { return {Ring::make(std::move(vars)), {}}; }

Presentation product_presentation(const Presentation& x, const Presentation& y) {
  auto vars = x.ring->variables();
  std::set<std::string> names;
  for (const auto& v : vars) names.insert(v.name);
  for (const auto& v : y.ring->variables()) {
    if (!names.insert(v.name).second) throw Error("factors share the coordinate name " + v.name);
    vars.push_back(v);
  }
  Presentation out{Ring::make(vars), {}};
  const auto shift = static_cast<std::uint32_t>(x.ring->size());
  for (const auto& f : x.relations)
    out.relations.push_back(substitute(f, out.ring, [&](Var v) { return SuperPolynomial::variable(out.ring, v); }));
  for (const auto& f : y.relations)
    out.relations.push_back(
        substitute(f, out.ring, [&](Var v) { return SuperPolynomial::variable(out.ring, Var{v.base + shift, 0}); }));
  return out;
}

SuperPolynomial ArcRing::jet(std::size_t i, int n) const {
  if (n > -1) throw Error("jet coordinates are indexed by n <= -1");
  const int m = -n - 1;
  return (1 / factorial(m)) * SuperPolynomial::variable(ring, Var{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(m)});
}

SuperPolynomial ArcRing::projection(const SuperPolynomial& p) const {
  return substitute(p, ring, [&](Var v) { return SuperPolynomial::variable(ring, Var{v.base, 0}); });
}

std::string ArcRing::jet_name(Var v) const {
  return ring->info(v.base).name + "_(" + std::to_string(-1 - static_cast<int>(v.order)) + ")";
}

ArcRing arc_ring(const Presentation& p, int max_order) {
  if (max_order < 0) throw Error("negative jet order");
  ArcRing a;
  a.base = p;
  a.max_order = max_order;
  a.ring = Ring::make(p.ring->variables(), true, 2);
  const std::size_t len = static_cast<std::size_t>(max_order) + 1;
  std::vector<Series> x;
  for (std::size_t i = 0; i < p.ring->size(); ++i) {
    Series s;
    for (std::size_t m = 0; m < len; ++m) s.push_back(a.jet(i, -1 - static_cast<int>(m)));
    x.push_back(std::move(s));
  }
  for (std::size_t j = 0; j < p.relations.size(); ++j) {
    Series total(len, SuperPolynomial(a.ring));
    for (const auto& [mono, c] : p.relations[j].terms()) {
      Series t(len, SuperPolynomial(a.ring));
      t[0] = SuperPolynomial::constant(a.ring, c);
      for (const auto& [v, e] : mono.factors())
        for (std::uint32_t k = 0; k < e; ++k) t = series_mul(t, x[v.base]);
      for (std::size_t m = 0; m < len; ++m) total[m] += t[m];
    }
    for (std::size_t m = 0; m < len; ++m) a.relations.insert_or_assign({j, -1 - static_cast<int>(m)}, total[m]);
  }
  return a;
}

std::optional<std::string> check_relation_expansion(const ArcRing& a) {
  for (const auto& [key, rel] : a.relations) {
    const int m = -key.second - 1;
    auto expect = (1 / factorial(m)) * total_derivative(a.projection(a.base.relations[key.first]), static_cast<unsigned>(m));
    if (expect != rel) return "relation " + std::to_string(key.first) + " at n = " + std::to_string(key.second);
  }
  return std::nullopt;
}

}  // namespace superslice
