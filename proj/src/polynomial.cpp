#include "superslice/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace superslice {

RingPtr Ring::make(std::vector<VariableInfo> vars, bool differential, int derivative_weight2) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name) throw Error("duplicate ring variable: " + vars[i].name);
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->vars_ = std::move(vars);
  ring->differential_ = differential;
  ring->derivative_weight2_ = derivative_weight2;
  return ring;
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw Error("unknown variable: " + std::string(name));
  return *i;
}

std::string Ring::var_name(Var v) const {
  std::string s = vars_.at(v.base).name;
  if (v.order == 1) return s + "'";
  if (v.order == 2) return s + "''";
  if (v.order > 2) return s + "^(" + std::to_string(v.order) + ")";
  return s;
}

void Ring::check(Var v) const {
  if (v.base >= vars_.size()) throw Error("unknown variable index " + std::to_string(v.base));
  if (v.order > 0 && !differential_)
    throw Error("derivative order on a non-differential ring: " + vars_[v.base].name);
}

// ---------------------------------------------------------------------------

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Parity Monomial::parity(const Ring& ring) const {
  int p = 0;
  for (const auto& [v, e] : factors_)
    if (ring.parity(v) == Parity::Odd) p += static_cast<int>(e);
  return parity_of(p);
}

int Monomial::weight2(const Ring& ring) const {
  int w = 0;
  for (const auto& [v, e] : factors_) w += static_cast<int>(e) * ring.weight2(v);
  return w;
}

int Monomial::cohomological_degree(const Ring& ring) const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += static_cast<int>(e) * ring.degree(v);
  return d;
}

std::optional<std::pair<Monomial, int>> Monomial::multiply(const Ring& ring, const Monomial& a,
                                                           const Monomial& b) {
  const auto& fa = a.factors_;
  const auto& fb = b.factors_;
  // odd factors of `a` at or after position i
  std::vector<int> odd_suffix(fa.size() + 1, 0);
  for (std::size_t i = fa.size(); i-- > 0;)
    odd_suffix[i] = odd_suffix[i + 1] + (ring.parity(fa[i].first) == Parity::Odd ? 1 : 0);

  std::vector<Factor> out;
  out.reserve(fa.size() + fb.size());
  int swaps = 0;
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    if (j == fb.size() || (i < fa.size() && fa[i].first < fb[j].first)) {
      out.push_back(fa[i++]);
    } else if (i == fa.size() || fb[j].first < fa[i].first) {
      if (ring.parity(fb[j].first) == Parity::Odd) swaps += odd_suffix[i];
      out.push_back(fb[j++]);
    } else {
      if (ring.parity(fa[i].first) == Parity::Odd) return std::nullopt;
      out.emplace_back(fa[i].first, fa[i].second + fb[j].second);
      ++i;
      ++j;
    }
  }
  return std::make_pair(Monomial(std::move(out)), sign_pow(swaps));
}

bool Monomial::operator<(const Monomial& other) const {
  auto da = degree(), db = other.degree();
  if (da != db) return da < db;
  const auto& x = factors_;
  const auto& y = other.factors_;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (x[i].first != y[i].first) return x[i].first < y[i].first;
    if (x[i].second != y[i].second) return x[i].second > y[i].second;
  }
  return x.size() < y.size();
}

// ---------------------------------------------------------------------------

SuperPolynomial::SuperPolynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [m, c] : terms)
    if (c != 0) terms_.emplace(m, c);
}

SuperPolynomial SuperPolynomial::constant(RingPtr ring, const Scalar& c) {
  SuperPolynomial p(std::move(ring));
  p.add_term(Monomial{}, c);
  return p;
}

SuperPolynomial SuperPolynomial::variable(RingPtr ring, Var v) {
  ring->check(v);
  SuperPolynomial p(std::move(ring));
  p.add_term(Monomial({{v, 1}}), 1);
  return p;
}

SuperPolynomial SuperPolynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->index(name);
  return variable(std::move(ring), Var{static_cast<std::uint32_t>(idx), 0});
}

SuperPolynomial SuperPolynomial::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  SuperPolynomial p(std::move(ring));
  p.add_term(m, c);
  return p;
}

Scalar SuperPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool SuperPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<Parity> SuperPolynomial::parity() const {
  std::optional<Parity> p;
  for (const auto& [m, c] : terms_) {
    auto q = m.parity(*ring_);
    if (p && *p != q) return std::nullopt;
    p = q;
  }
  return p ? p : std::optional<Parity>(Parity::Even);
}

SuperPolynomial SuperPolynomial::part_of_parity(Parity par) const {
  SuperPolynomial out(ring_);
  for (const auto& [m, c] : terms_)
    if (m.parity(*ring_) == par) out.terms_.emplace(m, c);
  return out;
}

SuperPolynomial SuperPolynomial::odd_degree_part(std::uint32_t d) const {
  SuperPolynomial out(ring_);
  for (const auto& [m, c] : terms_) {
    std::uint32_t k = 0;
    for (const auto& [v, e] : m.factors())
      if (ring_->parity(v) == Parity::Odd) k += e;
    if (k == d) out.terms_.emplace(m, c);
  }
  return out;
}

void SuperPolynomial::add_term(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperPolynomial::require_same_ring(const SuperPolynomial& o) const {
  if (ring_ != o.ring_) throw Error("ring mismatch");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  require_same_ring(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  a.require_same_ring(b);
  SuperPolynomial out(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = Monomial::multiply(*a.ring_, ma, mb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->second < 0) c = -c;
      out.add_term(prod->first, c);
    }
  return out;
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
  if (terms_.empty() && o.terms_.empty()) return true;
  return ring_ == o.ring_ && terms_ == o.terms_;
}

std::string SuperPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (m.is_one() || mag != 1) {
      os << mag.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : m.factors()) {
      if (wrote) os << "*";
      os << ring_->var_name(v);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

SuperPolynomial pow(const SuperPolynomial& p, unsigned e) {
  SuperPolynomial out = SuperPolynomial::constant(p.ring(), 1);
  for (unsigned i = 0; i < e; ++i) out = out * p;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Removes one power of `v` from m. Returns the reduced monomial, the
// exponent that was present, and the number of odd factors before / after v.
struct Stripped {
  Monomial rest;
  std::uint32_t exponent = 0;
  int odd_before = 0;
  int odd_after = 0;
};

std::optional<Stripped> strip(const Ring& ring, const Monomial& m, Var v) {
  Stripped s;
  std::vector<Monomial::Factor> out;
  bool found = false;
  for (const auto& [w, e] : m.factors()) {
    bool odd = ring.parity(w) == Parity::Odd;
    if (w == v) {
      found = true;
      s.exponent = e;
      if (e > 1) out.emplace_back(w, e - 1);
      continue;
    }
    if (odd) (found ? s.odd_after : s.odd_before) += 1;
    out.emplace_back(w, e);
  }
  if (!found) return std::nullopt;
  s.rest = Monomial(std::move(out));
  return s;
}

SuperPolynomial derivative_impl(const SuperPolynomial& p, Var v, bool left) {
  const Ring& ring = *p.ring();
  ring.check(v);
  bool odd = ring.parity(v) == Parity::Odd;
  SuperPolynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    auto s = strip(ring, m, v);
    if (!s) continue;
    Scalar k = c * s->exponent;
    if (odd && sign_pow(left ? s->odd_before : s->odd_after) < 0) k = -k;
    out.add_term(s->rest, k);
  }
  return out;
}

}  // namespace

SuperPolynomial partial_derivative(const SuperPolynomial& p, Var v) {
  return derivative_impl(p, v, true);
}

SuperPolynomial right_partial_derivative(const SuperPolynomial& p, Var v) {
  return derivative_impl(p, v, false);
}

SuperPolynomial apply_derivation(const SuperPolynomial& p, Parity parity, const VarImage& image) {
  const auto& ringp = p.ring();
  const Ring& ring = *ringp;
  SuperPolynomial out(ringp);
  std::map<Var, SuperPolynomial> cache;
  auto img = [&](Var v) -> const SuperPolynomial& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, image(v)).first;
    return it->second;
  };
  for (const auto& [m, c] : p.terms()) {
    const auto& fs = m.factors();
    int odd_before = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto [v, e] = fs[i];
      const SuperPolynomial& dv = img(v);
      if (!dv.is_zero()) {
        std::vector<Monomial::Factor> pre(fs.begin(), fs.begin() + static_cast<long>(i));
        std::vector<Monomial::Factor> post;
        if (e > 1) post.emplace_back(v, e - 1);
        post.insert(post.end(), fs.begin() + static_cast<long>(i) + 1, fs.end());
        Scalar k = c * e;
        if (parity == Parity::Odd && (odd_before & 1)) k = -k;
        SuperPolynomial term = SuperPolynomial::monomial(ringp, Monomial(std::move(pre)), k) * dv *
                               SuperPolynomial::monomial(ringp, Monomial(std::move(post)));
        out += term;
      }
      if (ring.parity(v) == Parity::Odd) odd_before += static_cast<int>(e);
    }
  }
  return out;
}

SuperPolynomial total_derivative(const SuperPolynomial& p) {
  const auto& ring = p.ring();
  if (!ring->differential()) throw Error("total derivative on a non-differential ring");
  return apply_derivation(p, Parity::Even, [&](Var v) {
    return SuperPolynomial::variable(ring, Var{v.base, v.order + 1});
  });
}

SuperPolynomial total_derivative(const SuperPolynomial& p, unsigned times) {
  SuperPolynomial out = p;
  for (unsigned i = 0; i < times; ++i) out = total_derivative(out);
  return out;
}

SuperPolynomial substitute(const SuperPolynomial& p, const RingPtr& target, const VarImage& image) {
  std::map<Var, std::vector<SuperPolynomial>> powers;
  auto power = [&](Var v, std::uint32_t e) -> const SuperPolynomial& {
    auto& list = powers[v];
    if (list.empty()) {
      list.push_back(SuperPolynomial::constant(target, 1));
      SuperPolynomial x = image(v);
      if (x.ring() != target && !x.is_zero()) throw Error("substitution image in wrong ring");
      if (x.is_zero()) x = SuperPolynomial(target);
      auto xp = x.parity();
      if (!x.is_zero() && (!xp || *xp != p.ring()->parity(v)))
        throw Error("substitution image has wrong parity for " + p.ring()->var_name(v));
      list.push_back(std::move(x));
    }
    while (list.size() <= e) list.push_back(list.back() * list[1]);
    return list[e];
  };
  SuperPolynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    SuperPolynomial t = SuperPolynomial::constant(target, c);
    for (const auto& [v, e] : m.factors()) {
      t = t * power(v, e);
      if (t.is_zero()) break;
    }
    out += t;
  }
  return out;
}

std::optional<int> homogeneous_weight2(const SuperPolynomial& p) {
  std::optional<int> w;
  for (const auto& [m, c] : p.terms()) {
    int x = m.weight2(*p.ring());
    if (w && *w != x) return std::nullopt;
    w = x;
  }
  return w ? w : std::optional<int>(0);
}

std::uint32_t max_odd_degree(const SuperPolynomial& p) {
  std::uint32_t best = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t k = 0;
    for (const auto& [v, e] : m.factors())
      if (p.ring()->parity(v) == Parity::Odd) k += e;
    best = std::max(best, k);
  }
  return best;
}

}  // namespace superslice
