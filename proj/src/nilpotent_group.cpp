#include "superslice/nilpotent_group.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace superslice {

namespace {

bool all_zero(const PolyVector& v) {
  return std::all_of(v.begin(), v.end(), [](const SuperPolynomial& p) { return p.is_zero(); });
}

void add_into(PolyVector& acc, const PolyVector& v, const Scalar& c) {
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i] += c * v[i];
}

Scalar factorial(std::size_t n) {
  Scalar f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

}  // namespace

PolyVector lift(const RingPtr& ring, const Vector& v) {
  PolyVector out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(SuperPolynomial::constant(ring, c));
  return out;
}

PolyVector adjoint_orbit_map(const LieSuperalgebra& g, const PolyVector& z, const PolyVector& y) {
  if (z.size() != g.dim() || y.size() != g.dim()) throw Error("dimension mismatch in adjoint_orbit_map");
  PolyVector sum = z, term = z;
  for (std::size_t n = 1;; ++n) {
    term = g.bracket(term, y);
    if (all_zero(term)) break;
    if (n > g.dim() + 1) throw Error("adjoint series does not terminate: ad_Y is not nilpotent");
    for (auto& t : term) t *= Scalar(1, static_cast<unsigned long>(n));
    add_into(sum, term, 1);
  }
  return sum;
}

Vector adjoint_orbit_map(const LieSuperalgebra& g, const Vector& z, const Vector& y) {
  if (z.size() != g.dim() || y.size() != g.dim()) throw Error("dimension mismatch in adjoint_orbit_map");
  Vector sum = z, term = z;
  for (std::size_t n = 1;; ++n) {
    term = g.bracket(term, y);
    if (is_zero(term)) break;
    if (n > g.dim() + 1) throw Error("adjoint series does not terminate: ad_Y is not nilpotent");
    term = Scalar(1, static_cast<unsigned long>(n)) * term;
    sum = sum + term;
  }
  return sum;
}

std::map<std::vector<bool>, Scalar> bch_word_coefficients(std::size_t max_length) {
  // log(e^X e^Y) = sum_n (-1)^{n-1}/n sum [X^{p1} Y^{q1} .. X^{pn} Y^{qn}] / (L prod p_i! q_i!)
  std::map<std::vector<bool>, Scalar> out;
  std::vector<bool> word;
  std::function<void(std::size_t, Scalar)> grow = [&](std::size_t n, Scalar denom) {
    for (std::size_t p = 0; word.size() + p <= max_length; ++p)
      for (std::size_t q = (p == 0 ? 1 : 0); word.size() + p + q <= max_length; ++q) {
        const std::size_t keep = word.size();
        word.insert(word.end(), p, false);
        word.insert(word.end(), q, true);
        // this is block n+1
        Scalar d = denom * factorial(p) * factorial(q);
        Scalar c = Scalar(n % 2 == 0 ? 1 : -1, 1) / (static_cast<unsigned long>(n + 1) * d *
                                                    static_cast<unsigned long>(word.size()));
        out[word] += c;
        grow(n + 1, d);
        word.resize(keep);
      }
  };
  grow(0, 1);
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

NilpotentGroup::NilpotentGroup(const LieSuperalgebra& ambient, std::vector<std::size_t> support)
    : g_(ambient), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  auto sub = basis_subalgebra(g_, support_, "g+");
  auto series = descending_central_series(sub);
  if (!series.nilpotent) throw Error("group support is not a nilpotent subalgebra");
  max_word_length_ = std::max<std::size_t>(1, series.length());
  words_ = bch_word_coefficients(max_word_length_);
}

void NilpotentGroup::check_element(const PolyVector& y) const {
  if (y.size() != g_.dim()) throw Error("group element has wrong dimension");
  std::set<std::size_t> in(support_.begin(), support_.end());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) continue;
    if (!in.count(i)) throw Error("group element has a component along " + g_.label(i) + " outside the group");
    auto p = y[i].parity();
    if (!p || *p != g_.parity(i))
      throw Error("coefficient of " + g_.label(i) + " does not match its parity");
  }
}

PolyVector NilpotentGroup::product(const PolyVector& y1, const PolyVector& y2) const {
  check_element(y1);
  check_element(y2);
  PolyVector out(g_.dim(), SuperPolynomial(y1[0].ring()));
  // right-nested brackets share suffixes; memoize them per word
  std::map<std::vector<bool>, PolyVector> nested;
  for (const auto& [w, c] : words_) {
    std::vector<bool> suffix(w.end() - 1, w.end());
    PolyVector v = w.back() ? y2 : y1;
    for (std::size_t i = w.size() - 1; i-- > 0;) {
      suffix.insert(suffix.begin(), w[i]);
      auto it = nested.find(suffix);
      if (it != nested.end()) {
        v = it->second;
        continue;
      }
      v = g_.bracket(w[i] ? y2 : y1, v);
      nested.emplace(suffix, v);
    }
    add_into(out, v, c);
  }
  return out;
}

PolyVector NilpotentGroup::inverse(const PolyVector& y) const {
  check_element(y);
  PolyVector out = y;
  for (auto& p : out) p = -p;
  return out;
}

PolyVector bch_product(const LieSuperalgebra& g, const PolyVector& y1, const PolyVector& y2) {
  std::vector<std::size_t> all(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) all[i] = i;
  return NilpotentGroup(g, all).product(y1, y2);
}

}  // namespace superslice
