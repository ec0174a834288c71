#include "superslice/lie_superalgebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace superslice {

namespace {

std::string triple_text(const LieSuperalgebra& g, std::size_t a, std::size_t b, std::size_t c) {
  return "(" + g.label(a) + ", " + g.label(b) + ", " + g.label(c) + ")";
}

}  // namespace

LieSuperalgebra::LieSuperalgebra(std::vector<BasisElement> basis,
                                 const std::vector<BracketEntry>& brackets,
                                 std::optional<RationalMatrix> form, std::string name)
    : name_(std::move(name)), basis_(std::move(basis)), form_(std::move(form)) {
  const std::size_t n = basis_.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (basis_[a].label == basis_[b].label) throw Error("duplicate basis label '" + basis_[a].label + "'");

  // given[(i,j)][k]
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Scalar>> given;
  for (const auto& e : brackets) {
    if (e.i >= n || e.j >= n || e.k >= n) throw Error("bracket entry index out of range");
    if (e.c == 0) continue;
    auto& slot = given[{e.i, e.j}];
    if (slot.count(e.k)) throw Error("duplicate bracket entry for " + triple_text(*this, e.i, e.j, e.k));
    if (parity(e.k) != parity(e.i) + parity(e.j))
      throw InvariantViolation("parity violation at " + triple_text(*this, e.i, e.j, e.k), {e.i, e.j, e.k});
    slot[e.k] = e.c;
  }

  table_.assign(n * n, {});
  std::vector<std::map<std::size_t, Scalar>> dense(n * n);
  for (const auto& [ij, row] : given) {
    const auto [i, j] = ij;
    const int s = -sign_pow(bit(parity(i)) * bit(parity(j)));
    auto mirror = given.find({j, i});
    for (const auto& [k, c] : row) {
      Scalar expect = s * c;
      if (mirror != given.end()) {
        auto it = mirror->second.find(k);
        Scalar have = it == mirror->second.end() ? Scalar(0) : it->second;
        if (have != expect)
          throw InvariantViolation("super-antisymmetry violated at " + triple_text(*this, i, j, k), {i, j, k});
      }
      dense[i * n + j][k] = c;
      dense[j * n + i][k] = expect;
    }
    // entries present only in the mirror are caught when the mirror row is visited
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = dense[i * n + i];
    if (parity(i) == Parity::Even && !r.empty()) {
      std::size_t k = r.begin()->first;
      throw InvariantViolation("super-antisymmetry violated at " + triple_text(*this, i, i, k), {i, i, k});
    }
  }
  for (std::size_t p = 0; p < n * n; ++p)
    for (const auto& [k, c] : dense[p]) table_[p].emplace_back(k, c);

  if (auto bad = find_jacobi_violation(*this))
    throw InvariantViolation("super Jacobi identity fails on " + triple_text(*this, (*bad)[0], (*bad)[1], (*bad)[2]),
                             {(*bad)[0], (*bad)[1], (*bad)[2]});

  if (form_) {
    const auto& k = *form_;
    if (k.rows() != n || k.cols() != n) throw Error("form has wrong dimensions");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (k(i, j) == 0) continue;
        if (parity(i) != parity(j))
          throw InvariantViolation("form is not even at (" + label(i) + ", " + label(j) + ")", {i, j});
        if (k(i, j) != sign_pow(bit(parity(i)) * bit(parity(j))) * k(j, i))
          throw InvariantViolation("form is not supersymmetric at (" + label(i) + ", " + label(j) + ")", {i, j});
      }
    if (auto bad = find_form_violation(*this))
      throw InvariantViolation("form is not invariant on " + triple_text(*this, (*bad)[0], (*bad)[1], (*bad)[2]),
                               {(*bad)[0], (*bad)[1], (*bad)[2]});
  }
}

std::optional<std::size_t> LieSuperalgebra::find(std::string_view l) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].label == l) return i;
  return std::nullopt;
}

std::size_t LieSuperalgebra::index(std::string_view l) const {
  if (auto i = find(l)) return *i;
  throw Error("unknown basis label '" + std::string(l) + "'");
}

std::size_t LieSuperalgebra::even_dim() const {
  return static_cast<std::size_t>(
      std::count_if(basis_.begin(), basis_.end(), [](const BasisElement& b) { return b.parity == Parity::Even; }));
}

Scalar LieSuperalgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : structure(i, j))
    if (kk == k) return c;
  return 0;
}

std::vector<BracketEntry> LieSuperalgebra::bracket_entries() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      for (const auto& [k, c] : structure(i, j)) out.push_back({i, j, k, c});
  return out;
}

Vector LieSuperalgebra::unit(std::size_t i) const {
  Vector v(dim());
  v.at(i) = 1;
  return v;
}

Vector LieSuperalgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error("dimension mismatch in bracket");
  Vector out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& [k, c] : structure(i, j)) out[k] += xy * c;
    }
  }
  return out;
}

PolyVector LieSuperalgebra::bracket(const PolyVector& x, const PolyVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw Error("dimension mismatch in bracket");
  if (dim() == 0) return {};
  const RingPtr& ring = x[0].ring();
  PolyVector out(dim(), SuperPolynomial(ring));
  std::vector<SuperPolynomial> y_even, y_odd;
  y_even.reserve(dim());
  y_odd.reserve(dim());
  for (const auto& q : y) {
    y_even.push_back(q.part_of_parity(Parity::Even));
    y_odd.push_back(q.part_of_parity(Parity::Odd));
  }
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || structure(i, j).empty()) continue;
      SuperPolynomial prod = x[i] * y_even[j];
      if (!y_odd[j].is_zero()) {
        if (parity(i) == Parity::Odd)
          prod -= x[i] * y_odd[j];
        else
          prod += x[i] * y_odd[j];
      }
      if (prod.is_zero()) continue;
      for (const auto& [k, c] : structure(i, j)) out[k] += c * prod;
    }
  }
  return out;
}

std::optional<Parity> LieSuperalgebra::parity_of(const Vector& v) const {
  std::optional<Parity> p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (p && *p != parity(i)) return std::nullopt;
    p = parity(i);
  }
  return p;
}

const RationalMatrix& LieSuperalgebra::form() const {
  if (!form_) throw Error("algebra '" + name_ + "' carries no invariant form");
  return *form_;
}

Scalar LieSuperalgebra::form(const Vector& x, const Vector& y) const {
  const auto& k = form();
  Scalar s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j] != 0 && k(i, j) != 0) s += x[i] * k(i, j) * y[j];
  }
  return s;
}

std::string LieSuperalgebra::render(const Vector& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Scalar c = v[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Scalar a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << label(i);
    first = false;
  }
  return first ? "0" : os.str();
}

// ---------------------------------------------------------------------------

namespace {

// [x_i, v] for a dense v
Vector ad_unit(const LieSuperalgebra& g, std::size_t i, const Vector& v) {
  Vector out(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [k, c] : g.structure(i, j)) out[k] += v[j] * c;
  }
  return out;
}

Vector bracket_units(const LieSuperalgebra& g, std::size_t i, std::size_t j) {
  Vector out(g.dim());
  for (const auto& [k, c] : g.structure(i, j)) out[k] += c;
  return out;
}

// [v, x_k]
Vector ad_right(const LieSuperalgebra& g, const Vector& v, std::size_t k) {
  Vector out(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    if (v[j] == 0) continue;
    for (const auto& [m, c] : g.structure(j, k)) out[m] += v[j] * c;
  }
  return out;
}

bool jacobi_holds(const LieSuperalgebra& g, std::size_t i, std::size_t j, std::size_t k) {
  Vector lhs = ad_unit(g, i, bracket_units(g, j, k));
  Vector t1 = ad_right(g, bracket_units(g, i, j), k);
  Vector t2 = ad_unit(g, j, bracket_units(g, i, k));
  const int s = sign_pow(bit(g.parity(i)) * bit(g.parity(j)));
  for (std::size_t m = 0; m < g.dim(); ++m)
    if (lhs[m] != t1[m] + s * t2[m]) return false;
  return true;
}

}  // namespace

std::optional<std::array<std::size_t, 3>> find_jacobi_violation_serial(const LieSuperalgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!jacobi_holds(g, i, j, k)) return std::array<std::size_t, 3>{i, j, k};
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const LieSuperalgebra& g) {
  const long n = static_cast<long>(g.dim());
  const long total = n * n * n;
  long first_bad = total;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_bad)
  for (long t = 0; t < total; ++t) {
    if (t >= first_bad) continue;
    auto i = static_cast<std::size_t>(t / (n * n));
    auto j = static_cast<std::size_t>((t / n) % n);
    auto k = static_cast<std::size_t>(t % n);
    if (!jacobi_holds(g, i, j, k)) first_bad = std::min(first_bad, t);
  }
  if (first_bad == total) return std::nullopt;
  return std::array<std::size_t, 3>{static_cast<std::size_t>(first_bad / (n * n)),
                                    static_cast<std::size_t>((first_bad / n) % n),
                                    static_cast<std::size_t>(first_bad % n)};
}

std::optional<std::array<std::size_t, 3>> find_form_violation(const LieSuperalgebra& g) {
  if (!g.has_form()) return std::nullopt;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = bracket_units(g, i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector jk = bracket_units(g, j, k);
        if (g.form(ij, g.unit(k)) != g.form(g.unit(i), jk)) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

CentralSeries descending_central_series(const LieSuperalgebra& g) {
  CentralSeries out;
  SubspaceBasis cur{g.dim(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) cur.vectors.push_back(g.unit(i));
  out.terms.push_back(cur);
  while (true) {
    if (cur.dim() == 0) {
      out.nilpotent = true;
      break;
    }
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (const auto& v : cur.vectors) {
        Vector w = ad_unit(g, i, v);
        if (!is_zero(w)) gens.push_back(std::move(w));
      }
    SubspaceBasis next{g.dim(), span_basis(gens, g.dim())};
    if (next.dim() == cur.dim()) break;  // stabilized at a nonzero term
    out.terms.push_back(next);
    cur = std::move(next);
  }
  return out;
}

LieSuperalgebra basis_subalgebra(const LieSuperalgebra& g, const std::vector<std::size_t>& indices,
                                 std::string name) {
  std::map<std::size_t, std::size_t> pos;
  std::vector<BasisElement> basis;
  for (auto i : indices) {
    if (i >= g.dim()) throw Error("subalgebra index out of range");
    if (pos.count(i)) throw Error("repeated subalgebra index");
    pos[i] = basis.size();
    basis.push_back(g.basis()[i]);
  }
  std::vector<BracketEntry> br;
  for (auto i : indices)
    for (auto j : indices)
      for (const auto& [k, c] : g.structure(i, j)) {
        auto it = pos.find(k);
        if (it == pos.end())
          throw Error("basis subset is not closed: [" + g.label(i) + ", " + g.label(j) + "] leaves it");
        br.push_back({pos[i], pos[j], it->second, c});
      }
  return LieSuperalgebra(std::move(basis), br, std::nullopt, std::move(name));
}

Vector parse_vector(const LieSuperalgebra& g, std::string_view expr) {
  Vector v(g.dim());
  std::string s;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw Error("empty vector expression");
  std::size_t p = 0;
  while (p < s.size()) {
    int sign = 1;
    if (s[p] == '+' || s[p] == '-') {
      sign = s[p] == '-' ? -1 : 1;
      ++p;
    } else if (p != 0) {
      throw Error("malformed vector expression '" + std::string(expr) + "'");
    }
    std::size_t q = p;
    while (q < s.size() && s[q] != '+' && s[q] != '-') ++q;
    std::string term = s.substr(p, q - p);
    if (term.empty()) throw Error("malformed vector expression '" + std::string(expr) + "'");
    Scalar coef = 1;
    std::string label = term;
    if (auto star = term.find('*'); star != std::string::npos) {
      std::string c = term.substr(0, star);
      label = term.substr(star + 1);
      try {
        coef = Scalar(c);
        coef.canonicalize();
      } catch (const std::exception&) {
        throw Error("bad coefficient '" + c + "'");
      }
      if (coef.get_den() == 0) throw Error("bad coefficient '" + c + "'");
    }
    v[g.index(label)] += sign * coef;
    p = q;
  }
  return v;
}

}  // namespace superslice
