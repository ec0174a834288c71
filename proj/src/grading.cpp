#include "superslice/grading.hpp"

#include <algorithm>
#include <set>

namespace superslice {

std::string half_integer_text(int w2) {
  if (w2 % 2 == 0) return std::to_string(w2 / 2);
  return std::to_string(w2) + "/2";
}

int parse_half_integer(const std::string& s) {
  Scalar q;
  try {
    std::string t = s;
    if (auto dot = t.find('.'); dot != std::string::npos) {
      // decimal: only .0 and .5 are meaningful
      std::string frac = t.substr(dot + 1);
      std::string whole = t.substr(0, dot);
      bool neg = !whole.empty() && whole[0] == '-';
      mpz_class w(whole.empty() || whole == "-" ? "0" : whole);
      if (frac != "5" && frac != "0" && !frac.empty()) throw Error("");
      q = Scalar(w) + (frac == "5" ? (neg ? Scalar(-1, 2) : Scalar(1, 2)) : Scalar(0));
    } else {
      q = Scalar(t);
      q.canonicalize();
    }
  } catch (const std::exception&) {
    throw Error("not a half-integer: '" + s + "'");
  }
  Scalar d = 2 * q;
  if (d.get_den() != 1) throw Error("not a half-integer: '" + s + "'");
  return static_cast<int>(d.get_num().get_si());
}

namespace {

RationalMatrix ad_matrix(const LieSuperalgebra& g, const Vector& x, const std::vector<std::size_t>& cols) {
  std::vector<Vector> c;
  for (auto j : cols) c.push_back(g.bracket(x, g.unit(j)));
  return RationalMatrix::from_columns(c, g.dim());
}

std::vector<std::size_t> even_indices(const LieSuperalgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.parity(i) == Parity::Even) out.push_back(i);
  return out;
}

// basis vectors whose adjoint action is diagonal in the basis
std::vector<std::size_t> toral_indices(const LieSuperalgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (g.parity(i) != Parity::Even) continue;
    bool diag = true;
    for (std::size_t j = 0; j < g.dim() && diag; ++j)
      for (const auto& [k, c] : g.structure(i, j))
        if (k != j) {
          diag = false;
          break;
        }
    if (diag) out.push_back(i);
  }
  return out;
}

Vector stack(const Vector& a, const Vector& b) {
  Vector out(a);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// h with [h,f] = -2f and h = [x,f]; h restricted to span(candidates) if given
std::optional<Vector> solve_h(const LieSuperalgebra& g, const Vector& f, const std::vector<std::size_t>& even,
                              const std::vector<std::size_t>* candidates) {
  const std::size_t n = g.dim();
  std::vector<Vector> cols;
  // unknowns: x_j (even) then t_k
  for (auto j : even) cols.push_back(stack(g.bracket(g.unit(j), f), Vector(n)));
  if (candidates) {
    for (auto k : *candidates) cols.push_back(stack(-1 * g.unit(k), g.bracket(g.unit(k), f)));
    auto sol = solve(RationalMatrix::from_columns(cols, 2 * n), stack(Vector(n), -2 * f));
    if (!sol) return std::nullopt;
    Vector h(n);
    for (std::size_t a = 0; a < candidates->size(); ++a) h[(*candidates)[a]] = (*sol)[even.size() + a];
    return h;
  }
  // general: [[x,f],f] = -2f
  std::vector<Vector> c2;
  for (auto j : even) c2.push_back(g.bracket(g.bracket(g.unit(j), f), f));
  auto sol = solve(RationalMatrix::from_columns(c2, n), -2 * f);
  if (!sol) return std::nullopt;
  Vector x(n);
  for (std::size_t a = 0; a < even.size(); ++a) x[even[a]] = (*sol)[a];
  return g.bracket(x, f);
}

}  // namespace

void verify_triple(const LieSuperalgebra& g, const Sl2Triple& t) {
  for (const Vector* v : {&t.e, &t.h, &t.f}) {
    if (v->size() != g.dim()) throw TripleError("triple vector has wrong dimension");
    auto p = g.parity_of(*v);
    if (p && *p != Parity::Even) throw TripleError("triple vectors must be even");
  }
  if (g.bracket(t.h, t.e) != 2 * t.e) throw TripleError("[h,e] != 2e");
  if (g.bracket(t.h, t.f) != -2 * t.f) throw TripleError("[h,f] != -2f");
  if (g.bracket(t.e, t.f) != t.h) throw TripleError("[e,f] != h");
  if (is_zero(t.f)) throw TripleError("f is zero");
}

Sl2Triple sl2_triple_for(const LieSuperalgebra& g, const Vector& f) {
  if (f.size() != g.dim()) throw TripleError("nilpotent has wrong dimension");
  if (is_zero(f)) throw TripleError("f is zero");
  if (g.parity_of(f) != Parity::Even) throw TripleError("f must be even");
  const auto even = even_indices(g);
  const std::size_t n = g.dim();
  auto tor = toral_indices(g);
  std::vector<std::optional<Vector>> hs = {solve_h(g, f, even, &tor)};
  hs.push_back(solve_h(g, f, even, nullptr));
  for (const auto& h : hs) {
    if (!h) continue;
    // e even with [e,f] = h and [h,e] = 2e
    std::vector<Vector> cols;
    for (auto j : even) cols.push_back(stack(g.bracket(g.unit(j), f), g.bracket(*h, g.unit(j)) - 2 * g.unit(j)));
    auto sol = solve(RationalMatrix::from_columns(cols, 2 * n), stack(*h, Vector(n)));
    if (!sol) continue;
    Vector e(n);
    for (std::size_t a = 0; a < even.size(); ++a) e[even[a]] = (*sol)[a];
    Sl2Triple t{e, *h, f};
    verify_triple(g, t);
    return t;
  }
  throw TripleError("no sl2-triple through f = " + g.render(f) + " (f nilpotent?)");
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> GoodGrading::indices(int w2) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weight2.size(); ++i)
    if (weight2[i] == w2) out.push_back(i);
  return out;
}

std::vector<std::size_t> GoodGrading::indices(int w2, Parity p, const LieSuperalgebra& g) const {
  std::vector<std::size_t> out;
  for (auto i : indices(w2))
    if (g.parity(i) == p) out.push_back(i);
  return out;
}

std::vector<std::size_t> GoodGrading::indices_at_least(int w2) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < weight2.size(); ++i)
    if (weight2[i] >= w2) out.push_back(i);
  return out;
}

int GoodGrading::min_weight2() const {
  return weight2.empty() ? 0 : *std::min_element(weight2.begin(), weight2.end());
}
int GoodGrading::max_weight2() const {
  return weight2.empty() ? 0 : *std::max_element(weight2.begin(), weight2.end());
}

std::vector<int> GoodGrading::degrees() const {
  std::set<int> s(weight2.begin(), weight2.end());
  return {s.begin(), s.end()};
}

GoodGrading dynkin_grading(const LieSuperalgebra& g, const Sl2Triple& t) {
  verify_triple(g, t);
  GoodGrading gr;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vector v = g.bracket(t.h, g.unit(i));
    Scalar lambda = v[i];
    if (v != lambda * g.unit(i))
      throw GradingError("basis vector " + g.label(i) + " is not an ad_h eigenvector; re-base the algebra", 0);
    if (lambda.get_den() != 1)
      throw GradingError("ad_h eigenvalue on " + g.label(i) + " is not an integer", 0);
    gr.weight2.push_back(static_cast<int>(lambda.get_num().get_si()));
  }
  validate_good_grading(g, gr, t.f);
  return gr;
}

GoodGrading grading_from_weights(const LieSuperalgebra& g, const std::map<std::string, int>& w) {
  GoodGrading gr;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    auto it = w.find(g.label(i));
    if (it == w.end()) throw GradingError("no weight given for " + g.label(i), 0);
    gr.weight2.push_back(it->second);
  }
  for (const auto& [label, _] : w) g.index(label);
  return gr;
}

void validate_good_grading(const LieSuperalgebra& g, const GoodGrading& gr, const Vector& f) {
  if (gr.weight2.size() != g.dim()) throw GradingError("grading has wrong length", 0);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [k, c] : g.structure(i, j))
        if (gr.weight2[k] != gr.weight2[i] + gr.weight2[j])
          throw GradingError("bracket [" + g.label(i) + ", " + g.label(j) + "] violates additivity of the grading",
                             gr.weight2[i] + gr.weight2[j]);
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (f[i] != 0 && gr.weight2[i] != -2) throw GradingError("f is not in degree -1", gr.weight2[i]);
  const int lo = gr.min_weight2(), hi = gr.max_weight2();
  for (int p = lo; p <= hi + 2; ++p) {
    auto src = gr.indices(p), dst = gr.indices(p - 2);
    std::size_t rk = 0;
    if (!src.empty() && !dst.empty()) {
      auto m = ad_matrix(g, f, src);
      // restrict to the rows of g_{p-1}
      RationalMatrix r(dst.size(), src.size());
      for (std::size_t a = 0; a < dst.size(); ++a)
        for (std::size_t b = 0; b < src.size(); ++b) r(a, b) = m(dst[a], b);
      rk = exact_rank(r);
    }
    if (p >= 1 && rk != src.size())
      throw GradingError("ad_f is not injective on degree " + half_integer_text(p), p);
    if (p <= 1 && rk != dst.size())
      throw GradingError("ad_f is not surjective from degree " + half_integer_text(p), p);
  }
}

SubspaceBasis centralizer(const LieSuperalgebra& g, const Vector& x) {
  SubspaceBasis out{g.dim(), {}};
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.parity(i) == p) idx.push_back(i);
    if (idx.empty()) continue;
    for (const auto& k : nullspace(ad_matrix(g, x, idx))) {
      Vector v(g.dim());
      for (std::size_t a = 0; a < idx.size(); ++a) v[idx[a]] = k[a];
      out.vectors.push_back(std::move(v));
    }
  }
  return out;
}

bool centralizer_dimension_identity(const LieSuperalgebra& g, const GoodGrading& gr, const Vector& e) {
  auto c = centralizer(g, e);
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::size_t have = 0;
    for (const auto& v : c.vectors)
      if (g.parity_of(v) == p) ++have;
    if (have != gr.indices(0, p, g).size() + gr.indices(1, p, g).size()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::pair<Vector, Vector> DegreePiece::decompose(const Vector& v) const {
  Vector local(indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a) local[a] = v[indices[a]];
  Vector all = split.apply(local);
  Vector x(all.begin(), all.begin() + static_cast<long>(centralizer.size()));
  Vector y(all.begin() + static_cast<long>(centralizer.size()), all.end());
  return {x, y};
}

std::pair<PolyVector, PolyVector> DegreePiece::decompose(const PolyVector& v) const {
  if (v.empty()) throw Error("decompose needs a nonempty vector");
  const RingPtr& ring = v[0].ring();
  PolyVector all(split.rows(), SuperPolynomial(ring));
  for (std::size_t r = 0; r < split.rows(); ++r)
    for (std::size_t a = 0; a < indices.size(); ++a)
      if (split(r, a) != 0 && !v[indices[a]].is_zero()) all[r] += split(r, a) * v[indices[a]];
  PolyVector x(all.begin(), all.begin() + static_cast<long>(centralizer.size()));
  PolyVector y(all.begin() + static_cast<long>(centralizer.size()), all.end());
  return {x, y};
}

const DegreePiece& SliceDecomposition::piece(int w2) const {
  for (const auto& p : pieces)
    if (p.weight2 == w2) return p;
  throw Error("no decomposition piece in degree " + half_integer_text(w2));
}

SliceDecomposition graded_slice_decomposition(const LieSuperalgebra& g, const GoodGrading& gr, const Sl2Triple& t) {
  SliceDecomposition out;
  for (int p = -1; p <= gr.max_weight2(); ++p) {
    DegreePiece d;
    d.weight2 = p;
    d.indices = gr.indices(p);
    d.upper = gr.indices(p + 2);
    for (Parity par : {Parity::Even, Parity::Odd}) {
      auto idx = gr.indices(p, par, g);
      if (idx.empty()) continue;
      for (const auto& k : nullspace(ad_matrix(g, t.e, idx))) {
        Vector v(g.dim());
        for (std::size_t a = 0; a < idx.size(); ++a) v[idx[a]] = k[a];
        d.centralizer.push_back(std::move(v));
      }
    }
    for (auto u : d.upper) d.image.push_back(g.bracket(t.f, g.unit(u)));
    const std::size_t total = d.centralizer.size() + d.image.size();
    if (total != d.indices.size())
      throw DecompositionError("g_p^e + [f, g_{p+1}] has the wrong dimension in degree " + half_integer_text(p), p);
    if (!d.indices.empty()) {
      RationalMatrix basis(d.indices.size(), total);
      std::size_t col = 0;
      for (const auto* group : {&d.centralizer, &d.image})
        for (const auto& v : *group) {
          for (std::size_t a = 0; a < d.indices.size(); ++a) basis(a, col) = v[d.indices[a]];
          ++col;
        }
      auto inv = inverse(basis);
      if (!inv) throw DecompositionError("g_p^e and [f, g_{p+1}] intersect in degree " + half_integer_text(p), p);
      d.split = *inv;
    } else {
      d.split = RationalMatrix(0, 0);
    }
    out.pieces.push_back(std::move(d));
  }
  return out;
}

}  // namespace superslice
