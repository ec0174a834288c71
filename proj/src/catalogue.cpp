#include "superslice/catalogue.hpp"

#include <cctype>
#include <string>

namespace superslice {

namespace {

struct MatrixAlgebra {
  std::vector<BasisElement> basis;
  std::vector<RationalMatrix> mats;
};

MatrixAlgebra sl_realization(int m, int n) {
  const int N = m + n;
  auto odd = [m](int i) { return i >= m; };
  auto ep = [&](int i, int j) { return parity_of(int(odd(i)) + int(odd(j))); };
  auto unit = [N](int i, int j) {
    RationalMatrix e(N, N);
    e(i, j) = 1;
    return e;
  };
  MatrixAlgebra a;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      a.basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), ep(i, j)});
      a.mats.push_back(unit(i, j));
    }
  if (m == n) {
    for (int i = 0; i < N; ++i) {
      a.basis.push_back({"e" + std::to_string(i + 1) + std::to_string(i + 1), Parity::Even});
      a.mats.push_back(unit(i, i));
    }
  } else {
    for (int i = 0; i + 1 < N; ++i) {
      RationalMatrix h(N, N);
      h(i, i) = 1;
      h(i + 1, i + 1) = -sign_pow(int(odd(i)) + int(odd(i + 1)));
      a.basis.push_back({"h" + std::to_string(i + 1), Parity::Even});
      a.mats.push_back(h);
    }
  }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < i; ++j) {
      a.basis.push_back({"e" + std::to_string(i + 1) + std::to_string(j + 1), ep(i, j)});
      a.mats.push_back(unit(i, j));
    }
  return a;
}

Vector flatten(const RationalMatrix& x) {
  Vector v;
  v.reserve(x.rows() * x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) v.push_back(x(r, c));
  return v;
}

Scalar supertrace(const RationalMatrix& x, int m) {
  Scalar s = 0;
  for (std::size_t i = 0; i < x.rows(); ++i) s += (static_cast<int>(i) < m ? 1 : -1) * x(i, i);
  return s;
}

}  // namespace

RationalMatrix supercommutator(const RationalMatrix& x, const RationalMatrix& y, Parity px, Parity py) {
  RationalMatrix xy = x * y, yx = y * x;
  const int s = sign_pow(bit(px) * bit(py));
  RationalMatrix out(xy.rows(), xy.cols());
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = xy(r, c) - s * yx(r, c);
  return out;
}

std::vector<RationalMatrix> sl_matrix_basis(int m, int n) { return sl_realization(m, n).mats; }

LieSuperalgebra build_sl(int m, int n) {
  if (m < 1 || n < 0) throw Error("build_sl needs m >= 1 and n >= 0");
  if (m == 1 && n == 1) throw Error("sl(1|1) is not supported");
  if (m + n < 2) throw Error("sl(1|0) is zero-dimensional");
  auto a = sl_realization(m, n);
  const std::size_t d = a.mats.size();
  std::vector<Vector> cols;
  for (const auto& x : a.mats) cols.push_back(flatten(x));
  const auto flat = RationalMatrix::from_columns(cols, cols[0].size());

  std::vector<BracketEntry> br;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = supercommutator(a.mats[i], a.mats[j], a.basis[i].parity, a.basis[j].parity);
      if (c.is_zero()) continue;
      auto coords = solve(flat, flatten(c));
      if (!coords) throw Error("supercommutator leaves the span of the basis");
      for (std::size_t k = 0; k < d; ++k)
        if ((*coords)[k] != 0) br.push_back({i, j, k, (*coords)[k]});
    }
  RationalMatrix form(d, d);
  const int sgn = m >= n ? 1 : -1;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) form(i, j) = sgn * supertrace(a.mats[i] * a.mats[j], m);

  std::string name = m == n ? "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")"
                            : (n == 0 ? "sl(" + std::to_string(m) + ")"
                                      : "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")");
  LieSuperalgebra g(a.basis, br, form, name);
  if (m == n) g.add_note("sl(" + std::to_string(m) + "|" + std::to_string(n) + ") replaced by " + name);

  Vector f(d);
  bool any = false;
  for (int i = 0; i + 1 < m + n; ++i)
    if ((i >= m) == (i + 1 >= m)) {
      f[g.index("e" + std::to_string(i + 2) + std::to_string(i + 1))] = 1;
      any = true;
    }
  if (any) g.set_principal(f);
  return g;
}

LieSuperalgebra build_osp_1_2() {
  enum { E, H, F, VP, VM };
  std::vector<BasisElement> basis = {
      {"e", Parity::Even}, {"h", Parity::Even}, {"f", Parity::Even}, {"vp", Parity::Odd}, {"vm", Parity::Odd}};
  std::vector<BracketEntry> br = {
      {H, E, E, 2},   {H, F, F, -2},   {E, F, H, 1},   {H, VP, VP, 1},  {H, VM, VM, -1},
      {E, VM, VP, -1}, {F, VP, VM, -1}, {VP, VP, E, 2}, {VM, VM, F, -2}, {VP, VM, H, 1},
  };
  RationalMatrix form(5, 5);
  form(E, F) = form(F, E) = 1;
  form(H, H) = 2;
  form(VP, VM) = 2;
  form(VM, VP) = -2;
  LieSuperalgebra g(std::move(basis), br, form, "osp(1|2)");
  g.set_principal(g.unit(F));
  return g;
}

LieSuperalgebra build_heisenberg() {
  return LieSuperalgebra({{"p", Parity::Even}, {"q", Parity::Even}, {"z", Parity::Even}}, {{0, 1, 2, 1}},
                         std::nullopt, "heisenberg");
}

LieSuperalgebra build_abelian(int even, int odd) {
  std::vector<BasisElement> basis;
  for (int i = 0; i < even; ++i) basis.push_back({"x" + std::to_string(i + 1), Parity::Even});
  for (int i = 0; i < odd; ++i) basis.push_back({"t" + std::to_string(i + 1), Parity::Odd});
  return LieSuperalgebra(std::move(basis), {}, std::nullopt,
                         "abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")");
}

LieSuperalgebra catalogue_algebra(std::string_view raw) {
  std::string s;
  for (char c : raw)
    if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "osp12" || s == "osp1|2") return build_osp_1_2();
  if (s == "heisenberg" || s == "heis") return build_heisenberg();
  if (s.rfind("sl", 0) == 0 || s.rfind("gl", 0) == 0) {
    std::string rest = s.substr(2);
    auto bar = rest.find('|');
    try {
      std::size_t used = 0;
      if (bar == std::string::npos) {
        int m = std::stoi(rest, &used);
        if (used == rest.size()) return build_sl(m, 0);
      } else {
        int m = std::stoi(rest.substr(0, bar), &used);
        std::size_t used2 = 0;
        int n = std::stoi(rest.substr(bar + 1), &used2);
        if (used == bar && used2 == rest.size() - bar - 1) return build_sl(m, n);
      }
    } catch (const std::logic_error&) {
    }
  }
  throw Error("unknown catalogue algebra '" + std::string(raw) + "'");
}

}  // namespace superslice
