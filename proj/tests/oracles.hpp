#pragma once

// Matrix-level oracles shared by the test binaries. These never call the
// library's bracket or orbit code; only the polynomial arithmetic is reused.

#include <random>
#include <vector>

#include "superslice/catalogue.hpp"
#include "superslice/polynomial.hpp"

namespace oracle {

using namespace superslice;

using PolyMatrix = std::vector<std::vector<SuperPolynomial>>;

inline PolyMatrix zero(const RingPtr& r, std::size_t n) {
  return PolyMatrix(n, std::vector<SuperPolynomial>(n, SuperPolynomial(r)));
}

inline PolyMatrix identity(const RingPtr& r, std::size_t n) {
  auto m = zero(r, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = SuperPolynomial::constant(r, 1);
  return m;
}

inline PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  auto c = zero(a[0][0].ring(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline PolyMatrix add(const PolyMatrix& a, const PolyMatrix& b, const Scalar& s = 1) {
  auto c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += s * b[i][j];
  return c;
}

inline bool is_zero(const PolyMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

/// exp of a nilpotent matrix; the series is cut once a power vanishes.
inline PolyMatrix exp_nilpotent(const PolyMatrix& m) {
  const std::size_t n = m.size();
  auto sum = identity(m[0][0].ring(), n);
  auto term = sum;
  for (std::size_t k = 1; k <= 4 * n + 4; ++k) {
    term = mul(term, m);
    if (is_zero(term)) return sum;
    for (auto& row : term)
      for (auto& x : row) x *= Scalar(1, static_cast<unsigned long>(k));
    sum = add(sum, term);
  }
  throw Error("matrix is not nilpotent");
}

/// A-point sum_a c_a x_a as an operator on A (x) V with coefficients moved
/// to the right: entry (i,j) of c x picks up (-1)^{|c| p_i}.
inline PolyMatrix realize(const std::vector<RationalMatrix>& basis, const std::vector<int>& row_parity,
                          const PolyVector& v) {
  const std::size_t n = basis[0].rows();
  auto out = zero(v[0].ring(), n);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (v[a].is_zero()) continue;
    auto even = v[a].part_of_parity(Parity::Even), odd = v[a].part_of_parity(Parity::Odd);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& x = basis[a](i, j);
        if (x == 0) continue;
        out[i][j] += x * even;
        out[i][j] += (row_parity[i] ? -x : x) * odd;
      }
  }
  return out;
}

inline std::vector<int> sl_row_parity(int m, int n) {
  std::vector<int> p;
  for (int i = 0; i < m + n; ++i) p.push_back(i >= m ? 1 : 0);
  return p;
}

/// osp(1|2) on C^{1|2} in the catalogue order e, h, f, vp, vm.
inline std::vector<RationalMatrix> osp12_matrices() {
  auto u = [](int i, int j, int s = 1) {
    RationalMatrix m(3, 3);
    m(i, j) = s;
    return m;
  };
  auto plus = [](RationalMatrix a, const RationalMatrix& b) {
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) += b(i, j);
    return a;
  };
  return {u(1, 2), plus(u(1, 1), u(2, 2, -1)), u(2, 1), plus(u(1, 0), u(0, 2)), plus(u(0, 1), u(2, 0, -1))};
}

inline std::vector<int> osp12_row_parity() { return {0, 1, 1}; }

/// Determinant by cofactor expansion (entries must be even).
inline SuperPolynomial det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  SuperPolynomial out(m[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SuperPolynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    SuperPolynomial t = m[0][c] * det(minor);
    if (c % 2) out -= t;
    else out += t;
  }
  return out;
}

inline Scalar random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-10, 10), den(1, 4);
  return make_scalar(num(rng), den(rng));
}

}  // namespace oracle
