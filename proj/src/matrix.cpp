#include "superslice/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace superslice {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector RationalMatrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector RationalMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error("dimension mismatch in matrix-vector product");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& q) { return q == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension mismatch in matrix product");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t exact_rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const auto& prow = a[rank];
    const mpz_class p = prow[c];
    const long first = static_cast<long>(rank + 1);
    const long last = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic)
    for (long r = first; r < last; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const mpz_class f = row[c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class t = p * row[k] - f * prow[k];
        mpz_divexact(row[k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

RowEchelon rref(RationalMatrix m) {
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    Scalar inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Scalar f = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (m(r, k) != 0) m(i, k) -= f * m(r, k);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t exact_rank_serial(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(const RationalMatrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const RationalMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error("dimension mismatch in solve");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto e = rref(std::move(aug));
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, m.cols());
  }
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

std::size_t span_rank(const std::vector<Vector>& vs, std::size_t len) {
  if (vs.empty()) return 0;
  return exact_rank(RationalMatrix::from_rows(vs, len));
}

std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t len) {
  if (vs.empty()) return {};
  auto e = rref(RationalMatrix::from_rows(vs, len));
  std::vector<Vector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    auto r = e.reduced.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& q) { return q == 0; });
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  Vector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out(v);
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace superslice
