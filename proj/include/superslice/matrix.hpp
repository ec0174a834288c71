#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "superslice/scalar.hpp"

namespace superslice {

using Vector = std::vector<Scalar>;

/// Dense exact matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static RationalMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector column(std::size_t c) const;

  RationalMatrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vector data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

/// Rank over Q by fraction-free (Bareiss) elimination; pivot-row updates run
/// in parallel when OpenMP is enabled.
std::size_t exact_rank(const RationalMatrix& m);

/// Serial reference rank: plain rational Gauss-Jordan elimination.
std::size_t exact_rank_serial(const RationalMatrix& m);

/// Reduced row echelon form together with pivot columns.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(RationalMatrix m);

/// Basis of {x : M x = 0}, one vector per free column, in RREF order.
std::vector<Vector> nullspace(const RationalMatrix& m);

/// Some x with M x = b; empty when inconsistent.
std::optional<Vector> solve(const RationalMatrix& m, const Vector& b);

/// Inverse of a square matrix; empty when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Rank of the span of a list of vectors of common length.
std::size_t span_rank(const std::vector<Vector>& vs, std::size_t len);

/// Basis (RREF rows) of the span of a list of vectors.
std::vector<Vector> span_basis(const std::vector<Vector>& vs, std::size_t len);

bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

}  // namespace superslice
