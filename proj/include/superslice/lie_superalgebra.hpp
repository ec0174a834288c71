#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superslice/matrix.hpp"
#include "superslice/polynomial.hpp"

namespace superslice {

struct BasisElement {
  std::string label;
  Parity parity = Parity::Even;
};

/// One structure constant: [x_i, x_j] contains c * x_k.
struct BracketEntry {
  std::size_t i = 0, j = 0, k = 0;
  Scalar c;
};

/// A structural invariant failed; `where` names the offending basis indices.
class InvariantViolation : public Error {
 public:
  InvariantViolation(const std::string& what, std::vector<std::size_t> where)
      : Error(what), where_(std::move(where)) {}
  const std::vector<std::size_t>& where() const { return where_; }

 private:
  std::vector<std::size_t> where_;
};

/// Finite-dimensional Lie superalgebra given by structure constants
/// [x_a, x_b] = sum_c c_{ab}^c x_c on a parity-homogeneous basis, with an
/// optional even supersymmetric invariant form.
///
/// Brackets may be given for one ordering of a pair only; the other is
/// filled in by super-antisymmetry. Construction checks antisymmetry, parity
/// homogeneity, the super Jacobi identity on all basis triples and, when a
/// form is present, its parity, supersymmetry and invariance.
class LieSuperalgebra {
 public:
  using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

  LieSuperalgebra(std::vector<BasisElement> basis, const std::vector<BracketEntry>& brackets,
                  std::optional<RationalMatrix> form = std::nullopt, std::string name = "");

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  Parity parity(std::size_t i) const { return basis_.at(i).parity; }
  std::optional<std::size_t> find(std::string_view label) const;
  std::size_t index(std::string_view label) const;
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }

  const SparseVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Scalar structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  /// Every nonzero structure constant, ordered by (i, j, k).
  std::vector<BracketEntry> bracket_entries() const;

  Vector unit(std::size_t i) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Bracket of A-points sum_a p_a x_a with Koszul signs:
  /// [p x_a, q x_b] = (-1)^{|x_a||q|} p q [x_a, x_b].
  PolyVector bracket(const PolyVector& x, const PolyVector& y) const;

  /// Parity of a nonzero vector when homogeneous.
  std::optional<Parity> parity_of(const Vector& v) const;

  bool has_form() const { return form_.has_value(); }
  const RationalMatrix& form() const;
  Scalar form(const Vector& x, const Vector& y) const;

  /// Catalogue-supplied principal nilpotent, if any.
  const std::optional<Vector>& principal() const { return principal_; }
  void set_principal(Vector f) { principal_ = std::move(f); }
  /// Warnings attached by constructors (e.g. gl(n|n) substitution).
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string note) { notes_.push_back(std::move(note)); }

  std::string render(const Vector& v) const;

 private:
  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<SparseVector> table_;
  std::optional<RationalMatrix> form_;
  std::optional<Vector> principal_;
  std::vector<std::string> notes_;
};

/// First basis triple violating super Jacobi, scanned in parallel.
std::optional<std::array<std::size_t, 3>> find_jacobi_violation(const LieSuperalgebra& g);
/// Serial reference scan; returns the lexicographically first violation.
std::optional<std::array<std::size_t, 3>> find_jacobi_violation_serial(const LieSuperalgebra& g);
/// Basis triple with form([x,y],z) != form(x,[y,z]).
std::optional<std::array<std::size_t, 3>> find_form_violation(const LieSuperalgebra& g);

/// Span of vectors inside an ambient algebra.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<Vector> vectors;
  std::size_t dim() const { return vectors.size(); }
};

struct CentralSeries {
  std::vector<SubspaceBasis> terms;  // g^0 = g, g^n = [g, g^{n-1}]
  bool nilpotent = false;
  /// Smallest n with g^n = 0 (only meaningful when nilpotent).
  std::size_t length() const { return terms.size() - 1; }
};

CentralSeries descending_central_series(const LieSuperalgebra& g);

/// Subalgebra spanned by a subset of basis vectors; throws unless closed.
LieSuperalgebra basis_subalgebra(const LieSuperalgebra& g, const std::vector<std::size_t>& indices,
                                 std::string name = "");

/// sum_i c_i x_i parsed from e.g. "e21 + e32" or "2*e12 - 1/2*h1".
Vector parse_vector(const LieSuperalgebra& g, std::string_view expr);

}  // namespace superslice
