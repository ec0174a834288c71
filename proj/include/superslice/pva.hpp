#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superslice/cohomology.hpp"
#include "superslice/slice.hpp"

namespace superslice {

/// sum_k lambda^k c_k with differential-polynomial coefficients.
class LambdaPolynomial {
 public:
  explicit LambdaPolynomial(RingPtr ring) : ring_(std::move(ring)) {}
  static LambdaPolynomial constant(const SuperPolynomial& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<unsigned, SuperPolynomial>& coefficients() const { return coeffs_; }
  SuperPolynomial coefficient(unsigned k) const;
  bool is_zero() const { return coeffs_.empty(); }
  void add(unsigned k, const SuperPolynomial& c);

  LambdaPolynomial& operator+=(const LambdaPolynomial& o);
  LambdaPolynomial& operator-=(const LambdaPolynomial& o);
  friend LambdaPolynomial operator+(LambdaPolynomial a, const LambdaPolynomial& b) { return a += b; }
  friend LambdaPolynomial operator-(LambdaPolynomial a, const LambdaPolynomial& b) { return a -= b; }
  friend LambdaPolynomial operator*(const Scalar& s, const LambdaPolynomial& a);
  /// coefficientwise products
  friend LambdaPolynomial operator*(const SuperPolynomial& p, const LambdaPolynomial& a);
  friend LambdaPolynomial operator*(const LambdaPolynomial& a, const SuperPolynomial& p);
  bool operator==(const LambdaPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// (lambda + d)^n applied to this, d acting on coefficients.
  LambdaPolynomial shifted(unsigned n) const;
  /// sum_k (-lambda - d)^k c_k
  LambdaPolynomial reflected() const;
  /// Apply a linear map to every coefficient; the results live in `target`.
  LambdaPolynomial map(const std::function<SuperPolynomial(const SuperPolynomial&)>& f, RingPtr target) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::map<unsigned, SuperPolynomial> coeffs_;
};

/// Poisson vertex superalgebra structure on a differential superpolynomial
/// ring, fixed by the brackets of the ring generators and extended by
/// sesquilinearity, the left Leibniz rule and skewsymmetry.
class PoissonVertexAlgebra {
 public:
  using Table = std::function<LambdaPolynomial(std::size_t, std::size_t)>;
  PoissonVertexAlgebra(RingPtr ring, const Table& table);

  const RingPtr& ring() const { return ring_; }
  const LambdaPolynomial& generator_bracket(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  LambdaPolynomial bracket(const SuperPolynomial& a, const SuperPolynomial& b) const;

 private:
  LambdaPolynomial mono_bracket(const Monomial& a, const Monomial& b) const;
  LambdaPolynomial generator_left(std::size_t b, const Monomial& a) const;  // {x_b mu a}

  RingPtr ring_;
  std::size_t n_ = 0;
  std::vector<LambdaPolynomial> table_;
};

/// {b_lambda a} = -(-1)^{ab} {a_{-lambda-d} b} on every generator pair.
std::optional<std::string> check_skewsymmetry(const PoissonVertexAlgebra& p);

/// The graded BRST complex S^d(g_{<=0} + g_{1/2}) (x) S^d(Pi g_+^*).
///
/// Generators: one per basis vector of g with doubled degree <= 1 (named by
/// its label, conformal weight 1 - j), then ghosts phi_<label> for g_{>=1/2}
/// (weight j, degree 1, reversed parity). Q on generators is transported from
/// the Chevalley-Eilenberg differential of g_+ acting on C[f + g_{>=-1/2}],
/// which fixes every sign.
class BrstComplex {
 public:
  explicit BrstComplex(const SliceChart& c);

  const SliceChart& chart() const { return chart_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<std::size_t>& field_basis() const { return fields_; }
  const std::vector<std::size_t>& ghost_basis() const { return ghosts_; }
  SuperPolynomial field(std::size_t basis_index, unsigned order = 0) const;
  SuperPolynomial ghost(std::size_t basis_index, unsigned order = 0) const;

  SuperPolynomial Q(const SuperPolynomial& a) const;
  const SuperPolynomial& Q_generator(std::size_t var) const { return q_[var]; }
  const PoissonVertexAlgebra& pva() const { return *pva_; }

  /// Chart polynomial rewritten in the field generators (z_a -> its
  /// expression through the identification).
  SuperPolynomial from_chart(const SuperPolynomial& p) const;
  /// The slice invariants as degree-0 elements of the complex.
  std::vector<SuperPolynomial> representatives() const;

 private:
  SliceChart chart_;
  RingPtr ring_;
  std::vector<std::size_t> fields_, ghosts_;
  std::vector<SuperPolynomial> z_images_;  // chart variable -> combination of fields
  std::vector<SuperPolynomial> q_;
  std::shared_ptr<const PoissonVertexAlgebra> pva_;
};

/// Q^2 = 0 on every generator.
std::optional<std::string> check_q_squared(const BrstComplex& b);
/// Q{a_lambda b} = {Qa_lambda b} + (-1)^a {a_lambda Qb} on generator pairs.
std::optional<std::string> check_q_bracket_derivation(const BrstComplex& b);

struct H0Table {
  std::map<int, std::size_t> dims;      // doubled conformal weight -> dim H^0
  std::map<int, std::size_t> expected;  // free differential ring on the slice generators
  std::map<int, std::size_t> higher;    // dim H^1, for the vanishing check
  std::vector<SuperPolynomial> representatives;
  bool representatives_closed = false;
  bool pass() const { return dims == expected && representatives_closed; }
};

/// Kernel of Q in degree 0 per conformal weight up to the cutoff.
H0Table h0_truncated(const BrstComplex& b, int max_weight2, Execution ex = Execution::Parallel);
GradedComplex jet_complex(const BrstComplex& b, int max_weight2);

/// Arc image of the finite Miura map: s_k^(n) -> d^n mu(s_k) in S^d(g_0 + g_{1/2}).
struct GradedMiura {
  RingPtr source;  // s_<label>, differential
  RingPtr target;  // fields of g_0 + g_{1/2}, differential
  std::vector<std::size_t> target_basis;
  std::vector<SuperPolynomial> images;
  PoissonVertexAlgebra target_pva;

  SuperPolynomial apply(const SuperPolynomial& p) const;
};

GradedMiura graded_miura(const SliceChart& c);

struct IntertwiningReport {
  bool pass = true;
  std::size_t pairs = 0;
  std::optional<std::string> failure;
};

/// For all pairs of d^n s_k with weight up to the cutoff, the bracket of the
/// images equals the image of the bracket computed in the BRST complex on
/// the representatives.
IntertwiningReport check_miura_intertwining(const GradedMiura& m, const BrstComplex& b, int max_weight2);

}  // namespace superslice
