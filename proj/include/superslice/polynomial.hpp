#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superslice/scalar.hpp"

namespace superslice {

/// Declared generator of a superpolynomial ring.
///
/// `weight2` is twice the grading weight (half-integers are stored doubled);
/// `degree` is the cohomological degree used by the complexes built on top.
struct VariableInfo {
  std::string name;
  Parity parity = Parity::Even;
  int weight2 = 0;
  int degree = 0;
};

/// A generator together with its derivative order (always 0 in a
/// non-differential ring).
struct Var {
  std::uint32_t base = 0;
  std::uint32_t order = 0;
  auto operator<=>(const Var&) const = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Immutable description of a (possibly differential) superpolynomial ring.
class Ring {
 public:
  /// `derivative_weight2` is the doubled weight carried by one application of
  /// the total derivative.
  static RingPtr make(std::vector<VariableInfo> vars, bool differential = false,
                      int derivative_weight2 = 2);

  std::size_t size() const { return vars_.size(); }
  const VariableInfo& info(std::size_t base) const { return vars_.at(base); }
  const std::vector<VariableInfo>& variables() const { return vars_; }
  bool differential() const { return differential_; }
  int derivative_weight2() const { return derivative_weight2_; }

  Parity parity(Var v) const { return vars_[v.base].parity; }
  int weight2(Var v) const {
    return vars_[v.base].weight2 + static_cast<int>(v.order) * derivative_weight2_;
  }
  int degree(Var v) const { return vars_[v.base].degree; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Index of a named generator; throws when absent.
  std::size_t index(std::string_view name) const;
  std::string var_name(Var v) const;

  /// Throws unless `v` is a valid variable of this ring.
  void check(Var v) const;

 private:
  Ring() = default;
  std::vector<VariableInfo> vars_;
  bool differential_ = false;
  int derivative_weight2_ = 2;
};

/// Product of generators in canonical order: factors sorted by variable,
/// positive exponents, every odd factor with exponent exactly 1.
class Monomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> sorted_factors) : factors_(std::move(sorted_factors)) {}

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(Var v) const;

  Parity parity(const Ring& ring) const;
  int weight2(const Ring& ring) const;
  int cohomological_degree(const Ring& ring) const;

  /// Product a*b in canonical form; the sign picked up by reordering odd
  /// factors is returned alongside. Empty when an odd factor repeats.
  static std::optional<std::pair<Monomial, int>> multiply(const Ring& ring, const Monomial& a,
                                                          const Monomial& b);

  /// Graded order: total degree first, then factor-lexicographic.
  bool operator<(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Sparse superpolynomial with exact rational coefficients.
class SuperPolynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  explicit SuperPolynomial(RingPtr ring) : ring_(std::move(ring)) {}
  SuperPolynomial(RingPtr ring, TermMap terms);

  static SuperPolynomial constant(RingPtr ring, const Scalar& c);
  static SuperPolynomial variable(RingPtr ring, Var v);
  static SuperPolynomial variable(RingPtr ring, std::string_view name);
  static SuperPolynomial monomial(RingPtr ring, const Monomial& m, const Scalar& c = 1);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const { return coefficient(Monomial{}); }
  bool is_constant() const;

  /// Parity when homogeneous (zero is reported even), empty otherwise.
  std::optional<Parity> parity() const;
  SuperPolynomial part_of_parity(Parity p) const;
  /// Terms of total degree `d` in the odd generators.
  SuperPolynomial odd_degree_part(std::uint32_t d) const;

  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial& operator*=(const Scalar& c);
  void add_term(const Monomial& m, const Scalar& c);

  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(SuperPolynomial a, const Scalar& c) { return a *= c; }
  friend SuperPolynomial operator*(const Scalar& c, SuperPolynomial a) { return a *= c; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  SuperPolynomial operator-() const;

  bool operator==(const SuperPolynomial& o) const;

  std::string to_string() const;

 private:
  void require_same_ring(const SuperPolynomial& o) const;

  RingPtr ring_;
  TermMap terms_;
};

using PolyVector = std::vector<SuperPolynomial>;

SuperPolynomial pow(const SuperPolynomial& p, unsigned e);

/// Left derivative: odd variables are stripped from the left, picking up one
/// sign per odd factor passed.
SuperPolynomial partial_derivative(const SuperPolynomial& p, Var v);
/// Right derivative: odd variables are stripped from the right.
SuperPolynomial right_partial_derivative(const SuperPolynomial& p, Var v);

/// The even derivation of a differential ring raising every derivative order by one.
SuperPolynomial total_derivative(const SuperPolynomial& p);
SuperPolynomial total_derivative(const SuperPolynomial& p, unsigned times);

/// Ring homomorphism determined by the images of the variables occurring in
/// `p`. Images must be parity-homogeneous of the variable's parity.
using VarImage = std::function<SuperPolynomial(Var)>;
SuperPolynomial substitute(const SuperPolynomial& p, const RingPtr& target, const VarImage& image);

/// Derivation of parity `parity` determined by the images of the variables.
SuperPolynomial apply_derivation(const SuperPolynomial& p, Parity parity, const VarImage& image);

/// Every term has the same doubled weight; returns it (0 for the zero polynomial).
std::optional<int> homogeneous_weight2(const SuperPolynomial& p);

/// Largest total degree in the odd generators.
std::uint32_t max_odd_degree(const SuperPolynomial& p);

}  // namespace superslice
