#pragma once

#include <map>
#include <vector>

#include "superslice/lie_superalgebra.hpp"

namespace superslice {

/// Z . exp(Y) = exp(Y)^{-1} Z exp(Y) = sum_n (1/n!) [..[[Z,Y],Y]..,Y].
/// Throws if the series has not terminated after dim(g)+1 terms.
PolyVector adjoint_orbit_map(const LieSuperalgebra& g, const PolyVector& z, const PolyVector& y);
Vector adjoint_orbit_map(const LieSuperalgebra& g, const Vector& z, const Vector& y);

/// Coefficients of the Dynkin form of the Campbell-Hausdorff series: word
/// (false = X, true = Y) -> coefficient of its right-nested bracket, for
/// all words up to the given length.
std::map<std::vector<bool>, Scalar> bch_word_coefficients(std::size_t max_length);

/// exp of a nilpotent subalgebra spanned by basis vectors of an ambient
/// algebra. Elements are ambient vectors supported there; their
/// coefficients may be symbolic but must match the basis parities.
class NilpotentGroup {
 public:
  NilpotentGroup(const LieSuperalgebra& ambient, std::vector<std::size_t> support);

  const LieSuperalgebra& ambient() const { return g_; }
  const std::vector<std::size_t>& support() const { return support_; }
  /// Longest bracket word that can be nonzero (the nilpotency length).
  std::size_t max_word_length() const { return max_word_length_; }

  /// Throws unless y is supported in the subalgebra with parity-respecting entries.
  void check_element(const PolyVector& y) const;
  /// Y with exp(Y) = exp(Y1) exp(Y2).
  PolyVector product(const PolyVector& y1, const PolyVector& y2) const;
  PolyVector inverse(const PolyVector& y) const;

 private:
  LieSuperalgebra g_;
  std::vector<std::size_t> support_;
  std::size_t max_word_length_ = 1;
  std::map<std::vector<bool>, Scalar> words_;
};

/// Campbell-Hausdorff product in a nilpotent algebra (all of g).
PolyVector bch_product(const LieSuperalgebra& g, const PolyVector& y1, const PolyVector& y2);

/// Constant vector as polynomials over `ring`.
PolyVector lift(const RingPtr& ring, const Vector& v);

}  // namespace superslice
