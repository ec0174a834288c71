#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superslice/polynomial.hpp"

namespace superslice {

/// Affine superscheme Spec C[x_1..x_N]/(f_1..f_r).
struct Presentation {
  RingPtr ring;  // non-differential
  std::vector<SuperPolynomial> relations;
};

Presentation affine_space(std::vector<VariableInfo> vars);
Presentation product_presentation(const Presentation& x, const Presentation& y);

/// Coordinate ring of the arc space, truncated at jet order max_order.
///
/// The jet coordinate x_{(n)}, n <= -1, is x^(m)/m! with m = -n-1, so that
/// x(z) = sum_n x_{(n)} z^{-n-1} is the Taylor series of the arc.
struct ArcRing {
  Presentation base;
  RingPtr ring;  // differential, same generators as base
  int max_order = 0;
  /// (relation index, n) -> f_{(n)} for n = -1 .. -1-max_order
  std::map<std::pair<std::size_t, int>, SuperPolynomial> relations;

  SuperPolynomial jet(std::size_t i, int n) const;
  /// x_i -> x_{i,(-1)}
  SuperPolynomial projection(const SuperPolynomial& p) const;
  /// "x_(-2)" style name of a jet variable.
  std::string jet_name(Var v) const;
};

/// Relations are obtained by expanding f_j(x_1(z), ..., x_N(z)) as a series in z.
ArcRing arc_ring(const Presentation& p, int max_order);

/// f_{j,(-1-m)} = (1/m!) d^m f_j(x_{(-1)}) for every stored relation.
std::optional<std::string> check_relation_expansion(const ArcRing& a);

}  // namespace superslice
