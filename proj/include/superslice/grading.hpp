#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "superslice/lie_superalgebra.hpp"

namespace superslice {

struct Sl2Triple {
  Vector e, h, f;
};

class TripleError : public Error {
 public:
  using Error::Error;
};

/// Grading failure; `weight2` is the doubled degree j where it occurred.
class GradingError : public Error {
 public:
  GradingError(const std::string& what, int weight2) : Error(what), weight2_(weight2) {}
  int weight2() const { return weight2_; }

 private:
  int weight2_;
};

class DecompositionError : public GradingError {
 public:
  using GradingError::GradingError;
};

/// "1/2", "-1", "3/2" for a doubled weight.
std::string half_integer_text(int weight2);
/// Inverse of half_integer_text; accepts "1/2", "-3/2", "2", "0.5".
int parse_half_integer(const std::string& s);

/// Throws TripleError unless [h,e] = 2e, [h,f] = -2f, [e,f] = h with all three even.
void verify_triple(const LieSuperalgebra& g, const Sl2Triple& t);

/// Completes an even nilpotent f to an sl2 triple. h is sought first among
/// basis vectors acting diagonally (so the basis stays an ad_h eigenbasis),
/// then in all of [g_even, f].
Sl2Triple sl2_triple_for(const LieSuperalgebra& g, const Vector& f);

/// Half-integer grading of the basis, stored doubled.
struct GoodGrading {
  std::vector<int> weight2;

  std::vector<std::size_t> indices(int w2) const;
  std::vector<std::size_t> indices(int w2, Parity p, const LieSuperalgebra& g) const;
  std::vector<std::size_t> indices_at_least(int w2) const;
  std::size_t dim(int w2) const { return indices(w2).size(); }
  int min_weight2() const;
  int max_weight2() const;
  /// Distinct doubled degrees in increasing order.
  std::vector<int> degrees() const;
};

/// Grading from ad_h eigenvalues; the basis must diagonalize ad_h. The result
/// is validated as a good grading for t.f.
GoodGrading dynkin_grading(const LieSuperalgebra& g, const Sl2Triple& t);

/// Grading from explicit per-label doubled weights.
GoodGrading grading_from_weights(const LieSuperalgebra& g, const std::map<std::string, int>& weight2);

/// Bracket additivity, f in g_{-1}, ad_f injective for j >= 1/2 and
/// surjective for j <= 1/2. Throws GradingError naming j.
void validate_good_grading(const LieSuperalgebra& g, const GoodGrading& gr, const Vector& f);

/// Kernel of ad_x, with a parity-homogeneous basis (even vectors first).
SubspaceBasis centralizer(const LieSuperalgebra& g, const Vector& x);

/// dim g^e = dim g_0 + dim g_{1/2}, separately for both parities.
bool centralizer_dimension_identity(const LieSuperalgebra& g, const GoodGrading& gr, const Vector& e);

/// g_p = g_p^e + [f, g_{p+1}] for one degree p.
struct DegreePiece {
  int weight2 = 0;
  std::vector<std::size_t> indices;  // basis of g_p
  std::vector<std::size_t> upper;    // basis of g_{p+1}
  std::vector<Vector> centralizer;   // basis of g_p^e (ambient coordinates)
  std::vector<Vector> image;         // [f, x_u] for u in upper
  RationalMatrix split;              // g_p coordinates -> (g_p^e coords | g_{p+1} coords)

  /// Coordinates of v (supported in g_p) as (X, Y) with v = sum X_k c_k + sum Y_u [f, x_u].
  std::pair<Vector, Vector> decompose(const Vector& v) const;
  std::pair<PolyVector, PolyVector> decompose(const PolyVector& v) const;
};

struct SliceDecomposition {
  std::vector<DegreePiece> pieces;  // increasing degree, starting at p = -1/2
  const DegreePiece& piece(int w2) const;
};

SliceDecomposition graded_slice_decomposition(const LieSuperalgebra& g, const GoodGrading& gr,
                                              const Sl2Triple& t);

}  // namespace superslice
