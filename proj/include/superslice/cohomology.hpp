#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superslice/matrix.hpp"
#include "superslice/slice.hpp"

namespace superslice {

/// Derivations D_a of a coordinate ring, one per basis vector of a Lie
/// superalgebra n, given on the ring generators: images[a][v] = D_a(x_v).
struct VectorFieldAction {
  RingPtr ring;
  std::vector<Parity> parities;     // parity of D_a
  std::vector<PolyVector> images;

  SuperPolynomial apply(std::size_t a, const SuperPolynomial& p) const;
};

/// Right multiplication vector fields on C[G] for a nilpotent n, read off the
/// Campbell-Hausdorff product exp(Y) exp(eps v_a) to first order in eps.
/// Coordinates x_<label> carry doubled weight -weight2[v].
VectorFieldAction regular_action(const LieSuperalgebra& n, const std::vector<int>& weight2);

/// Infinitesimal right action Z -> exp(-eps v) Z exp(eps v) on the chart ring,
/// one field per basis vector of g_{>=1/2} (in the order of chart.plus).
VectorFieldAction slice_module_action(const SliceChart& c);

/// [D_a, D_b] = sum_c c_ab^c D_c on every ring generator.
std::optional<std::string> check_action_homomorphism(const VectorFieldAction& act, const LieSuperalgebra& n);

/// Weight-truncated complex (R, d): R a superpolynomial ring, d an odd
/// derivation given on the generators that raises the cohomological degree by
/// one and preserves weight. Every generator must have nonzero weight of a
/// common sign, so each block (k, w) is finite.
class GradedComplex {
 public:
  GradedComplex(RingPtr ring, std::vector<Var> generators, const VarImage& d, int max_abs_weight2);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Var>& generators() const { return generators_; }
  int max_abs_weight2() const { return max_abs_weight2_; }
  int weight_sign() const { return sign_; }

  SuperPolynomial d(const SuperPolynomial& p) const;
  const SuperPolynomial& d_of(Var v) const { return images_.at(v); }

  /// (degree, weight2) of every nonempty block, sorted.
  std::vector<std::pair<int, int>> blocks() const;
  bool in_range(int weight2) const;
  /// Throws outside the truncation; empty inside it when no monomial fits.
  const std::vector<Monomial>& basis(int k, int weight2) const;
  /// Matrix of d : C^{k,w} -> C^{k+1,w}, columns indexed by basis(k, w).
  RationalMatrix differential(int k, int weight2) const;

 private:
  RingPtr ring_;
  std::vector<Var> generators_;
  std::map<Var, SuperPolynomial> images_;
  int max_abs_weight2_;
  int sign_ = 1;
  std::map<std::pair<int, int>, std::vector<Monomial>> blocks_;
};

/// d(d(x)) = 0 on generators, and d_{k+1} d_k = 0 on every block.
std::optional<std::string> check_d_squared(const GradedComplex& c);

enum class Execution { Serial, Parallel };

struct CohomologyTable {
  std::map<std::pair<int, int>, std::size_t> dims;  // (k, weight2) -> dim H^k
  std::map<std::pair<int, int>, std::size_t> ranks;  // rank of d leaving (k, weight2)
  std::size_t at(int k, int weight2) const;
};

/// Ranks of every block; Parallel spreads blocks over threads, Serial is the
/// single-threaded reference with the rref rank.
CohomologyTable compute_cohomology(const GradedComplex& c, Execution ex = Execution::Parallel);
std::size_t cohomology_dims(const GradedComplex& c, int k, int weight2);

/// CE complex of n with coefficients in C[G]; ghosts phi_<label> carry doubled
/// weight -weight2[v]. Throws if n is not nilpotent or d^2 != 0.
GradedComplex build_ce_complex(const LieSuperalgebra& n, const std::vector<int>& weight2, int max_abs_weight2);
/// CE complex of g_{>=1/2} with coefficients in C[f + g_{>=-1/2}], graded by
/// conformal weight (ghosts carry doubled weight weight2[v]).
GradedComplex build_slice_ce_complex(const SliceChart& c, int max_weight2);

/// General coefficients: n acts through the given fields; ghost of v gets
/// doubled weight ghost_weight2[v].
GradedComplex build_ce_complex(const LieSuperalgebra& n, const VectorFieldAction& act,
                               const std::vector<int>& ghost_weight2, int max_abs_weight2);

/// Number of monomials of each doubled weight in the free supercommutative
/// algebra on generators of the given weights and parities; with `jets`, each
/// generator also contributes derivatives of weight +2 per order.
std::map<int, std::size_t> free_monomial_counts(const std::vector<int>& weight2, const std::vector<Parity>& parity,
                                                int max_weight2, bool jets);

struct DeRhamReport {
  bool pass = false;
  CohomologyTable table;  // weight2 = 2 * polynomial degree
};

/// Algebraic de Rham complex of C^{p|q} up to total polynomial degree max_degree,
/// with dx odd, dtheta even.
DeRhamReport de_rham_check(int p, int q, int max_degree);

}  // namespace superslice
