#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superslice/grading.hpp"
#include "superslice/nilpotent_group.hpp"

namespace superslice {

/// Deterministic rational draws, independent of the standard library's
/// distribution implementations.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi);
  /// n/d with n in [-10, 10], d in [1, 4].
  Scalar rational();

 private:
  std::mt19937_64 rng_;
};

/// One generator of g^e.
struct SliceGenerator {
  std::string label;  // basis label when the vector is a basis vector, else x<k>
  Vector vector;
  int weight2 = 0;    // grading degree j, doubled
  Parity parity = Parity::Even;
  /// Doubled conformal weight 1 + j carried by the invariant.
  int conformal_weight2() const { return weight2 + 2; }
};

/// Output of gauge fixing on the generic point Z = f + sum z_a x_a of f + g_{>=-1/2}.
///
/// The coordinate z_a of g_p carries doubled weight 2 + 2p; the invariant
/// of a generator in g^e_j is homogeneous of doubled weight 2 + 2j.
/// adjoint_orbit_map(Z, gauge) = f + sum_k invariants[k] * generators[k].vector.
struct SliceChart {
  LieSuperalgebra g;
  Sl2Triple triple;
  GoodGrading grading;
  SliceDecomposition decomposition;
  RingPtr ring;
  std::vector<std::size_t> coordinates;  // basis index of each ring variable
  std::vector<std::size_t> plus;         // basis of g_{>=1/2}
  std::vector<SliceGenerator> generators;
  std::vector<SuperPolynomial> invariants;
  PolyVector gauge;  // ambient vector supported on g_{>=1/2}

  PolyVector generic_point() const;
  /// f + sum_a coords[a] x_a with coords indexed like `coordinates`.
  PolyVector point(const PolyVector& coords) const;
  /// Coordinates (one per ring variable) of an ambient vector of f + g_{>=-1/2}.
  PolyVector coordinates_of(const PolyVector& z) const;
  /// Image of p under z_a -> coords[a].
  SuperPolynomial evaluate(const SuperPolynomial& p, const PolyVector& coords) const;
  std::size_t variable_of(std::size_t basis_index) const;
};

SliceChart gauge_fix(const LieSuperalgebra& g, const Sl2Triple& t, const GoodGrading& gr);

/// Exact checks on the chart; each returns a description of the first failure.
std::optional<std::string> check_chart_parity(const SliceChart& c);
std::optional<std::string> check_chart_weights(const SliceChart& c);
/// Symbolic round trip: adjoint_orbit_map(f + sum I_k v_k, -gauge) = Z.
std::optional<std::string> check_round_trip(const SliceChart& c);
/// #even (odd) generators = dim g_0 + dim g_{1/2} restricted to even (odd) vectors.
std::optional<std::string> check_dimension_accounting(const SliceChart& c);

struct InvarianceReport {
  bool pass = true;
  int trials = 0;
  std::optional<std::string> counterexample;
};

/// Random rational Z in f + g_{>=-1/2} and Y in g_{>=1/2}; odd directions carry
/// formal odd symbols. Checks I(Z . exp Y) = I(Z) as polynomial identities.
InvarianceReport verify_invariance(const SliceChart& c, int trials, std::uint64_t seed);

/// Poisson bracket on C[f + g_{>=-1/2}] = S(g_{<=0} + g_{1/2}) with
/// {u,v} = [u,v] on g_{<=0}, (f|[u,v]) on g_{1/2}, 0 across. The
/// identification sends u in g_{<=0} to -(-1)^|u| (Z|u) and u in g_{1/2} to (Z|u).
class ZhuPoisson {
 public:
  explicit ZhuPoisson(const SliceChart& c);
  const RingPtr& ring() const { return ring_; }
  /// {z_a, z_b} for ring variables a, b.
  const SuperPolynomial& generator_bracket(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  SuperPolynomial bracket(const SuperPolynomial& p, const SuperPolynomial& q) const;
  /// The linear function attached to u (ambient vector in g_{<=1/2}).
  SuperPolynomial psi(const Vector& u) const;
  const std::vector<std::size_t>& low() const { return low_; }
  /// psi(x_i) over the ring variables, one row per entry of low().
  const std::vector<Vector>& psi_rows() const { return psi_rows_; }

 private:
  RingPtr ring_;
  std::size_t n_ = 0;
  std::vector<SuperPolynomial> table_;
  std::vector<Vector> psi_rows_;  // psi(x_i) for i in g_{<=1/2}, over ring variables
  std::vector<std::size_t> low_;  // basis indices with doubled weight <= 1
};

SuperPolynomial zhu_poisson_bracket(const SliceChart& c, const SuperPolynomial& p, const SuperPolynomial& q);

/// Poisson brackets of the invariants, restricted to slice points f + sum s_k v_k.
struct PoissonTable {
  RingPtr slice_ring;  // s_<label>, one per generator
  std::map<std::pair<std::size_t, std::size_t>, SuperPolynomial> entries;

  SuperPolynomial bracket(const SuperPolynomial& p, const SuperPolynomial& q) const;
};

/// Throws if some {I_a, I_b} is not the pull-back of its slice restriction.
PoissonTable slice_poisson_table(const SliceChart& c);

std::optional<std::string> check_poisson_antisymmetry(const PoissonTable& t);
std::optional<std::string> check_poisson_jacobi(const PoissonTable& t);

/// Invariants restricted to f + g_{-1/2} + g_0.
struct MiuraImage {
  RingPtr ring;                          // coordinates of g_{-1/2} + g_0
  std::vector<std::size_t> coordinates;  // basis index of each variable
  std::vector<SliceGenerator> generators;
  std::vector<SuperPolynomial> images;
  Vector witness;  // even g_ini coordinates of -h, in ring variable order
};

MiuraImage finite_miura(const SliceChart& c);
std::optional<std::string> check_miura_parity(const MiuraImage& m);

struct WitnessPoint {
  std::string source;  // "random" or "exp(e)"
  Vector values;       // even coordinates, in ring variable order
  std::size_t rank = 0;
};

struct InjectivityCertificate {
  std::size_t even_rank = 0, even_target = 0;
  std::size_t odd_rank = 0, odd_target = 0;
  std::vector<WitnessPoint> even_points, odd_points;
  bool pass = false;
};

InjectivityCertificate injectivity_certificate(const MiuraImage& m, int trials, std::uint64_t seed);

}  // namespace superslice
