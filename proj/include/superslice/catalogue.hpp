#pragma once

#include <string_view>
#include <vector>

#include "superslice/lie_superalgebra.hpp"

namespace superslice {

/// The defining (m|n)-supermatrix realization; index i is odd iff i >= m.
/// Basis order: e_ij (i<j) row-major, then the Cartan part, then e_ij (i>j).
/// For m == n the Cartan part is all of E_ii (gl(n|n)); otherwise
/// h_i = E_ii - (-1)^{p_i + p_{i+1}} E_{i+1,i+1}.
std::vector<RationalMatrix> sl_matrix_basis(int m, int n);

/// sl(m|n) with the supertrace form, sign-normalized so the even highest
/// root pairs positively. (m, n) = (1, 1) is rejected; m == n gives gl(n|n).
/// Principal nilpotent: sum of E_{i+1,i} over same-parity neighbours.
LieSuperalgebra build_sl(int m, int n);

/// osp(1|2) on (e, h, f, vp, vm): [h, v+-] = +-v+-, [vp, vm] = h,
/// [vp, vp] = 2e, [vm, vm] = -2f. Form (h,h) = 2, (e,f) = 1, (vp,vm) = 2.
LieSuperalgebra build_osp_1_2();

/// Three-dimensional Heisenberg algebra [p, q] = z.
LieSuperalgebra build_heisenberg();

/// Abelian algebra with the given numbers of even and odd generators.
LieSuperalgebra build_abelian(int even, int odd);

/// "sl2", "sl3", "sl2|1", "sl(2|1)", "osp12", "osp(1|2)", "heisenberg".
LieSuperalgebra catalogue_algebra(std::string_view name);

/// XY - (-1)^{px py} YX.
RationalMatrix supercommutator(const RationalMatrix& x, const RationalMatrix& y, Parity px, Parity py);

}  // namespace superslice
