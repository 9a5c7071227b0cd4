#pragma once

#include <vector>

#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Orthonormal basis of C^{2N} arranged in Kramers pairs.  Column j of
/// `unitary` holds v_j and column N+j holds time_reversal(v_j), exactly by
/// construction, so `unitary` is a symplectic unitary.
struct KramersBasis {
  CMatrix unitary;
  Eigen::Index pairs() const { return unitary.cols() / 2; }
  CVector leader(Eigen::Index k) const { return unitary.col(k); }
  CVector partner(Eigen::Index k) const { return unitary.col(pairs() + k); }
};

/// Completes the given seed vectors (projected and normalized, dependent ones
/// skipped) to a full Kramers-paired basis, filling up greedily from the
/// coordinate directions with the largest residual.
KramersBasis kramers_complete(Eigen::Index dim,
                              const std::vector<CVector>& seeds = {});

/// Kramers pairs spanning the column space of K (orthonormal columns, even
/// count, span assumed invariant under time reversal).  Returns the leaders
/// u_1..u_m and partners ~ time_reversal(u_j) projected back into the span.
struct SubspacePairs {
  CMatrix leaders;
  CMatrix partners;
};
SubspacePairs kramers_pairs_in_subspace(const CMatrix& k);

/// Symplectic unitary whose first column is v (and column N+1 is then
/// time_reversal(v)).  Throws NotUnit unless ||v|| = 1 within 1e-12.
CMatrix complete_symplectic(const CVector& v);

/// Extends a quaternionic partial isometry to a symplectic unitary agreeing
/// with it on the orthocomplement of its kernel.  The kernel and cokernel are
/// given Kramers-paired bases which are matched pair to pair.
CMatrix extend_quaternionic_isometry(const CMatrix& w,
                                     double tolerance = tol::structural);

/// Extends a symmetric partial isometry W (W^T = W) to a symmetric unitary by
/// sending an orthonormal kernel basis v_j to conj(v_j).
CMatrix extend_symmetric_isometry(const CMatrix& w,
                                  double tolerance = tol::structural);

/// Self-dual rank-two partial isometry sending v to T(w) and w to -T(v),
/// zero on the orthocomplement of span{v, w}.  Throws NotOrthogonal when
/// v and w are not orthogonal within 1e-12, NotUnit when not unit vectors.
CMatrix kramers_rank2_isometry(const CVector& v, const CVector& w);

/// Extends a self-dual partial isometry to a self-dual unitary W + V where V
/// is a sum of kramers_rank2_isometry pieces over a paired kernel basis.
/// Throws OddKernel when the numerical kernel dimension is odd.
CMatrix extend_selfdual_isometry(const CMatrix& w,
                                 double tolerance = tol::structural);

/// Deflation helpers shared by the factorization drivers: drop the leading
/// Kramers coordinate pair (indices 0 and N) and embed transforms back.
std::vector<Eigen::Index> deflation_indices(Eigen::Index two_n);
CMatrix gather_square(const CMatrix& x, const std::vector<Eigen::Index>& idx);
CMatrix scatter_symplectic(const CMatrix& u_sub,
                           const std::vector<Eigen::Index>& idx,
                           Eigen::Index dim);

}  // namespace kramers
