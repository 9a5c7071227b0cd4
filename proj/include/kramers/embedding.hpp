#pragma once

#include <utility>

#include "kramers/quat_matrix.hpp"
#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// The standard antisymmetric form Z = [[0, I], [-I, 0]] of size two_n.
CMatrix symplectic_form(Eigen::Index two_n);

/// Complex representation of a quaternion matrix: writing Q = A + B*j with
/// complex blocks A and B, returns [[A, B], [-conj(B), conj(A)]].  This is a
/// real-algebra homomorphism and chi(Q').adjoint() == chi(Q.adjoint()).
CMatrix chi(const QuatMatrix& q);

/// Inverse of chi on matrices satisfying the quaternionic condition
/// X.adjoint() == dual(X).  Throws NotQuaternionic when the defect
/// ||X* - dual(X)||_F exceeds tol * max(1, ||X||_F).
QuatMatrix chi_inv(const CMatrix& x, double tolerance = tol::structural);

/// Dual operation: [[A,B],[C,D]] -> [[D^T, -B^T], [-C^T, A^T]], equal to
/// -Z X^T Z.  Requires even dimension.
CMatrix dual(const CMatrix& x);

/// Dual with respect to an arbitrary antisymmetric unitary K: -K X^T K.
CMatrix dual_wrt(const CMatrix& k, const CMatrix& x);

/// Antilinear time-reversal map [v; w] -> [-conj(w); conj(v)].  Squares to
/// minus the identity and every vector is orthogonal to its image.
CVector time_reversal(const CVector& xi);

/// Unique split G = X + i*Y with X, Y both quaternionic:
/// X = (G^dual* + G)/2, Y = (i/2) G^dual* - (i/2) G.
std::pair<CMatrix, CMatrix> quaternionic_split(const CMatrix& g);

/// Pull a complex 2N-vector [v; w] back to the quaternion vector v - j*w.
QuatVector pullback_vector(const CVector& xi);

/// Inverse of pullback_vector: quaternion vector u = v - j*w to [v; w].
CVector embed_vector(const QuatVector& u);

}  // namespace kramers
