#pragma once

#include <cstdint>
#include <vector>

#include "kramers/factor_quaternionic.hpp"
#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Joint Schur form of a commuting self-dual family: one symplectic unitary U
/// with U* X_j U = [[T_j, C_j], [0, T_j^T]], T_j upper triangular and C_j
/// skew-symmetric.  Blocks are returned as computed.
struct SelfDualSchurResult {
  CMatrix unitary;
  std::vector<CMatrix> upper;  // T_j
  std::vector<CMatrix> skew;   // C_j
  std::vector<double> residuals;
};

SelfDualSchurResult schur_selfdual_commuting(const std::vector<CMatrix>& xs,
                                             std::uint64_t seed,
                                             double tolerance = tol::structural);

/// Polar of a complex symmetric matrix (any dimension): X = U |X| with
/// U^T = U.  The minimal factor W = X f(X*X) is itself symmetric.
PolarResult polar_symmetric(const CMatrix& x, double tolerance = tol::structural);

/// Polar of a self-dual matrix: X = U |X| with dual(U) = U.  The unitary is
/// W + V with V built from Kramers rank-two partial isometries.
PolarResult polar_selfdual(const CMatrix& x, double tolerance = tol::structural);

/// Kronecker product, row-major block convention.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// The symmetric unitary (1/sqrt(2)) (I (x) I - i Z_N (x) Z_M) of dimension
/// 4NM that turns the doubled dual operation into the transpose.
CMatrix tensor_transpose_unitary(Eigen::Index n, Eigen::Index m);

/// Residual of U* (dual(X) (x) dual(Y)) U = (U* (X (x) Y) U)^T; callers
/// assert it is at most ~1e-11 * ||X|| * ||Y||.
double verify_tensor_transpose(const CMatrix& x, const CMatrix& y);

/// Residual of X^T (x) dual(Y) = dual_wrt(I (x) Z_M)(X (x) Y); callers assert
/// it is at most ~1e-12 relative.  X may have any square dimension.
double tensor_mixed_dual(const CMatrix& x, const CMatrix& y);

}  // namespace kramers
