#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kramers/quat_matrix.hpp"
#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Joint Schur form of a commuting quaternionic family: a single symplectic
/// unitary U with U* X_j U = [[T_j, S_j], [-conj(S_j), conj(T_j)]], T_j upper
/// triangular and S_j strictly upper triangular.  The blocks are returned as
/// computed (defects are not zeroed out); `residuals` holds the relative
/// reconstruction error per matrix.
struct QuatSchurResult {
  CMatrix unitary;
  std::vector<CMatrix> upper;   // T_j, N x N
  std::vector<CMatrix> strict;  // S_j, N x N
  std::vector<double> residuals;
};

QuatSchurResult schur_commuting(const std::vector<CMatrix>& xs, std::uint64_t seed,
                                double tolerance = tol::structural);

/// Block diagonalization of commuting normal quaternionic matrices:
/// U* X_j U = [[D_j, 0], [0, conj(D_j)]] with D_j diagonal.
struct QuatDiagResult {
  CMatrix unitary;
  std::vector<CVector> diagonals;
  std::vector<double> residuals;
};

QuatDiagResult diagonalize_commuting_normal(const std::vector<CMatrix>& xs,
                                            std::uint64_t seed,
                                            double tolerance = tol::structural);

/// Determinant of a symplectic unitary (always 1 in exact arithmetic).
/// Throws NotSymplectic unless the input classifies as symplectic and unitary.
Complex symplectic_det_check(const CMatrix& u, double tolerance = tol::structural);

/// Complex right eigenvalues of a quaternion matrix: the eigenvalues of
/// chi(Q), reported as N representatives with nonnegative imaginary part
/// sorted by (Re, Im), followed by their conjugates in matching order.
std::vector<Complex> right_eigenvalues(const QuatMatrix& q);

/// Right eigenpairs (lambda, v - j*w) pulled back from eigenpairs of chi(Q),
/// satisfying Q u = u lambda over the quaternions.
std::vector<std::pair<Complex, QuatVector>> right_eigenpairs(const QuatMatrix& q);

/// Polar decomposition X = U P.  `isometry` is the minimal factor
/// W = X f(X*X); `unitary` extends it per variant; `positive` is (X*X)^(1/2).
struct PolarResult {
  CMatrix unitary;
  CMatrix positive;
  CMatrix isometry;
  double residual{0.0};          // ||X - U P|| / max(1, ||X||)
  double isometry_residual{0.0}; // ||X - W P|| / max(1, ||X||)
};

/// Structured polar of a quaternionic matrix: U symplectic unitary, P
/// quaternionic positive semidefinite.
PolarResult polar_quaternionic(const CMatrix& x, double tolerance = tol::structural);

/// Quaternionic singular value decomposition X = U D V with U, V symplectic
/// unitary and D diagonal, real, nonnegative, the diagonal repeating in equal
/// upper/lower-block pairs.
struct QuatSvdResult {
  CMatrix u;
  CMatrix d;
  CMatrix v;
  double residual{0.0};
};

QuatSvdResult svd_quaternionic(const CMatrix& x, double tolerance = tol::structural);

/// QR factorization X = Q R with Q symplectic unitary and R quaternionic with
/// both blocks upper triangular (diagonal of R real and nonnegative).
std::pair<CMatrix, CMatrix> qr_quaternionic(const CMatrix& x,
                                            double tolerance = tol::structural);

/// Operator norm of a quaternion matrix; equals sigma_max(chi(Q)) and the
/// supremum of ||Q v|| / ||v|| over quaternion vectors.
double operator_norm(const QuatMatrix& q);

}  // namespace kramers
