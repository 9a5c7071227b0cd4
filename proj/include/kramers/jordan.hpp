#pragma once

#include <vector>

#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

struct JordanBlockInfo {
  Complex eigenvalue;
  Eigen::Index size;
};

/// Kramers-paired Jordan decomposition X S = S J.
///
/// Blocks for an eigenvalue with positive imaginary part match blocks of the
/// conjugate eigenvalue one to one; blocks at real eigenvalues come in pairs
/// of equal size.  `pairing` maps every basis column to its time-reversal
/// partner column; the partner equals time_reversal of the column up to sign.
struct JordanResult {
  CMatrix basis;  // S, columns are the Jordan basis
  CMatrix form;   // J
  std::vector<JordanBlockInfo> blocks;
  std::vector<Eigen::Index> pairing;
  double condition{0.0};  // cond_2(S)
  double residual{0.0};   // ||X S - S J||_F
};

/// Orthonormal basis of the generalized eigenspace at lambda, computed by
/// iterated nullspace growth of (X - lambda I)^r until the dimension
/// stabilizes.  Throws NotAnEigenvalue when ker(X - lambda I) is trivial at
/// the tolerance.
CMatrix generalized_eigenspace(const CMatrix& x, Complex lambda,
                               double tolerance = tol::rank);

/// Orthonormal basis of
///   ker(X-lambda)^r  ∩  (ker(X-lambda)^(r-1))^perp  ∩  (im(X-lambda))^perp,
/// the heads of Jordan chains of exact length r.  May be empty.
CMatrix chain_heads(const CMatrix& x, Complex lambda, Eigen::Index r,
                    double tolerance = tol::rank);

/// Jordan form of a quaternionic matrix with a Kramers-paired basis.
/// Eigenvalues are clustered by single linkage at 100 * tolerance (absolute on
/// the eigenvalue plane) and a cluster is treated as real when |Im center| <=
/// 10 * tolerance.  Inputs whose structure cannot be resolved at that scale
/// are rejected with IllConditioned rather than guessed at.
JordanResult jordan_quaternionic(const CMatrix& x, double tolerance = tol::jordan);

}  // namespace kramers
