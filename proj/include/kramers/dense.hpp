#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Unstructured dense complex kernels.  The contract is the residual bound in
/// each function's description, not the algorithm behind it.

struct HermitianEig {
  RVector values;   // ascending
  CMatrix vectors;  // orthonormal columns
};

/// Eigendecomposition of a Hermitian matrix.  Throws NotHermitian when
/// ||H - H*|| > tolerance * max(1, ||H||).  Reconstruction residual is at
/// most ~1e-12 * ||H||.
HermitianEig hermitian_eig(const CMatrix& h, double tolerance = tol::structural);

struct Svd {
  CMatrix u;
  RVector sigma;  // descending, nonnegative
  CMatrix v;      // x = u * sigma.asDiagonal() * v.adjoint()
};

Svd svd_complex(const CMatrix& x);

/// Spectral function of a Hermitian positive semidefinite matrix.
/// Eigenvalues at or below zero_cut * lambda_max are treated as exactly 0, so
/// with f(0) = 0 they contribute nothing.
CMatrix herm_fun(const CMatrix& h, const std::function<double(double)>& f,
                 double zero_cut = tol::herm_zero_cut,
                 double tolerance = tol::structural);

/// Orthonormal basis of the numerical kernel: columns b with
/// ||X b|| <= tolerance * sigma_max, dimension = number of singular values at
/// or below tolerance * sigma_max.
CMatrix nullspace(const CMatrix& x, double tolerance = tol::rank);

/// (X*X)^(1/2) together with f(X*X) for f = lambda^(-1/2) above the zero cut
/// and 0 at or below it, computed from one shared eigendecomposition so both
/// factors agree on the support.
struct PositivePart {
  CMatrix sqrt;
  CMatrix inv_sqrt;
};
PositivePart positive_part_factors(const CMatrix& x,
                                   double zero_cut = tol::herm_zero_cut);

struct CommonEig {
  CVector vec;                  // unit common eigenvector
  std::vector<Complex> values;  // one eigenvalue per family member
};

/// Common eigenvector of a pairwise-commuting family.
///
/// Strategy: a random real-coefficient combination of the family is formed,
/// one of its eigenspaces is extracted, and the family restricted to that
/// subspace is recursed on; the candidate is then refined jointly.  The
/// returned residuals satisfy ||X_j v - lambda_j v|| <= kSlack * tolerance *
/// max(1, ||X_j||) with kSlack = 100.  Throws NotCommuting when a pairwise
/// commutator exceeds tolerance * ||X_i|| * ||X_j||, NoConvergence when no
/// candidate reaches the residual target.
CommonEig common_eigenvector(const std::vector<CMatrix>& family, double tolerance,
                             std::uint64_t seed);

/// Residual slack factor documented for common_eigenvector.
inline constexpr double kCommonEigSlack = 100.0;

}  // namespace kramers
