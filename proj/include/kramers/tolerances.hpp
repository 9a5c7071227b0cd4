#pragma once

namespace kramers::tol {

/// Structural defect threshold, relative to max(1, ||X||_F).
inline constexpr double structural = 1e-10;

/// Rank decisions: singular values below rank * sigma_max count as zero.
inline constexpr double rank = 1e-10;

/// Partial isometry test ||(W*W)^2 - W*W|| <= partial_isometry * max(1, ||W||^2).
inline constexpr double partial_isometry = 1e-8;

/// Pairwise commutator bound, relative to the product of norms.
inline constexpr double commutator = 1e-8;

/// herm_fun: eigenvalues below herm_zero_cut * lambda_max are treated as 0.
inline constexpr double herm_zero_cut = 1e-14;

/// Unit-vector and orthogonality slack for basis constructions.
inline constexpr double unit_vector = 1e-12;
inline constexpr double orthogonality = 1e-12;

/// Jordan decomposition: eigenvalue clusters are linked at 100 * jordan and a
/// cluster counts as real when |Im center| <= 10 * jordan (absolute scale).
inline constexpr double jordan = 1e-5;

}  // namespace kramers::tol
