#include "kramers/factor_selfdual.hpp"

#include <algorithm>
#include <cmath>

#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/structure.hpp"
#include "kramers/symplectic.hpp"

namespace kramers {

namespace {

void require_selfdual(const CMatrix& x, double tolerance, const char* where) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0)
    throw DimensionError(std::string(where) + ": need a square even-dimensional matrix");
  const double defect = (x - dual(x)).norm();
  if (defect > tolerance * std::max(1.0, x.norm()))
    throw NotSelfDual(std::string(where) + ": self-dual defect " +
                      std::to_string(defect));
}

// Column 1 and row N+1 are deflated at each level; the gathered sub-blocks
// stay exactly self-dual because the dual only permutes index pairs.
CMatrix selfdual_recurse(std::vector<CMatrix> ys, std::uint64_t seed) {
  const Eigen::Index two_n = ys.front().rows();
  const Eigen::Index n = two_n / 2;
  CommonEig ce = common_eigenvector(ys, tol::commutator, seed);
  CMatrix u1 = complete_symplectic(ce.vec);
  if (n == 1) return u1;
  const auto idx = deflation_indices(two_n);
  std::vector<CMatrix> zs;
  zs.reserve(ys.size());
  for (auto& y : ys) {
    y = (u1.adjoint() * y * u1).eval();
    zs.push_back(gather_square(y, idx));
  }
  CMatrix u_sub = selfdual_recurse(std::move(zs), seed + 1);
  return u1 * scatter_symplectic(u_sub, idx, two_n);
}

}  // namespace

SelfDualSchurResult schur_selfdual_commuting(const std::vector<CMatrix>& xs,
                                             std::uint64_t seed, double tolerance) {
  if (xs.empty()) throw Error("schur_selfdual_commuting: empty family");
  for (const auto& x : xs) require_selfdual(x, tolerance, "schur_selfdual_commuting");
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      const double comm = (xs[i] * xs[j] - xs[j] * xs[i]).norm();
      if (comm > tol::commutator * std::max(1.0, xs[i].norm() * xs[j].norm()))
        throw NotCommuting("schur_selfdual_commuting: commutator norm " +
                           std::to_string(comm));
    }

  const Eigen::Index two_n = xs.front().rows();
  const Eigen::Index n = two_n / 2;
  SelfDualSchurResult result;
  result.unitary = selfdual_recurse(xs, seed);
  for (const auto& x : xs) {
    CMatrix y = result.unitary.adjoint() * x * result.unitary;
    CMatrix t = y.topLeftCorner(n, n);
    CMatrix c = y.topRightCorner(n, n);
    CMatrix model = CMatrix::Zero(two_n, two_n);
    model.topLeftCorner(n, n) = t;
    model.topRightCorner(n, n) = c;
    model.bottomRightCorner(n, n) = t.transpose();
    result.residuals.push_back((y - model).norm() / std::max(1.0, x.norm()));
    result.upper.push_back(std::move(t));
    result.skew.push_back(std::move(c));
  }
  return result;
}

PolarResult polar_symmetric(const CMatrix& x, double tolerance) {
  if (x.rows() != x.cols())
    throw DimensionError("polar_symmetric: matrix must be square");
  if ((x - x.transpose()).norm() > tolerance * std::max(1.0, x.norm()))
    throw NotSymmetric("polar_symmetric: X^T != X");
  PositivePart spectral = positive_part_factors(x);
  PolarResult result;
  result.positive = spectral.sqrt;
  result.isometry = x * spectral.inv_sqrt;
  result.unitary = extend_symmetric_isometry(result.isometry, tolerance);
  const double scale = std::max(1.0, x.norm());
  result.residual = (x - result.unitary * result.positive).norm() / scale;
  result.isometry_residual =
      (x - result.isometry * result.positive).norm() / scale;
  return result;
}

PolarResult polar_selfdual(const CMatrix& x, double tolerance) {
  require_selfdual(x, tolerance, "polar_selfdual");
  PositivePart spectral = positive_part_factors(x);
  PolarResult result;
  result.positive = spectral.sqrt;
  result.isometry = x * spectral.inv_sqrt;
  result.unitary = extend_selfdual_isometry(result.isometry, tolerance);
  const double scale = std::max(1.0, x.norm());
  result.residual = (x - result.unitary * result.positive).norm() / scale;
  result.isometry_residual =
      (x - result.isometry * result.positive).norm() / scale;
  return result;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix tensor_transpose_unitary(Eigen::Index n, Eigen::Index m) {
  if (n < 1 || m < 1)
    throw DimensionError("tensor_transpose_unitary: need N, M >= 1");
  const CMatrix zn = symplectic_form(2 * n);
  const CMatrix zm = symplectic_form(2 * m);
  const Eigen::Index dim = 4 * n * m;
  const Complex i(0.0, 1.0);
  return (CMatrix::Identity(dim, dim) - i * kron(zn, zm)) / std::sqrt(2.0);
}

double verify_tensor_transpose(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() % 2 != 0 ||
      y.rows() % 2 != 0)
    throw DimensionError("verify_tensor_transpose: need square even dimensions");
  const CMatrix u = tensor_transpose_unitary(x.rows() / 2, y.rows() / 2);
  const CMatrix lhs = u.adjoint() * kron(dual(x), dual(y)) * u;
  const CMatrix rhs = (u.adjoint() * kron(x, y) * u).transpose();
  return (lhs - rhs).norm();
}

double tensor_mixed_dual(const CMatrix& x, const CMatrix& y) {
  if (x.rows() != x.cols()) throw DimensionError("tensor_mixed_dual: X must be square");
  if (y.rows() != y.cols() || y.rows() % 2 != 0)
    throw DimensionError("tensor_mixed_dual: Y must be square of even dimension");
  const CMatrix k = kron(CMatrix::Identity(x.rows(), x.rows()),
                         symplectic_form(y.rows()));
  return (kron(x.transpose(), dual(y)) - dual_wrt(k, kron(x, y))).norm();
}

}  // namespace kramers
