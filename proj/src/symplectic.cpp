#include "kramers/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/structure.hpp"

namespace kramers {

namespace {

// Two rounds of Gram-Schmidt against the chosen columns.
void project_out(const std::vector<CVector>& chosen, CVector& w) {
  for (int round = 0; round < 2; ++round)
    for (const auto& u : chosen) w -= u.dot(w) * u;
}

void require_partial_isometry(const CMatrix& w) {
  const CMatrix g = w.adjoint() * w;
  const double defect = (g * g - g).norm();
  if (defect > tol::partial_isometry * std::max(1.0, w.norm() * w.norm()))
    throw NotPartialIsometry("partial isometry defect " + std::to_string(defect));
}

}  // namespace

KramersBasis kramers_complete(Eigen::Index dim, const std::vector<CVector>& seeds) {
  if (dim % 2 != 0)
    throw DimensionError("kramers_complete: dimension must be even");
  const Eigen::Index n = dim / 2;
  std::vector<CVector> chosen;  // interleaved v_1, Tv_1, v_2, Tv_2, ...
  std::vector<CVector> leaders;
  chosen.reserve(static_cast<size_t>(dim));

  auto try_add = [&](CVector w) -> bool {
    project_out(chosen, w);
    const double norm = w.norm();
    if (norm < 1e-8) return false;
    w /= norm;
    CVector partner = time_reversal(w);
    leaders.push_back(w);
    chosen.push_back(std::move(w));
    chosen.push_back(std::move(partner));
    return true;
  };

  for (const auto& s : seeds) {
    if (static_cast<Eigen::Index>(leaders.size()) == n) break;
    try_add(s);
  }

  // Fill up from the coordinate direction least covered so far.
  RVector weight = RVector::Zero(dim);
  auto add_weight = [&](size_t from) {
    for (size_t k = from; k < chosen.size(); ++k)
      weight += chosen[k].cwiseAbs2();
  };
  add_weight(0);
  while (static_cast<Eigen::Index>(leaders.size()) < n) {
    Eigen::Index best = 0;
    weight.minCoeff(&best);
    const size_t before = chosen.size();
    CVector e = CVector::Zero(dim);
    e(best) = 1.0;
    if (!try_add(e)) {
      weight(best) = std::numeric_limits<double>::infinity();
      continue;
    }
    add_weight(before);
  }

  KramersBasis basis;
  basis.unitary.resize(dim, dim);
  for (Eigen::Index k = 0; k < n; ++k) {
    basis.unitary.col(k) = chosen[static_cast<size_t>(2 * k)];
    basis.unitary.col(n + k) = chosen[static_cast<size_t>(2 * k + 1)];
  }
  return basis;
}

SubspacePairs kramers_pairs_in_subspace(const CMatrix& k) {
  const Eigen::Index d = k.cols();
  if (d % 2 != 0)
    throw OddKernel("kramers_pairs_in_subspace: odd subspace dimension");
  std::vector<CVector> chosen;
  SubspacePairs out;
  out.leaders.resize(k.rows(), d / 2);
  out.partners.resize(k.rows(), d / 2);
  Eigen::Index made = 0;
  for (Eigen::Index j = 0; j < d && made < d / 2; ++j) {
    CVector u = k.col(j);
    project_out(chosen, u);
    const double norm = u.norm();
    if (norm < 1e-6) continue;
    u /= norm;
    // Partner: time-reversal image projected back into the span (the span is
    // assumed invariant, so the projection loss is at tolerance level).
    CVector p = time_reversal(u);
    p = k * (k.adjoint() * p);
    project_out(chosen, p);
    const double pnorm = p.norm();
    if (pnorm < 0.5)
      throw StructureError(
          "kramers_pairs_in_subspace: subspace is not time-reversal invariant");
    p /= pnorm;
    out.leaders.col(made) = u;
    out.partners.col(made) = p;
    ++made;
    chosen.push_back(u);
    chosen.push_back(p);
  }
  if (made != d / 2)
    throw StructureError("kramers_pairs_in_subspace: pairing incomplete");
  return out;
}

CMatrix complete_symplectic(const CVector& v) {
  if (v.size() % 2 != 0)
    throw DimensionError("complete_symplectic: vector length must be even");
  if (std::abs(v.norm() - 1.0) > tol::unit_vector)
    throw NotUnit("complete_symplectic: ||v|| = " + std::to_string(v.norm()));
  return kramers_complete(v.size(), {v.normalized()}).unitary;
}

CMatrix extend_quaternionic_isometry(const CMatrix& w, double tolerance) {
  require_partial_isometry(w);
  StructureReport sr = classify(w, tolerance);
  if (!sr.quaternionic)
    throw NotQuaternionic("extend_quaternionic_isometry: defect " +
                          std::to_string(sr.quaternionic_dev));

  Eigen::JacobiSVD<CMatrix> svd(w, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Index n = w.rows();
  Eigen::Index rank = 0;
  const double smax = svd.singularValues()(0);
  for (Eigen::Index i = 0; i < n; ++i)
    if (svd.singularValues()(i) > tol::rank * smax) ++rank;
  const Eigen::Index null_dim = n - rank;
  if (null_dim == 0) return w;
  if (null_dim % 2 != 0)
    throw NotQuaternionic("extend_quaternionic_isometry: odd kernel dimension " +
                          std::to_string(null_dim));

  // ker(W) from right singular vectors, ker(W*) from left ones; both are
  // time-reversal invariant for quaternionic W.
  SubspacePairs src = kramers_pairs_in_subspace(svd.matrixV().rightCols(null_dim));
  SubspacePairs dst = kramers_pairs_in_subspace(svd.matrixU().rightCols(null_dim));

  CMatrix u = w;
  for (Eigen::Index j = 0; j < null_dim / 2; ++j) {
    u += dst.leaders.col(j) * src.leaders.col(j).adjoint();
    u += dst.partners.col(j) * src.partners.col(j).adjoint();
  }
  return u;
}

CMatrix extend_symmetric_isometry(const CMatrix& w, double tolerance) {
  require_partial_isometry(w);
  if ((w - w.transpose()).norm() > tolerance * std::max(1.0, w.norm()))
    throw NotSymmetric("extend_symmetric_isometry: W^T != W");

  CMatrix kernel = nullspace(w, tol::rank);
  CMatrix u = w;
  // ker(W*) = conj(ker(W)) for symmetric W; v_j maps to conj(v_j) and each
  // rank-one piece conj(v) v^* is itself symmetric.
  for (Eigen::Index j = 0; j < kernel.cols(); ++j)
    u += kernel.col(j).conjugate() * kernel.col(j).adjoint();
  return u;
}

CMatrix kramers_rank2_isometry(const CVector& v, const CVector& w) {
  if (v.size() != w.size() || v.size() % 2 != 0)
    throw DimensionError("kramers_rank2_isometry: bad vector lengths");
  if (std::abs(v.norm() - 1.0) > tol::unit_vector ||
      std::abs(w.norm() - 1.0) > tol::unit_vector)
    throw NotUnit("kramers_rank2_isometry: arguments must be unit vectors");
  if (std::abs(v.dot(w)) > tol::orthogonality)
    throw NotOrthogonal("kramers_rank2_isometry: |<v,w>| = " +
                        std::to_string(std::abs(v.dot(w))));
  return time_reversal(w) * v.adjoint() - time_reversal(v) * w.adjoint();
}

CMatrix extend_selfdual_isometry(const CMatrix& w, double tolerance) {
  require_partial_isometry(w);
  if ((w - dual(w)).norm() > tolerance * std::max(1.0, w.norm()))
    throw NotSelfDual("extend_selfdual_isometry: dual(W) != W");

  CMatrix kernel = nullspace(w, tol::rank);
  const Eigen::Index d = kernel.cols();
  if (d == 0) return w;
  if (d % 2 != 0)
    throw OddKernel("extend_selfdual_isometry: kernel dimension " +
                    std::to_string(d) + " is odd");
  CMatrix u = w;
  for (Eigen::Index j = 0; j + 1 < d; j += 2)
    u += kramers_rank2_isometry(kernel.col(j), kernel.col(j + 1));
  return u;
}

std::vector<Eigen::Index> deflation_indices(Eigen::Index two_n) {
  const Eigen::Index n = two_n / 2;
  std::vector<Eigen::Index> idx;
  idx.reserve(static_cast<size_t>(two_n - 2));
  for (Eigen::Index i = 1; i < n; ++i) idx.push_back(i);
  for (Eigen::Index i = n + 1; i < two_n; ++i) idx.push_back(i);
  return idx;
}

CMatrix gather_square(const CMatrix& x, const std::vector<Eigen::Index>& idx) {
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  CMatrix out(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out(i, j) = x(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  return out;
}

CMatrix scatter_symplectic(const CMatrix& u_sub,
                           const std::vector<Eigen::Index>& idx,
                           Eigen::Index dim) {
  CMatrix out = CMatrix::Identity(dim, dim);
  const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      out(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]) = u_sub(i, j);
  return out;
}

}  // namespace kramers
