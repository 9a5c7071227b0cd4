#include "kramers/dense.hpp"

#include <algorithm>
#include <cmath>

#include "kramers/clustering.hpp"
#include "kramers/errors.hpp"
#include "kramers/generators.hpp"

namespace kramers {

HermitianEig hermitian_eig(const CMatrix& h, double tolerance) {
  if (h.rows() != h.cols())
    throw DimensionError("hermitian_eig: matrix must be square");
  const double defect = (h - h.adjoint()).norm();
  if (defect > tolerance * std::max(1.0, h.norm()))
    throw NotHermitian("hermitian_eig: Hermitian defect " + std::to_string(defect));
  CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("hermitian_eig: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Svd svd_complex(const CMatrix& x) {
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

CMatrix herm_fun(const CMatrix& h, const std::function<double(double)>& f,
                 double zero_cut, double tolerance) {
  HermitianEig eig = hermitian_eig(h, tolerance);
  const Eigen::Index n = h.rows();
  const double lambda_max = n > 0 ? std::max(0.0, eig.values.maxCoeff()) : 0.0;
  const double cut = zero_cut * lambda_max;
  CVector fv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = eig.values(i);
    fv(i) = lam <= cut ? 0.0 : f(lam);
  }
  return eig.vectors * fv.asDiagonal() * eig.vectors.adjoint();
}

CMatrix nullspace(const CMatrix& x, double tolerance) {
  Eigen::JacobiSVD<CMatrix> svd(x, Eigen::ComputeFullV);
  const Eigen::Index n = x.cols();
  const Eigen::Index k = std::min(x.rows(), x.cols());
  const double smax = k > 0 ? svd.singularValues()(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    if (svd.singularValues()(i) > tolerance * smax) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

PositivePart positive_part_factors(const CMatrix& x, double zero_cut) {
  CMatrix h = x.adjoint() * x;
  h = 0.5 * (h + h.adjoint());
  HermitianEig eig = hermitian_eig(h, 1.0);  // Hermitian by construction
  const Eigen::Index n = h.rows();
  const double lambda_max = n > 0 ? std::max(0.0, eig.values.maxCoeff()) : 0.0;
  const double cut = zero_cut * lambda_max;
  CVector sq(n), isq(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = eig.values(i);
    if (lam <= cut) {
      sq(i) = 0.0;
      isq(i) = 0.0;
    } else {
      sq(i) = std::sqrt(lam);
      isq(i) = 1.0 / std::sqrt(lam);
    }
  }
  PositivePart out;
  out.sqrt = eig.vectors * sq.asDiagonal() * eig.vectors.adjoint();
  out.sqrt = 0.5 * (out.sqrt + out.sqrt.adjoint());
  out.inv_sqrt = eig.vectors * isq.asDiagonal() * eig.vectors.adjoint();
  return out;
}

namespace {

// Orthonormal basis of the near-kernel of m - mu*I holding `want` directions
// when that many singular values fall below the cut, at least one otherwise.
CMatrix eigenspace_basis(const CMatrix& m, Complex mu, Eigen::Index want) {
  const Eigen::Index d = m.rows();
  CMatrix shifted = m - mu * CMatrix::Identity(d, d);
  Eigen::JacobiSVD<CMatrix> svd(shifted, Eigen::ComputeFullV);
  const double smax = svd.singularValues()(0);
  const double cut = 1e-7 * std::max(smax, 1e-300);
  Eigen::Index below = 0;
  for (Eigen::Index i = 0; i < d; ++i)
    if (svd.singularValues()(i) <= cut) ++below;
  const Eigen::Index take = std::max<Eigen::Index>(1, std::min(want, below));
  return svd.matrixV().rightCols(take);
}

bool near_scalar(const CMatrix& a) {
  const Eigen::Index d = a.rows();
  const Complex mean = a.trace() / static_cast<double>(d);
  return (a - mean * CMatrix::Identity(d, d)).norm() <=
         1e-11 * std::max(1.0, a.norm());
}

}  // namespace

CommonEig common_eigenvector(const std::vector<CMatrix>& family, double tolerance,
                             std::uint64_t seed) {
  if (family.empty()) throw Error("common_eigenvector: empty family");
  const Eigen::Index n = family.front().rows();
  for (const auto& x : family)
    if (x.rows() != n || x.cols() != n)
      throw DimensionError("common_eigenvector: family members must be square and equal-sized");
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      const double comm = (family[i] * family[j] - family[j] * family[i]).norm();
      if (comm > tolerance * std::max(1.0, family[i].norm() * family[j].norm()))
        throw NotCommuting("common_eigenvector: commutator norm " +
                           std::to_string(comm));
    }

  Rng rng(seed);
  const int max_attempts = 4;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // Invariant-subspace recursion: E spans a subspace invariant under every
    // family member; shrink it until one dimension remains.
    CMatrix e = CMatrix::Identity(n, n);
    for (Eigen::Index guard = 0; guard <= n && e.cols() > 1; ++guard) {
      const Eigen::Index d = e.cols();
      std::vector<CMatrix> restricted;
      restricted.reserve(family.size());
      for (const auto& x : family) restricted.push_back(e.adjoint() * x * e);

      CMatrix m = CMatrix::Zero(d, d);
      for (const auto& a : restricted) m += rng.normal() * a;
      if (near_scalar(m)) {
        auto it = std::find_if(restricted.begin(), restricted.end(),
                               [](const CMatrix& a) { return !near_scalar(a); });
        if (it == restricted.end()) break;  // all scalar: any vector works
        m = *it;
      }

      Eigen::ComplexEigenSolver<CMatrix> ces(m);
      std::vector<Complex> eigs(ces.eigenvalues().data(),
                                ces.eigenvalues().data() + d);
      const double scale = std::max(1.0, m.norm());
      auto groups = cluster_single_linkage(eigs, 1e-8 * scale);
      auto center = [&](const std::vector<int>& g) {
        Complex c(0, 0);
        for (int i : g) c += eigs[static_cast<size_t>(i)];
        return c / static_cast<double>(g.size());
      };
      // Smallest cluster first (cheapest recursion).  Ties are broken on
      // rounded coordinates with the upper half-plane preferred, so the pick
      // is stable under unitary conjugation of the family.
      const double eta = 1e-6 * scale;
      auto prefer = [&](const std::vector<int>& g, const std::vector<int>& h) {
        if (g.size() != h.size()) return g.size() < h.size();
        const Complex cg = center(g), ch = center(h);
        if (cg.real() < ch.real() - eta) return true;
        if (cg.real() > ch.real() + eta) return false;
        const double ag = std::abs(cg.imag()), ah = std::abs(ch.imag());
        if (ag < ah - eta) return true;
        if (ag > ah + eta) return false;
        return cg.imag() > ch.imag();
      };
      const std::vector<int>* best = &groups.front();
      for (const auto& g : groups)
        if (prefer(g, *best)) best = &g;
      CMatrix basis = eigenspace_basis(m, center(*best),
                                       static_cast<Eigen::Index>(best->size()));
      if (basis.cols() >= d) break;  // no progress; fall through to refinement
      e = e * basis;
    }

    CVector v = e.col(0);
    v.normalize();

    // Joint refinement: the best unit vector for the current Rayleigh
    // quotients is the smallest right singular vector of the stacked shifted
    // family.
    std::vector<Complex> lambdas(family.size());
    for (int it = 0; it < 3; ++it) {
      for (size_t j = 0; j < family.size(); ++j)
        lambdas[j] = v.dot(family[j] * v);
      CMatrix stacked(static_cast<Eigen::Index>(family.size()) * n, n);
      for (size_t j = 0; j < family.size(); ++j)
        stacked.middleRows(static_cast<Eigen::Index>(j) * n, n) =
            family[j] - lambdas[j] * CMatrix::Identity(n, n);
      Eigen::JacobiSVD<CMatrix> svd(stacked, Eigen::ComputeFullV);
      v = svd.matrixV().col(n - 1);
    }
    for (size_t j = 0; j < family.size(); ++j) lambdas[j] = v.dot(family[j] * v);

    double worst = 0.0;
    for (size_t j = 0; j < family.size(); ++j) {
      const double res = (family[j] * v - lambdas[j] * v).norm() /
                         std::max(1.0, family[j].norm());
      worst = std::max(worst, res);
    }
    if (worst <= kCommonEigSlack * std::max(tolerance, 1e-14))
      return {v, lambdas};
  }
  throw NoConvergence("common_eigenvector: residual target not reached");
}

}  // namespace kramers
