#include "kramers/factor_quaternionic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/structure.hpp"
#include "kramers/symplectic.hpp"

namespace kramers {

namespace {

void require_quaternionic(const CMatrix& x, double tolerance, const char* where) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0)
    throw DimensionError(std::string(where) + ": need a square even-dimensional matrix");
  const double defect = (x.adjoint() - dual(x)).norm();
  if (defect > tolerance * std::max(1.0, x.norm()))
    throw NotQuaternionic(std::string(where) + ": quaternionic defect " +
                          std::to_string(defect));
}

void require_commuting(const std::vector<CMatrix>& xs, const char* where) {
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j) {
      const double comm = (xs[i] * xs[j] - xs[j] * xs[i]).norm();
      if (comm > tol::commutator * std::max(1.0, xs[i].norm() * xs[j].norm()))
        throw NotCommuting(std::string(where) + ": commutator norm " +
                           std::to_string(comm));
    }
}

// One deflation level of the joint Schur recursion.  The eigenvector is
// standardized to the closed upper half-plane through the first family
// member, so single-matrix Schur diagonals are half-plane representatives.
CMatrix schur_recurse(std::vector<CMatrix> ys, std::uint64_t seed) {
  const Eigen::Index two_n = ys.front().rows();
  const Eigen::Index n = two_n / 2;
  CommonEig ce = common_eigenvector(ys, tol::commutator, seed);
  CVector v = ce.vec;
  if (ce.values.front().imag() < 0.0) v = time_reversal(v);
  CMatrix u1 = complete_symplectic(v);
  if (n == 1) return u1;
  const auto idx = deflation_indices(two_n);
  std::vector<CMatrix> zs;
  zs.reserve(ys.size());
  for (auto& y : ys) {
    y = (u1.adjoint() * y * u1).eval();
    zs.push_back(gather_square(y, idx));
  }
  CMatrix u_sub = schur_recurse(std::move(zs), seed + 1);
  return u1 * scatter_symplectic(u_sub, idx, two_n);
}

}  // namespace

QuatSchurResult schur_commuting(const std::vector<CMatrix>& xs, std::uint64_t seed,
                                double tolerance) {
  if (xs.empty()) throw Error("schur_commuting: empty family");
  for (const auto& x : xs) require_quaternionic(x, tolerance, "schur_commuting");
  require_commuting(xs, "schur_commuting");

  const Eigen::Index two_n = xs.front().rows();
  const Eigen::Index n = two_n / 2;
  QuatSchurResult result;
  result.unitary = schur_recurse(xs, seed);
  for (const auto& x : xs) {
    CMatrix y = result.unitary.adjoint() * x * result.unitary;
    CMatrix t = y.topLeftCorner(n, n);
    CMatrix s = y.topRightCorner(n, n);
    CMatrix model(two_n, two_n);
    model.topLeftCorner(n, n) = t;
    model.topRightCorner(n, n) = s;
    model.bottomLeftCorner(n, n) = -s.conjugate();
    model.bottomRightCorner(n, n) = t.conjugate();
    result.residuals.push_back((y - model).norm() / std::max(1.0, x.norm()));
    result.upper.push_back(std::move(t));
    result.strict.push_back(std::move(s));
  }
  return result;
}

QuatDiagResult diagonalize_commuting_normal(const std::vector<CMatrix>& xs,
                                            std::uint64_t seed, double tolerance) {
  for (const auto& x : xs) {
    const double defect = (x * x.adjoint() - x.adjoint() * x).norm();
    if (defect > tol::commutator * std::max(1.0, x.norm() * x.norm()))
      throw NotNormal("diagonalize_commuting_normal: normality defect " +
                      std::to_string(defect));
  }
  QuatSchurResult schur = schur_commuting(xs, seed, tolerance);
  const Eigen::Index n = schur.unitary.rows() / 2;
  QuatDiagResult result;
  result.unitary = schur.unitary;
  for (size_t j = 0; j < xs.size(); ++j) {
    CVector d = schur.upper[j].diagonal();
    CMatrix model = CMatrix::Zero(2 * n, 2 * n);
    model.topLeftCorner(n, n) = d.asDiagonal();
    model.bottomRightCorner(n, n) = d.conjugate().asDiagonal();
    CMatrix y = result.unitary.adjoint() * xs[j] * result.unitary;
    result.residuals.push_back((y - model).norm() / std::max(1.0, xs[j].norm()));
    result.diagonals.push_back(std::move(d));
  }
  return result;
}

Complex symplectic_det_check(const CMatrix& u, double tolerance) {
  StructureReport sr = classify(u, tolerance);
  if (!sr.symplectic || !sr.unitary)
    throw NotSymplectic("symplectic_det_check: symplectic defect " +
                        std::to_string(sr.symplectic_dev) + ", unitary defect " +
                        std::to_string(sr.unitary_dev));
  return Eigen::PartialPivLU<CMatrix>(u).determinant();
}

namespace {

bool lex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Conjugation-closed pairing of a spectrum: match every eigenvalue with the
// one closest to its conjugate, then report one representative per pair with
// nonnegative imaginary part, sorted by (Re, Im).
std::vector<Complex> pair_spectrum(std::vector<Complex> eigs) {
  std::vector<char> used(eigs.size(), 0);
  std::vector<Complex> reps;
  for (size_t count = 0; count + 1 < eigs.size(); count += 2) {
    int a = -1;
    for (size_t i = 0; i < eigs.size(); ++i)
      if (!used[i] && (a < 0 || std::abs(eigs[i].imag()) >
                                    std::abs(eigs[static_cast<size_t>(a)].imag())))
        a = static_cast<int>(i);
    if (a < 0) break;
    used[static_cast<size_t>(a)] = 1;
    const Complex za = eigs[static_cast<size_t>(a)];
    int b = -1;
    double best = 0.0;
    for (size_t i = 0; i < eigs.size(); ++i) {
      if (used[i]) continue;
      const double dist = std::abs(eigs[i] - std::conj(za));
      if (b < 0 || dist < best) {
        b = static_cast<int>(i);
        best = dist;
      }
    }
    Complex rep = za;
    if (b >= 0) {
      used[static_cast<size_t>(b)] = 1;
      rep = 0.5 * (za + std::conj(eigs[static_cast<size_t>(b)]));
    }
    if (rep.imag() < 0) rep = std::conj(rep);
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  return reps;
}

}  // namespace

std::vector<Complex> right_eigenvalues(const QuatMatrix& q) {
  Eigen::ComplexEigenSolver<CMatrix> ces(chi(q), /*computeEigenvectors=*/false);
  std::vector<Complex> eigs(ces.eigenvalues().data(),
                            ces.eigenvalues().data() + ces.eigenvalues().size());
  std::vector<Complex> reps = pair_spectrum(std::move(eigs));
  std::vector<Complex> out = reps;
  for (const Complex& r : reps) out.push_back(std::conj(r));
  return out;
}

std::vector<std::pair<Complex, QuatVector>> right_eigenpairs(const QuatMatrix& q) {
  Eigen::ComplexEigenSolver<CMatrix> ces(chi(q));
  std::vector<std::pair<Complex, QuatVector>> out;
  for (Eigen::Index j = 0; j < ces.eigenvalues().size(); ++j)
    out.emplace_back(ces.eigenvalues()(j), pullback_vector(ces.eigenvectors().col(j)));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  return out;
}

PolarResult polar_quaternionic(const CMatrix& x, double tolerance) {
  require_quaternionic(x, tolerance, "polar_quaternionic");
  PositivePart spectral = positive_part_factors(x);
  PolarResult result;
  result.positive = spectral.sqrt;
  result.isometry = x * spectral.inv_sqrt;
  result.unitary = extend_quaternionic_isometry(result.isometry, tolerance);
  const double scale = std::max(1.0, x.norm());
  result.residual = (x - result.unitary * result.positive).norm() / scale;
  result.isometry_residual =
      (x - result.isometry * result.positive).norm() / scale;
  return result;
}

QuatSvdResult svd_quaternionic(const CMatrix& x, double tolerance) {
  require_quaternionic(x, tolerance, "svd_quaternionic");
  PolarResult polar = polar_quaternionic(x, tolerance);
  QuatDiagResult diag = diagonalize_commuting_normal(
      {polar.positive}, /*seed=*/0x5eed0fd1ULL, tolerance);
  const Eigen::Index n = diag.unitary.rows() / 2;

  std::vector<Eigen::Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  const CVector& d = diag.diagonals.front();
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return d(a).real() > d(b).real();
  });

  CMatrix perm = CMatrix::Zero(2 * n, 2 * n);
  RVector sorted(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    perm(order[static_cast<size_t>(k)], k) = 1.0;
    perm(n + order[static_cast<size_t>(k)], n + k) = 1.0;
    sorted(k) = std::max(0.0, d(order[static_cast<size_t>(k)]).real());
  }

  CMatrix q = diag.unitary * perm;
  QuatSvdResult result;
  result.d = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.d(k, k) = sorted(k);
    result.d(n + k, n + k) = sorted(k);
  }
  result.u = polar.unitary * q;
  result.v = q.adjoint();
  result.residual =
      (x - result.u * result.d * result.v).norm() / std::max(1.0, x.norm());
  return result;
}

std::pair<CMatrix, CMatrix> qr_quaternionic(const CMatrix& x, double tolerance) {
  require_quaternionic(x, tolerance, "qr_quaternionic");
  const Eigen::Index two_n = x.rows();
  const Eigen::Index n = two_n / 2;
  CMatrix q = CMatrix::Identity(two_n, two_n);
  CMatrix r = x;
  const double scale = std::max(1.0, x.norm());
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index m = n - k;
    std::vector<Eigen::Index> idx;
    idx.reserve(static_cast<size_t>(2 * m));
    for (Eigen::Index i = k; i < n; ++i) idx.push_back(i);
    for (Eigen::Index i = n + k; i < two_n; ++i) idx.push_back(i);

    CVector col(2 * m);
    for (Eigen::Index i = 0; i < 2 * m; ++i)
      col(i) = r(idx[static_cast<size_t>(i)], k);
    const double norm = col.norm();
    if (norm <= 1e-14 * scale) continue;  // zero column, nothing to rotate
    CMatrix u_sub = complete_symplectic(col / norm);
    CMatrix u_full = scatter_symplectic(u_sub, idx, two_n);
    r = (u_full.adjoint() * r).eval();
    q = (q * u_full).eval();
  }
  return {q, r};
}

double operator_norm(const QuatMatrix& q) {
  Eigen::JacobiSVD<CMatrix> svd(chi(q));
  return svd.singularValues()(0);
}

}  // namespace kramers
