#include "kramers/jordan.hpp"

#include <algorithm>
#include <cmath>

#include "kramers/clustering.hpp"
#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/symplectic.hpp"

namespace kramers {

namespace {

// Rank threshold for kernels of shifted powers inside the Jordan driver,
// applied to powers scaled to unit operator norm.  Refined cluster centers
// push the kernel singular values far below this cut while genuine non-kernel
// directions stay well above it for separated, well-conditioned structures.
constexpr double kPowerRankTol = 1e-6;

// Kernel basis with an absolute singular-value cut.
CMatrix nullspace_below(const CMatrix& m, double cut) {
  Eigen::JacobiSVD<CMatrix> svd(m, Eigen::ComputeFullV);
  const Eigen::Index k = std::min(m.rows(), m.cols());
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < k; ++i)
    if (svd.singularValues()(i) > cut) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

// Powers of (x - lambda)/s with s = max(1, sigma_max), so singular values are
// comparable against an absolute cut.
struct ShiftedPowers {
  CMatrix shifted;  // unscaled
  CMatrix scaled;   // shifted / s
  double s{1.0};

  ShiftedPowers(const CMatrix& x, Complex lambda) {
    const Eigen::Index n = x.rows();
    shifted = x - lambda * CMatrix::Identity(n, n);
    Eigen::JacobiSVD<CMatrix> svd(shifted);
    s = std::max(1.0, svd.singularValues().size() > 0 ? svd.singularValues()(0)
                                                      : 0.0);
    scaled = shifted / s;
  }

  CMatrix power(Eigen::Index r) const {
    CMatrix p = CMatrix::Identity(scaled.rows(), scaled.cols());
    for (Eigen::Index i = 0; i < r; ++i) p = scaled * p;
    return p;
  }
};

CMatrix generalized_eigenspace_impl(const ShiftedPowers& sp, double cut) {
  const Eigen::Index n = sp.scaled.rows();
  CMatrix power = sp.scaled;
  CMatrix basis = nullspace_below(power, cut);
  if (basis.cols() == 0)
    throw NotAnEigenvalue("generalized_eigenspace: no kernel at the tolerance");
  while (basis.cols() < n) {
    power = sp.scaled * power;
    CMatrix next = nullspace_below(power, cut);
    if (next.cols() <= basis.cols()) break;
    basis = next;
  }
  return basis;
}

}  // namespace

CMatrix generalized_eigenspace(const CMatrix& x, Complex lambda, double tolerance) {
  if (x.rows() != x.cols())
    throw DimensionError("generalized_eigenspace: matrix must be square");
  return generalized_eigenspace_impl(ShiftedPowers(x, lambda), tolerance);
}

CMatrix chain_heads(const CMatrix& x, Complex lambda, Eigen::Index r,
                    double tolerance) {
  if (r < 1) throw Error("chain_heads: r must be at least 1");
  const Eigen::Index n = x.rows();
  const ShiftedPowers sp(x, lambda);

  CMatrix k_r = nullspace_below(sp.power(r), tolerance);
  if (k_r.cols() == 0) return CMatrix(n, 0);
  CMatrix k_prev =
      r >= 2 ? nullspace_below(sp.power(r - 1), tolerance) : CMatrix(n, 0);

  // The image constraint is taken on the restriction to the generalized
  // eigenspace; the full-space image mixes in the other eigenspaces, which are
  // not orthogonal to this one unless the matrix is normal.
  CMatrix gen;
  try {
    gen = generalized_eigenspace_impl(sp, tolerance);
  } catch (const NotAnEigenvalue&) {
    return CMatrix(n, 0);
  }
  const CMatrix mapped = sp.scaled * gen;
  Eigen::JacobiSVD<CMatrix> msvd(mapped, Eigen::ComputeFullU);
  Eigen::Index map_rank = 0;
  for (Eigen::Index i = 0; i < std::min(mapped.rows(), mapped.cols()); ++i)
    if (msvd.singularValues()(i) > tolerance) ++map_rank;
  const CMatrix range = msvd.matrixU().leftCols(map_rank);

  const Eigen::Index rows = k_prev.cols() + map_rank;
  if (rows == 0) return k_r;
  CMatrix constraints(rows, k_r.cols());
  constraints.topRows(k_prev.cols()) = k_prev.adjoint() * k_r;
  constraints.bottomRows(map_rank) = range.adjoint() * k_r;

  // The constraint matrix holds angles against orthonormal bases, so the
  // intersection split uses an absolute cut as well.
  const double split = std::max(1000.0 * tolerance, 1e-6);
  Eigen::JacobiSVD<CMatrix> csvd(constraints, Eigen::ComputeFullV);
  Eigen::Index outside = 0;
  const Eigen::Index nsv = std::min(constraints.rows(), constraints.cols());
  for (Eigen::Index i = 0; i < nsv; ++i)
    if (csvd.singularValues()(i) > split) ++outside;
  return k_r * csvd.matrixV().rightCols(k_r.cols() - outside);
}

namespace {

struct Cluster {
  Complex center;
  Eigen::Index size{0};
  bool real{false};
  int conj_partner{-1};
  bool emitted{false};
};

struct ChainRec {
  Complex lambda;
  std::vector<CVector> cols;  // eigenvector first
};

// Chain b, (X-lambda)b, ..., (X-lambda)^(r-1) b stored eigenvector-first and
// scaled so the eigenvector end has unit norm.
ChainRec make_chain(const CMatrix& shifted, Complex lambda, const CVector& head,
                    Eigen::Index r) {
  std::vector<CVector> forward;
  forward.push_back(head);
  for (Eigen::Index i = 1; i < r; ++i) forward.push_back(shifted * forward.back());
  const double tail = forward.back().norm();
  if (tail <= 0.0)
    throw IllConditioned("jordan: chain collapsed before reaching its length");
  ChainRec rec;
  rec.lambda = lambda;
  for (auto it = forward.rbegin(); it != forward.rend(); ++it)
    rec.cols.push_back(*it / tail);
  return rec;
}

}  // namespace

JordanResult jordan_quaternionic(const CMatrix& x, double tolerance) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0)
    throw DimensionError("jordan_quaternionic: need a square even-dimensional matrix");
  const double qdefect = (x.adjoint() - dual(x)).norm();
  if (qdefect > tol::structural * std::max(1.0, x.norm()))
    throw NotQuaternionic("jordan_quaternionic: quaternionic defect " +
                          std::to_string(qdefect));

  const Eigen::Index two_n = x.rows();
  Eigen::ComplexEigenSolver<CMatrix> ces(x, /*computeEigenvectors=*/false);
  std::vector<Complex> eigs(ces.eigenvalues().data(),
                            ces.eigenvalues().data() + two_n);

  const double radius = 100.0 * tolerance;
  auto groups = cluster_single_linkage(eigs, radius);
  std::vector<Cluster> clusters;
  for (const auto& g : groups) {
    Cluster c;
    for (int i : g) c.center += eigs[static_cast<size_t>(i)];
    c.center /= static_cast<double>(g.size());
    c.size = static_cast<Eigen::Index>(g.size());
    if (std::abs(c.center.imag()) <= 10.0 * tolerance) {
      c.center = Complex(c.center.real(), 0.0);
      c.real = true;
      if (c.size % 2 != 0)
        throw IllConditioned("jordan: real eigenvalue cluster of odd size");
    }
    clusters.push_back(c);
  }

  for (size_t i = 0; i < clusters.size(); ++i)
    for (size_t j = i + 1; j < clusters.size(); ++j)
      if (std::abs(clusters[i].center - clusters[j].center) < radius)
        throw IllConditioned("jordan: cluster separation below threshold");

  for (size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i].real || clusters[i].conj_partner >= 0) continue;
    if (clusters[i].center.imag() < 0.0) continue;  // matched from the partner
    int best = -1;
    double dist = 0.0;
    for (size_t j = 0; j < clusters.size(); ++j) {
      if (j == i || clusters[j].real || clusters[j].conj_partner >= 0) continue;
      if (clusters[j].center.imag() >= 0.0) continue;
      const double d = std::abs(std::conj(clusters[i].center) - clusters[j].center);
      if (best < 0 || d < dist) {
        best = static_cast<int>(j);
        dist = d;
      }
    }
    if (best < 0 || dist > radius)
      throw IllConditioned("jordan: unpaired non-real eigenvalue cluster");
    if (clusters[static_cast<size_t>(best)].size != clusters[i].size)
      throw IllConditioned("jordan: conjugate clusters of unequal multiplicity");
    clusters[i].conj_partner = best;
    clusters[static_cast<size_t>(best)].conj_partner = static_cast<int>(i);
  }
  for (const auto& c : clusters)
    if (!c.real && c.conj_partner < 0)
      throw IllConditioned("jordan: unpaired non-real eigenvalue cluster");

  // Process representatives in (Re, Im) order: real clusters and upper
  // half-plane members of conjugate pairs.
  std::vector<size_t> reps;
  for (size_t i = 0; i < clusters.size(); ++i)
    if (clusters[i].real || clusters[i].center.imag() > 0.0) reps.push_back(i);
  std::sort(reps.begin(), reps.end(), [&](size_t a, size_t b) {
    const Complex& ca = clusters[a].center;
    const Complex& cb = clusters[b].center;
    if (ca.real() != cb.real()) return ca.real() < cb.real();
    return ca.imag() < cb.imag();
  });

  JordanResult result;
  result.basis.resize(two_n, two_n);
  result.form = CMatrix::Zero(two_n, two_n);
  result.pairing.assign(static_cast<size_t>(two_n), 0);
  Eigen::Index cursor = 0;

  auto emit_chain = [&](const ChainRec& chain) -> Eigen::Index {
    const Eigen::Index start = cursor;
    const Eigen::Index r = static_cast<Eigen::Index>(chain.cols.size());
    if (cursor + r > two_n)
      throw IllConditioned("jordan: chain bookkeeping exceeded the dimension");
    for (Eigen::Index k = 0; k < r; ++k) {
      result.basis.col(cursor + k) = chain.cols[static_cast<size_t>(k)];
      result.form(cursor + k, cursor + k) = chain.lambda;
      if (k + 1 < r) result.form(cursor + k, cursor + k + 1) = 1.0;
    }
    result.blocks.push_back({chain.lambda, r});
    cursor += r;
    return start;
  };

  for (size_t rep : reps) {
    const Cluster& cluster = clusters[rep];
    const Eigen::Index mult = cluster.size;

    // Defective eigenvalues scatter like a root of the backward error, so the
    // raw cluster mean is refined through the invariant subspace it spans
    // before any rank decision is trusted.
    Complex lambda = cluster.center;
    CMatrix gen;
    for (int round = 0; round < 3; ++round) {
      try {
        gen = generalized_eigenspace(x, lambda, kPowerRankTol);
      } catch (const NotAnEigenvalue&) {
        throw IllConditioned("jordan: lost an eigenvalue cluster");
      }
      Complex refined =
          (gen.adjoint() * x * gen).trace() / static_cast<double>(gen.cols());
      if (cluster.real) refined = Complex(refined.real(), 0.0);
      const bool settled = std::abs(refined - lambda) <= 1e-12;
      lambda = refined;
      if (settled && gen.cols() == mult) break;
    }
    if (gen.cols() != mult)
      throw IllConditioned("jordan: generalized eigenspace dimension " +
                           std::to_string(gen.cols()) + " != cluster size " +
                           std::to_string(mult));
    const CMatrix shifted = x - lambda * CMatrix::Identity(two_n, two_n);

    std::vector<ChainRec> lam_chains;
    std::vector<Eigen::Index> chain_partner;  // index into lam_chains, real case
    Eigen::Index counted = 0;
    for (Eigen::Index r = std::min(mult, two_n); r >= 1; --r) {
      CMatrix heads = chain_heads(x, lambda, r, kPowerRankTol);
      if (heads.cols() == 0) continue;
      if (cluster.real) {
        SubspacePairs pairs;
        try {
          pairs = kramers_pairs_in_subspace(heads);
        } catch (const StructureError&) {
          throw IllConditioned("jordan: real-eigenvalue heads failed to pair");
        }
        for (Eigen::Index j = 0; j < pairs.leaders.cols(); ++j) {
          lam_chains.push_back(make_chain(shifted, lambda, pairs.leaders.col(j), r));
          lam_chains.push_back(make_chain(shifted, lambda, pairs.partners.col(j), r));
          chain_partner.push_back(static_cast<Eigen::Index>(lam_chains.size()) - 1);
          chain_partner.push_back(static_cast<Eigen::Index>(lam_chains.size()) - 2);
        }
      } else {
        for (Eigen::Index j = 0; j < heads.cols(); ++j)
          lam_chains.push_back(make_chain(shifted, lambda, heads.col(j), r));
      }
      counted += r * heads.cols();
    }
    if (counted != mult)
      throw IllConditioned("jordan: chain lengths account for " +
                           std::to_string(counted) + " of " + std::to_string(mult) +
                           " dimensions");

    if (cluster.real) {
      std::vector<Eigen::Index> starts;
      for (const auto& chain : lam_chains) starts.push_back(emit_chain(chain));
      for (size_t t = 0; t < lam_chains.size(); ++t) {
        const Eigen::Index r =
            static_cast<Eigen::Index>(lam_chains[t].cols.size());
        const Eigen::Index ps = starts[static_cast<size_t>(chain_partner[t])];
        for (Eigen::Index k = 0; k < r; ++k)
          result.pairing[static_cast<size_t>(starts[t] + k)] = ps + k;
      }
    } else {
      // Emit the upper half-plane chains, then their time-reversal images for
      // the conjugate eigenvalue in the same layout.
      std::vector<Eigen::Index> starts;
      for (const auto& chain : lam_chains) starts.push_back(emit_chain(chain));
      std::vector<Eigen::Index> mirror_starts;
      for (const auto& chain : lam_chains) {
        ChainRec mirrored;
        mirrored.lambda = std::conj(lambda);
        for (const auto& col : chain.cols) mirrored.cols.push_back(time_reversal(col));
        mirror_starts.push_back(emit_chain(mirrored));
      }
      for (size_t t = 0; t < lam_chains.size(); ++t) {
        const Eigen::Index r =
            static_cast<Eigen::Index>(lam_chains[t].cols.size());
        for (Eigen::Index k = 0; k < r; ++k) {
          result.pairing[static_cast<size_t>(starts[t] + k)] = mirror_starts[t] + k;
          result.pairing[static_cast<size_t>(mirror_starts[t] + k)] = starts[t] + k;
        }
      }
    }
  }

  if (cursor != two_n)
    throw IllConditioned("jordan: assembled " + std::to_string(cursor) + " of " +
                         std::to_string(two_n) + " basis columns");

  Eigen::JacobiSVD<CMatrix> ssvd(result.basis);
  const double smin = ssvd.singularValues()(two_n - 1);
  if (smin <= 0.0) throw IllConditioned("jordan: singular basis");
  result.condition = ssvd.singularValues()(0) / smin;
  result.residual = (x * result.basis - result.basis * result.form).norm();
  if (result.residual > tolerance * result.condition * std::max(1.0, x.norm()))
    throw IllConditioned("jordan: residual " + std::to_string(result.residual) +
                         " above tolerance for condition " +
                         std::to_string(result.condition));
  return result;
}

}  // namespace kramers
