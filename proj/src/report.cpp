#include "kramers/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "kramers/clustering.hpp"
#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"

namespace kramers {

namespace {

// Pinned thresholds correspond to the default structural tolerance; a custom
// tolerance rescales all of them proportionally.
double scaled(double pinned, double tolerance) {
  return pinned * (tolerance / tol::structural);
}

CheckRow row(std::string name, double deviation, double threshold) {
  CheckRow r;
  r.name = std::move(name);
  r.deviation = deviation;
  r.threshold = threshold;
  r.pass = deviation <= threshold;
  return r;
}

double strict_lower_norm(const CMatrix& m) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < std::min(i, m.cols()); ++j)
      s += std::norm(m(i, j));
  return std::sqrt(s);
}

double lower_with_diag_norm(const CMatrix& m) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j <= std::min(i, m.cols() - 1); ++j)
      s += std::norm(m(i, j));
  return std::sqrt(s);
}

void append_unitary_rows(FactorReport& report, const CMatrix& u,
                         const std::string& prefix, double tolerance,
                         bool symplectic_expected) {
  const Eigen::Index n = u.rows();
  const double scale = std::max(1.0, u.norm());
  report.rows.push_back(row(prefix + ".unitarity",
                            (u.adjoint() * u - CMatrix::Identity(n, n)).norm(),
                            scaled(1e-11, tolerance) * scale));
  if (symplectic_expected && n % 2 == 0) {
    const CMatrix z = symplectic_form(n);
    report.rows.push_back(row(prefix + ".symplectic",
                              (u.transpose() * z * u - z).norm(),
                              scaled(1e-11, tolerance) * scale));
  }
}

}  // namespace

bool FactorReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckRow& r) { return r.pass; });
}

std::string residual_report(const FactorReport& report) {
  std::ostringstream os;
  os << report.title << "\n";
  size_t width = 28;
  for (const auto& r : report.rows) width = std::max(width, r.name.size() + 2);
  os << std::left << std::setw(static_cast<int>(width)) << "check"
     << std::setw(14) << "deviation" << std::setw(14) << "threshold"
     << "status\n";
  for (const auto& r : report.rows) {
    os << std::left << std::setw(static_cast<int>(width)) << r.name
       << std::setw(14) << std::setprecision(3) << std::scientific << r.deviation
       << std::setw(14) << std::setprecision(3) << std::scientific << r.threshold
       << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return os.str();
}

std::string machine_report(const FactorReport& report) {
  std::ostringstream os;
  os << "report=" << report.title << "\n";
  for (const auto& r : report.rows) {
    os << r.name << ".deviation=" << std::setprecision(17) << std::scientific
       << r.deviation << "\n";
    os << r.name << ".threshold=" << std::setprecision(17) << std::scientific
       << r.threshold << "\n";
    os << r.name << ".pass=" << (r.pass ? 1 : 0) << "\n";
  }
  os << "all_pass=" << (report.all_pass() ? 1 : 0) << "\n";
  return os.str();
}

FactorReport verify_structure(const StructureReport& sr) {
  FactorReport report;
  report.title = "structure";
  const double thr = sr.tolerance * std::max(1.0, sr.frobenius);
  report.rows.push_back(row("quaternionic", sr.quaternionic_dev, thr));
  report.rows.push_back(row("selfdual", sr.selfdual_dev, thr));
  report.rows.push_back(row("symmetric", sr.symmetric_dev, thr));
  report.rows.push_back(row("hermitian", sr.hermitian_dev, thr));
  report.rows.push_back(row("normal", sr.normal_dev, thr));
  report.rows.push_back(row("unitary", sr.unitary_dev, thr));
  report.rows.push_back(row("symplectic", sr.symplectic_dev, thr));
  return report;
}

FactorReport verify_schur(const QuatSchurResult& result,
                          const std::vector<CMatrix>& xs, double tolerance) {
  FactorReport report;
  report.title = "schur";
  for (size_t j = 0; j < xs.size(); ++j) {
    const std::string tag = "." + std::to_string(j);
    report.rows.push_back(row("reconstruction" + tag, result.residuals[j],
                              scaled(1e-9, tolerance)));
    report.rows.push_back(row("upper.triangular.defect" + tag,
                              strict_lower_norm(result.upper[j]),
                              scaled(1e-11, tolerance)));
    report.rows.push_back(row("strict.triangular.defect" + tag,
                              lower_with_diag_norm(result.strict[j]),
                              scaled(1e-11, tolerance)));
  }
  append_unitary_rows(report, result.unitary, "unitary", tolerance, true);
  return report;
}

FactorReport verify_diag(const QuatDiagResult& result,
                         const std::vector<CMatrix>& xs, double tolerance) {
  FactorReport report;
  report.title = "diag";
  for (size_t j = 0; j < xs.size(); ++j) {
    const std::string tag = "." + std::to_string(j);
    report.rows.push_back(row("off.diagonal" + tag, result.residuals[j],
                              scaled(1e-9, tolerance)));
    const bool hermitian_input =
        (xs[j] - xs[j].adjoint()).norm() <=
        tolerance * std::max(1.0, xs[j].norm());
    if (hermitian_input)
      report.rows.push_back(row("diagonal.imaginary" + tag,
                                result.diagonals[j].imag().norm(),
                                scaled(1e-10, tolerance)));
  }
  append_unitary_rows(report, result.unitary, "unitary", tolerance, true);
  return report;
}

FactorReport verify_selfdual_schur(const SelfDualSchurResult& result,
                                   const std::vector<CMatrix>& xs,
                                   double tolerance) {
  FactorReport report;
  report.title = "schur-selfdual";
  const Eigen::Index n = result.unitary.rows() / 2;
  for (size_t j = 0; j < xs.size(); ++j) {
    const std::string tag = "." + std::to_string(j);
    report.rows.push_back(row("reconstruction" + tag, result.residuals[j],
                              scaled(1e-9, tolerance)));
    CMatrix y = result.unitary.adjoint() * xs[j] * result.unitary;
    report.rows.push_back(row("lower.left.block" + tag,
                              y.bottomLeftCorner(n, n).norm(),
                              scaled(1e-11, tolerance)));
    report.rows.push_back(row("upper.triangular.defect" + tag,
                              strict_lower_norm(result.upper[j]),
                              scaled(1e-11, tolerance)));
    report.rows.push_back(
        row("skew.defect" + tag,
            (result.skew[j] + result.skew[j].transpose()).norm(),
            scaled(1e-11, tolerance)));
  }
  append_unitary_rows(report, result.unitary, "unitary", tolerance, true);
  return report;
}

FactorReport verify_polar(const PolarResult& result, const CMatrix& x,
                          PolarVariant variant, double tolerance) {
  FactorReport report;
  report.title = "polar";
  report.rows.push_back(
      row("reconstruction", result.residual, scaled(1e-10, tolerance)));
  report.rows.push_back(row("minimal.reconstruction", result.isometry_residual,
                            scaled(1e-10, tolerance)));

  const CMatrix& u = result.unitary;
  const CMatrix& p = result.positive;
  const CMatrix& w = result.isometry;
  const double uscale = std::max(1.0, u.norm());
  const double pscale = std::max(1.0, p.norm());

  append_unitary_rows(report, u, "unitary", tolerance,
                      variant == PolarVariant::Quaternionic);
  switch (variant) {
    case PolarVariant::Quaternionic:
      report.rows.push_back(row("unitary.quaternionic",
                                (u.adjoint() - dual(u)).norm(),
                                scaled(1e-10, tolerance) * uscale));
      report.rows.push_back(row("positive.quaternionic",
                                (p.adjoint() - dual(p)).norm(),
                                scaled(1e-10, tolerance) * pscale));
      break;
    case PolarVariant::Symmetric: {
      report.rows.push_back(row("unitary.symmetric", (u - u.transpose()).norm(),
                                scaled(1e-10, tolerance) * uscale));
      // |X*| = |X|^T ties the two absolute values together.
      const CMatrix abs_adj = positive_part_factors(x.adjoint()).sqrt;
      report.rows.push_back(row("absolute.transpose",
                                (abs_adj - p.transpose()).norm(),
                                scaled(1e-9, tolerance) * pscale));
      break;
    }
    case PolarVariant::SelfDual:
      report.rows.push_back(row("unitary.selfdual", (u - dual(u)).norm(),
                                scaled(1e-10, tolerance) * uscale));
      break;
  }

  report.rows.push_back(row("positive.hermitian", (p - p.adjoint()).norm(),
                            scaled(1e-10, tolerance) * pscale));
  HermitianEig peig = hermitian_eig(0.5 * (p + p.adjoint()), 1.0);
  report.rows.push_back(row("positive.eigenvalue.floor",
                            std::max(0.0, -peig.values.minCoeff()),
                            scaled(1e-10, tolerance) * pscale));
  const CMatrix gram = w.adjoint() * w;
  report.rows.push_back(row("isometry.partial",
                            (gram * gram - gram).norm(),
                            tol::partial_isometry * std::max(1.0, w.norm() * w.norm())));
  const CMatrix support = herm_fun(
      0.5 * (p + p.adjoint()), [](double) { return 1.0; }, 1e-10, 1.0);
  report.rows.push_back(row("isometry.support", (gram - support).norm(),
                            scaled(1e-9, tolerance) * pscale));
  return report;
}

FactorReport verify_svd_quaternionic(const QuatSvdResult& result, const CMatrix& x,
                                     double tolerance) {
  FactorReport report;
  report.title = "svd";
  report.rows.push_back(
      row("reconstruction", result.residual, scaled(1e-9, tolerance)));
  append_unitary_rows(report, result.u, "left.unitary", tolerance, true);
  append_unitary_rows(report, result.v, "right.unitary", tolerance, true);

  const Eigen::Index n = result.d.rows() / 2;
  double off = 0.0, pair_gap = 0.0, negative = 0.0, imag = 0.0;
  for (Eigen::Index i = 0; i < 2 * n; ++i)
    for (Eigen::Index j = 0; j < 2 * n; ++j)
      if (i != j) off += std::norm(result.d(i, j));
  for (Eigen::Index i = 0; i < n; ++i) {
    pair_gap = std::max(pair_gap,
                        std::abs(result.d(i, i) - result.d(n + i, n + i)));
    negative = std::max(negative, -result.d(i, i).real());
    imag = std::max(imag, std::abs(result.d(i, i).imag()));
  }
  report.rows.push_back(row("diagonal.offdiag", std::sqrt(off), 0.0));
  report.rows.push_back(row("diagonal.kramers.pairing", pair_gap, 0.0));
  report.rows.push_back(row("diagonal.nonnegative", std::max(negative, 0.0), 0.0));
  report.rows.push_back(row("diagonal.imaginary", imag, 0.0));
  report.rows.push_back(row("diagonal.dual.adjoint",
                            (dual(result.d) - result.d.adjoint()).norm(),
                            scaled(1e-12, tolerance)));

  // Even multiplicities and agreement with the unstructured singular values.
  Svd plain = svd_complex(x);
  const double smax = plain.sigma.size() > 0 ? plain.sigma(0) : 0.0;
  double mismatch = 0.0;
  RVector mine(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    mine(2 * i) = result.d(i, i).real();
    mine(2 * i + 1) = result.d(n + i, n + i).real();
  }
  std::sort(mine.data(), mine.data() + 2 * n, std::greater<double>());
  for (Eigen::Index i = 0; i < 2 * n; ++i)
    mismatch = std::max(mismatch, std::abs(mine(i) - plain.sigma(i)));
  report.rows.push_back(row("singular.multiset", mismatch,
                            scaled(1e-9, tolerance) * std::max(1.0, smax)));

  std::vector<Complex> vals;
  for (Eigen::Index i = 0; i < plain.sigma.size(); ++i)
    vals.emplace_back(plain.sigma(i), 0.0);
  auto clusters = cluster_single_linkage(vals, 1e-8 * std::max(1.0, smax));
  double odd = 0.0;
  for (const auto& c : clusters)
    if (c.size() % 2 != 0) odd += 1.0;
  report.rows.push_back(row("singular.even.multiplicity", odd, 0.5));
  return report;
}

FactorReport verify_qr(const CMatrix& q, const CMatrix& r, const CMatrix& x,
                       double tolerance) {
  FactorReport report;
  report.title = "qr";
  const Eigen::Index n = r.rows() / 2;
  report.rows.push_back(row("reconstruction",
                            (x - q * r).norm() / std::max(1.0, x.norm()),
                            scaled(1e-10, tolerance)));
  append_unitary_rows(report, q, "unitary", tolerance, true);
  const double block_defect =
      std::sqrt(std::pow(strict_lower_norm(r.topLeftCorner(n, n)), 2) +
                std::pow(strict_lower_norm(r.topRightCorner(n, n)), 2));
  report.rows.push_back(
      row("block.triangular.defect", block_defect, scaled(1e-11, tolerance)));
  report.rows.push_back(row("factor.quaternionic",
                            (r.adjoint() - dual(r)).norm(),
                            scaled(1e-10, tolerance) * std::max(1.0, r.norm())));
  return report;
}

FactorReport verify_jordan(const JordanResult& result, const CMatrix& x,
                           double tolerance) {
  FactorReport report;
  report.title = "jordan";
  report.rows.push_back(row(
      "relation", result.residual,
      scaled(1e-7, tolerance) * result.condition * std::max(1.0, x.norm())));
  double pairing = 0.0;
  for (Eigen::Index b = 0; b < result.basis.cols(); ++b) {
    const CVector image = time_reversal(result.basis.col(b));
    const CVector partner = result.basis.col(result.pairing[static_cast<size_t>(b)]);
    pairing = std::max(pairing,
                       std::min((partner - image).norm(), (partner + image).norm()));
  }
  report.rows.push_back(row("kramers.pairing", pairing, scaled(1e-9, tolerance)));
  return report;
}

}  // namespace kramers
