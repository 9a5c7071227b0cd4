#pragma once

#include <string>
#include <vector>

#include "kramers/factor_quaternionic.hpp"
#include "kramers/factor_selfdual.hpp"
#include "kramers/jordan.hpp"
#include "kramers/structure.hpp"

namespace kramers {

struct CheckRow {
  std::string name;
  double deviation{0.0};
  double threshold{0.0};
  bool pass{false};
};

struct FactorReport {
  std::string title;
  std::vector<CheckRow> rows;
  bool all_pass() const;
};

/// Renders the report as an aligned text table (deviations with 3 significant
/// digits) or as machine-readable key=value lines.
std::string residual_report(const FactorReport& report);
std::string machine_report(const FactorReport& report);

/// Verification row builders.  Thresholds are the pinned defaults scaled by
/// tolerance / 1e-10, so the default tolerance reproduces them exactly.
FactorReport verify_structure(const StructureReport& report);
FactorReport verify_schur(const QuatSchurResult& result,
                          const std::vector<CMatrix>& xs, double tolerance);
FactorReport verify_diag(const QuatDiagResult& result,
                         const std::vector<CMatrix>& xs, double tolerance);
FactorReport verify_selfdual_schur(const SelfDualSchurResult& result,
                                   const std::vector<CMatrix>& xs,
                                   double tolerance);

enum class PolarVariant { Quaternionic, Symmetric, SelfDual };
FactorReport verify_polar(const PolarResult& result, const CMatrix& x,
                          PolarVariant variant, double tolerance);

FactorReport verify_svd_quaternionic(const QuatSvdResult& result, const CMatrix& x,
                                     double tolerance);
FactorReport verify_qr(const CMatrix& q, const CMatrix& r, const CMatrix& x,
                       double tolerance);
FactorReport verify_jordan(const JordanResult& result, const CMatrix& x,
                           double tolerance);

}  // namespace kramers
