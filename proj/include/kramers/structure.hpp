#pragma once

#include "kramers/tolerances.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Tolerance-tagged structure flags for a complex square matrix.
///
/// Each flag is set iff its Frobenius deviation is at most
/// tolerance * max(1, ||X||_F).  The dual-based deviations (quaternionic,
/// selfdual, symplectic) are infinite for odd dimension.
struct StructureReport {
  double tolerance{0.0};
  double frobenius{0.0};

  double quaternionic_dev{0.0};  // ||X* - dual(X)||
  double selfdual_dev{0.0};      // ||X - dual(X)||
  double symmetric_dev{0.0};     // ||X - X^T||
  double hermitian_dev{0.0};     // ||X - X*||
  double normal_dev{0.0};        // ||X X* - X* X||
  double unitary_dev{0.0};       // ||X* X - I||
  double symplectic_dev{0.0};    // ||X^T Z X - Z||

  bool quaternionic{false};
  bool selfdual{false};
  bool symmetric{false};
  bool hermitian{false};
  bool normal{false};
  bool unitary{false};
  bool symplectic{false};
};

StructureReport classify(const CMatrix& x, double tolerance = tol::structural);

}  // namespace kramers
