#include "kramers/structure.hpp"

#include <algorithm>
#include <limits>

#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"

namespace kramers {

StructureReport classify(const CMatrix& x, double tolerance) {
  if (x.rows() != x.cols()) throw DimensionError("classify: matrix must be square");
  StructureReport r;
  r.tolerance = tolerance;
  r.frobenius = x.norm();
  const double inf = std::numeric_limits<double>::infinity();
  const Eigen::Index n = x.rows();
  const CMatrix xadj = x.adjoint();

  r.symmetric_dev = (x - x.transpose()).norm();
  r.hermitian_dev = (x - xadj).norm();
  r.normal_dev = (x * xadj - xadj * x).norm();
  r.unitary_dev = (xadj * x - CMatrix::Identity(n, n)).norm();

  if (n % 2 == 0) {
    const CMatrix xd = dual(x);
    const CMatrix z = symplectic_form(n);
    r.quaternionic_dev = (xadj - xd).norm();
    r.selfdual_dev = (x - xd).norm();
    r.symplectic_dev = (x.transpose() * z * x - z).norm();
  } else {
    r.quaternionic_dev = inf;
    r.selfdual_dev = inf;
    r.symplectic_dev = inf;
  }

  const double scale = tolerance * std::max(1.0, r.frobenius);
  r.quaternionic = r.quaternionic_dev <= scale;
  r.selfdual = r.selfdual_dev <= scale;
  r.symmetric = r.symmetric_dev <= scale;
  r.hermitian = r.hermitian_dev <= scale;
  r.normal = r.normal_dev <= scale;
  r.unitary = r.unitary_dev <= scale;
  r.symplectic = r.symplectic_dev <= scale;
  return r;
}

}  // namespace kramers
