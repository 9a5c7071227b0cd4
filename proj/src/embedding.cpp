#include "kramers/embedding.hpp"

#include <algorithm>

#include "kramers/errors.hpp"

namespace kramers {

namespace {

void require_even(Eigen::Index n, const char* what) {
  if (n % 2 != 0) throw DimensionError(std::string(what) + ": dimension must be even");
}

}  // namespace

CMatrix symplectic_form(Eigen::Index two_n) {
  require_even(two_n, "symplectic_form");
  const Eigen::Index n = two_n / 2;
  CMatrix z = CMatrix::Zero(two_n, two_n);
  z.topRightCorner(n, n) = CMatrix::Identity(n, n);
  z.bottomLeftCorner(n, n) = -CMatrix::Identity(n, n);
  return z;
}

CMatrix chi(const QuatMatrix& q) {
  const Eigen::Index r = q.rows(), c = q.cols();
  CMatrix a(r, c), b(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) {
      a(i, j) = q(i, j).alpha();
      b(i, j) = q(i, j).beta();
    }
  CMatrix x(2 * r, 2 * c);
  x.topLeftCorner(r, c) = a;
  x.topRightCorner(r, c) = b;
  x.bottomLeftCorner(r, c) = -b.conjugate();
  x.bottomRightCorner(r, c) = a.conjugate();
  return x;
}

QuatMatrix chi_inv(const CMatrix& x, double tolerance) {
  require_even(x.rows(), "chi_inv");
  require_even(x.cols(), "chi_inv");
  const double defect = (x.adjoint() - dual(x)).norm();
  if (defect > tolerance * std::max(1.0, x.norm()))
    throw NotQuaternionic("chi_inv: quaternionic defect " + std::to_string(defect) +
                          " exceeds tolerance");
  const Eigen::Index r = x.rows() / 2, c = x.cols() / 2;
  // Average with the quaternionic projection so the round trip lands on the
  // nearest chi image.
  CMatrix a = 0.5 * (x.topLeftCorner(r, c) + x.bottomRightCorner(r, c).conjugate());
  CMatrix b = 0.5 * (x.topRightCorner(r, c) - x.bottomLeftCorner(r, c).conjugate());
  QuatMatrix q(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j)
      q(i, j) = Quaternion::from_complex_pair(a(i, j), b(i, j));
  return q;
}

CMatrix dual(const CMatrix& x) {
  if (x.rows() != x.cols()) throw DimensionError("dual: matrix must be square");
  require_even(x.rows(), "dual");
  const Eigen::Index n = x.rows() / 2;
  // Pure block rearrangement, no arithmetic beyond sign flips; agrees with
  // -Z X^T Z exactly.
  CMatrix out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = x.bottomRightCorner(n, n).transpose();
  out.topRightCorner(n, n) = -x.topRightCorner(n, n).transpose();
  out.bottomLeftCorner(n, n) = -x.bottomLeftCorner(n, n).transpose();
  out.bottomRightCorner(n, n) = x.topLeftCorner(n, n).transpose();
  return out;
}

CMatrix dual_wrt(const CMatrix& k, const CMatrix& x) {
  if (x.rows() != x.cols() || k.rows() != k.cols() || k.rows() != x.rows())
    throw DimensionError("dual_wrt: shape mismatch");
  return -k * x.transpose() * k;
}

CVector time_reversal(const CVector& xi) {
  require_even(xi.size(), "time_reversal");
  const Eigen::Index n = xi.size() / 2;
  CVector out(2 * n);
  out.head(n) = -xi.tail(n).conjugate();
  out.tail(n) = xi.head(n).conjugate();
  return out;
}

std::pair<CMatrix, CMatrix> quaternionic_split(const CMatrix& g) {
  require_even(g.rows(), "quaternionic_split");
  const CMatrix h = dual(g).adjoint();
  const Complex i(0.0, 1.0);
  CMatrix x = 0.5 * h + 0.5 * g;
  CMatrix y = (i * 0.5) * h - (i * 0.5) * g;
  return {std::move(x), std::move(y)};
}

QuatVector pullback_vector(const CVector& xi) {
  if (xi.size() % 2 != 0)
    throw DimensionError("pullback_vector: length must be even");
  const Eigen::Index n = xi.size() / 2;
  QuatVector u(static_cast<size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    // v - j*w componentwise: j*(c + d i) = c j - d k.
    const Complex v = xi(j), w = xi(n + j);
    u[static_cast<size_t>(j)] =
        Quaternion(v.real(), v.imag(), -w.real(), w.imag());
  }
  return u;
}

CVector embed_vector(const QuatVector& u) {
  const Eigen::Index n = static_cast<Eigen::Index>(u.size());
  CVector xi(2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Quaternion& q = u[static_cast<size_t>(j)];
    xi(j) = Complex(q.a, q.b);
    xi(n + j) = Complex(-q.c, q.d);
  }
  return xi;
}

}  // namespace kramers
