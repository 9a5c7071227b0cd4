#include "kramers/quat_matrix.hpp"

#include <cmath>

#include "kramers/errors.hpp"

namespace kramers {

QuatMatrix QuatMatrix::identity(Eigen::Index n) {
  QuatMatrix x(n, n);
  for (Eigen::Index i = 0; i < n; ++i) x(i, i) = Quaternion(1.0);
  return x;
}

QuatMatrix QuatMatrix::adjoint() const {
  QuatMatrix out(cols_, rows_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j) out(j, i) = conj((*this)(i, j));
  return out;
}

QuatMatrix QuatMatrix::operator+(const QuatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("quaternion matrix sum: shape mismatch");
  QuatMatrix out(rows_, cols_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j)
      out(i, j) = (*this)(i, j) + other(i, j);
  return out;
}

QuatMatrix QuatMatrix::operator-(const QuatMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("quaternion matrix difference: shape mismatch");
  QuatMatrix out(rows_, cols_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index j = 0; j < cols_; ++j)
      out(i, j) = (*this)(i, j) - other(i, j);
  return out;
}

QuatMatrix QuatMatrix::operator*(const QuatMatrix& other) const {
  if (cols_ != other.rows_)
    throw DimensionError("quaternion matrix product: inner dimensions disagree");
  QuatMatrix out(rows_, other.cols_);
  for (Eigen::Index i = 0; i < rows_; ++i)
    for (Eigen::Index k = 0; k < other.cols_; ++k) {
      Quaternion acc;
      for (Eigen::Index j = 0; j < cols_; ++j)
        acc += (*this)(i, j) * other(j, k);
      out(i, k) = acc;
    }
  return out;
}

double QuatMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : entries_) s += abs2(q);
  return std::sqrt(s);
}

QuatMatrix scale_left(const Quaternion& q, const QuatMatrix& x) {
  QuatMatrix out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = q * x(i, j);
  return out;
}

QuatMatrix scale_right(const QuatMatrix& x, const Quaternion& q) {
  QuatMatrix out(x.rows(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) out(i, j) = x(i, j) * q;
  return out;
}

QuatVector mat_vec(const QuatMatrix& x, const QuatVector& v) {
  if (static_cast<size_t>(x.cols()) != v.size())
    throw DimensionError("quaternion matrix-vector product: shape mismatch");
  QuatVector out(static_cast<size_t>(x.rows()));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    Quaternion acc;
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      acc += x(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

QuatVector scale_right(const QuatVector& v, const Quaternion& q) {
  QuatVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * q;
  return out;
}

QuatVector operator-(const QuatVector& u, const QuatVector& v) {
  if (u.size() != v.size())
    throw DimensionError("quaternion vector difference: length mismatch");
  QuatVector out(u.size());
  for (size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

double qvec_norm(const QuatVector& v) {
  // conj(q) q = |q|^2 as a real scalar, so the sum is a plain sum of squares.
  double s = 0.0;
  for (const auto& q : v) s += abs2(q);
  return std::sqrt(s);
}

}  // namespace kramers
