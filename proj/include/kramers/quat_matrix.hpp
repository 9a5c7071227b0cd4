#pragma once

#include <vector>

#include <Eigen/Dense>

#include "kramers/quaternion.hpp"

namespace kramers {

/// Dense matrix of quaternions with the conjugate-transpose involution.
///
/// Scalars act on the right of vectors, so "A v = v mu" is the eigenvalue
/// convention used throughout. Entries are stored row-major.
class QuatMatrix {
 public:
  QuatMatrix() = default;
  QuatMatrix(Eigen::Index rows, Eigen::Index cols)
      : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols)) {}

  static QuatMatrix identity(Eigen::Index n);
  static QuatMatrix zero(Eigen::Index rows, Eigen::Index cols) {
    return QuatMatrix(rows, cols);
  }

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  Quaternion& operator()(Eigen::Index i, Eigen::Index j) {
    return entries_[static_cast<size_t>(i * cols_ + j)];
  }
  const Quaternion& operator()(Eigen::Index i, Eigen::Index j) const {
    return entries_[static_cast<size_t>(i * cols_ + j)];
  }

  /// Conjugate transpose: entry (i,j) of the result is conj((*this)(j,i)).
  QuatMatrix adjoint() const;

  QuatMatrix operator+(const QuatMatrix& other) const;
  QuatMatrix operator-(const QuatMatrix& other) const;
  /// Matrix product with quaternion factors taken in written order.
  QuatMatrix operator*(const QuatMatrix& other) const;

  double frobenius_norm() const;

 private:
  Eigen::Index rows_{0};
  Eigen::Index cols_{0};
  std::vector<Quaternion> entries_;
};

/// q * X, entrywise left multiplication.
QuatMatrix scale_left(const Quaternion& q, const QuatMatrix& x);
/// X * q, entrywise right multiplication.
QuatMatrix scale_right(const QuatMatrix& x, const Quaternion& q);

/// Column vector over the quaternions.
using QuatVector = std::vector<Quaternion>;

QuatVector mat_vec(const QuatMatrix& x, const QuatVector& v);
/// v * q with the scalar on the right of every component.
QuatVector scale_right(const QuatVector& v, const Quaternion& q);
QuatVector operator-(const QuatVector& u, const QuatVector& v);

/// (sum_j conj(v_j) v_j)^(1/2); zero exactly when v = 0.
double qvec_norm(const QuatVector& v);

}  // namespace kramers
