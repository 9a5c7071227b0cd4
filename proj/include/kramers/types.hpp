#pragma once

#include <complex>

#include <Eigen/Dense>

namespace kramers {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

}  // namespace kramers
