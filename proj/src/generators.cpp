#include "kramers/generators.hpp"

#include <cmath>
#include <numbers>

#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/symplectic.hpp"

namespace kramers {

std::uint64_t Rng::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double mag = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * std::numbers::pi * u2;
  spare_ = mag * std::sin(ang);
  have_spare_ = true;
  return mag * std::cos(ang);
}

Complex Rng::cnormal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::sqrt(2.0);
}

const char* to_string(MatrixClass cls) {
  switch (cls) {
    case MatrixClass::Quaternionic: return "quaternionic";
    case MatrixClass::HermitianQuaternionic: return "hermitian-quaternionic";
    case MatrixClass::NormalQuaternionic: return "normal-quaternionic";
    case MatrixClass::SelfDual: return "selfdual";
    case MatrixClass::Symmetric: return "symmetric";
    case MatrixClass::SymplecticUnitary: return "symplectic-unitary";
  }
  return "unknown";
}

MatrixClass matrix_class_from_string(const std::string& name) {
  if (name == "quaternionic") return MatrixClass::Quaternionic;
  if (name == "hermitian-quaternionic") return MatrixClass::HermitianQuaternionic;
  if (name == "normal-quaternionic") return MatrixClass::NormalQuaternionic;
  if (name == "selfdual") return MatrixClass::SelfDual;
  if (name == "symmetric") return MatrixClass::Symmetric;
  if (name == "symplectic-unitary") return MatrixClass::SymplecticUnitary;
  throw Error("unknown matrix class '" + name + "'");
}

QuatMatrix random_quat_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  QuatMatrix q(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j)
      q(i, j) = Quaternion(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  return q;
}

QuatVector random_quat_vector(Eigen::Index n, Rng& rng) {
  QuatVector v(static_cast<size_t>(n));
  for (auto& q : v)
    q = Quaternion(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  return v;
}

CVector random_cvector(Eigen::Index n, Rng& rng) {
  CVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.cnormal();
  return v;
}

CMatrix random_cmatrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
  return m;
}

namespace {

CMatrix random_symplectic_unitary(Eigen::Index n, Rng& rng) {
  std::vector<CVector> seeds;
  for (Eigen::Index k = 0; k < n; ++k)
    seeds.push_back(random_cvector(2 * n, rng).normalized());
  return kramers_complete(2 * n, seeds).unitary;
}

}  // namespace

Eigen::Index generated_dimension(const GenSpec& spec) {
  switch (spec.cls) {
    case MatrixClass::SelfDual:
    case MatrixClass::Symmetric:
      return spec.n;
    default:
      return 2 * spec.n;
  }
}

CMatrix generate(const GenSpec& spec) {
  if (spec.n < 1) throw DimensionError("generate: need n >= 1");
  Rng rng(spec.seed);
  switch (spec.cls) {
    case MatrixClass::Quaternionic:
      return chi(random_quat_matrix(spec.n, spec.n, rng));
    case MatrixClass::HermitianQuaternionic: {
      CMatrix x = chi(random_quat_matrix(spec.n, spec.n, rng));
      return 0.5 * (x + x.adjoint());
    }
    case MatrixClass::NormalQuaternionic: {
      // U diag U* with a symplectic U keeps the result exactly normal up to
      // rounding and quaternionic by construction.
      CMatrix u = random_symplectic_unitary(spec.n, rng);
      CMatrix d = CMatrix::Zero(2 * spec.n, 2 * spec.n);
      for (Eigen::Index i = 0; i < spec.n; ++i) {
        const Complex z = rng.cnormal();
        d(i, i) = z;
        d(spec.n + i, spec.n + i) = std::conj(z);
      }
      return u * d * u.adjoint();
    }
    case MatrixClass::SelfDual: {
      if (spec.n % 2 != 0)
        throw DimensionError("generate: selfdual class needs even dimension");
      CMatrix g = random_cmatrix(spec.n, spec.n, rng);
      return 0.5 * (g + dual(g));
    }
    case MatrixClass::Symmetric: {
      CMatrix g = random_cmatrix(spec.n, spec.n, rng);
      return 0.5 * (g + g.transpose());
    }
    case MatrixClass::SymplecticUnitary:
      return random_symplectic_unitary(spec.n, rng);
  }
  throw Error("generate: unhandled class");
}

std::vector<CMatrix> generate_commuting(const GenSpec& base, int k) {
  if (k < 1) throw Error("generate_commuting: need k >= 1");
  CMatrix x = generate(base);
  Rng rng(base.seed ^ 0xc0117ab1eULL);
  // Real polynomial coefficients preserve all the structure classes above.
  const double scale = std::max(x.operatorNorm(), 1e-12);
  const CMatrix xn = x / scale;
  const Eigen::Index dim = x.rows();
  std::vector<CMatrix> family;
  for (int j = 0; j < k; ++j) {
    CMatrix p = CMatrix::Zero(dim, dim);
    CMatrix power = CMatrix::Identity(dim, dim);
    for (int t = 0; t <= 3; ++t) {
      p += rng.normal() * power;
      power = (power * xn).eval();
    }
    family.push_back(std::move(p));
  }
  return family;
}

CMatrix random_quaternionic_partial_isometry(Eigen::Index n, Eigen::Index m,
                                             std::uint64_t seed) {
  if (m > n) throw DimensionError("random_quaternionic_partial_isometry: m > n");
  Rng rng(seed);
  CMatrix u1 = random_symplectic_unitary(n, rng);
  CMatrix u2 = random_symplectic_unitary(n, rng);
  CMatrix p = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    p(i, i) = 1.0;
    p(n + i, n + i) = 1.0;
  }
  return u1 * p * u2;
}

CMatrix random_selfdual_partial_isometry(Eigen::Index n, Eigen::Index m,
                                         std::uint64_t seed) {
  if (2 * m > 2 * n)
    throw DimensionError("random_selfdual_partial_isometry: rank too large");
  Rng rng(seed);
  CMatrix g = random_cmatrix(2 * n, 2 * m, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(2 * n, 2 * m);
  CMatrix w = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < m; ++j)
    w += kramers_rank2_isometry(q.col(2 * j), q.col(2 * j + 1));
  return w;
}

CMatrix random_symmetric_partial_isometry(Eigen::Index n, Eigen::Index r,
                                          std::uint64_t seed) {
  if (r > n) throw DimensionError("random_symmetric_partial_isometry: r > n");
  Rng rng(seed);
  CMatrix g = random_cmatrix(n, r, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, r);
  CMatrix w = CMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < r; ++j)
    w += q.col(j).conjugate() * q.col(j).adjoint();
  return w;
}

CMatrix random_quaternionic_rank_deficient(Eigen::Index n, Eigen::Index m,
                                           std::uint64_t seed) {
  Rng rng(seed);
  CMatrix a = chi(random_quat_matrix(n, n, rng));
  CMatrix b = chi(random_quat_matrix(n, n, rng));
  CMatrix p = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    p(i, i) = 1.0;
    p(n + i, n + i) = 1.0;
  }
  return a * p * b;
}

CMatrix random_selfdual_rank_deficient(Eigen::Index n, Eigen::Index m,
                                       std::uint64_t seed) {
  Rng rng(seed);
  CMatrix a = random_cmatrix(2 * n, 2 * n, rng);
  CMatrix d = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double v = 0.25 + rng.uniform();
    d(i, i) = v;
    d(n + i, n + i) = v;
  }
  return dual(a) * d * a;
}

CMatrix random_symmetric_rank_deficient(Eigen::Index n, Eigen::Index r,
                                        std::uint64_t seed) {
  Rng rng(seed);
  CMatrix a = random_cmatrix(n, n, rng);
  CMatrix d = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < r; ++i) d(i, i) = 0.25 + rng.uniform();
  return a.transpose() * d * a;
}

}  // namespace kramers
