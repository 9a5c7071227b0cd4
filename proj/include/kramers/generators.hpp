#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kramers/quat_matrix.hpp"
#include "kramers/types.hpp"

namespace kramers {

/// Counter-based deterministic random source (splitmix64 core).  Identical
/// seeds produce bit-identical streams; there is no global state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller (pair-cached).
  double normal();
  Complex cnormal();

 private:
  std::uint64_t state_;
  bool have_spare_{false};
  double spare_{0.0};
};

enum class MatrixClass {
  Quaternionic,
  HermitianQuaternionic,
  NormalQuaternionic,
  SelfDual,
  Symmetric,
  SymplecticUnitary,
};

const char* to_string(MatrixClass cls);
MatrixClass matrix_class_from_string(const std::string& name);

/// Generation request: n is the quaternion dimension N for the quaternionic
/// classes (complex dimension 2N) and the full complex dimension for
/// SelfDual/Symmetric (must be even for SelfDual).
struct GenSpec {
  Eigen::Index n{1};
  MatrixClass cls{MatrixClass::Quaternionic};
  std::uint64_t seed{0};
};

/// Complex dimension of the matrix generate(spec) returns.
Eigen::Index generated_dimension(const GenSpec& spec);

/// Seeded random matrix of the requested class; the output passes classify
/// for its class within 1e-12 and identical specs are bit-identical.
CMatrix generate(const GenSpec& spec);

/// Commuting family {p_1(X), ..., p_k(X)} for random low-degree real
/// polynomials of one random matrix of the base class (real coefficients
/// preserve every class handled here).
std::vector<CMatrix> generate_commuting(const GenSpec& base, int k);

/// Random quaternion matrix with independent normal coefficients.
QuatMatrix random_quat_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
QuatVector random_quat_vector(Eigen::Index n, Rng& rng);
CVector random_cvector(Eigen::Index n, Rng& rng);
CMatrix random_cmatrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Quaternionic partial isometry of rank 2m inside complex dimension 2N.
CMatrix random_quaternionic_partial_isometry(Eigen::Index n, Eigen::Index m,
                                             std::uint64_t seed);
/// Self-dual partial isometry of rank 2m (sum of Kramers rank-two pieces).
CMatrix random_selfdual_partial_isometry(Eigen::Index n, Eigen::Index m,
                                         std::uint64_t seed);
/// Symmetric partial isometry of rank r in complex dimension n.
CMatrix random_symmetric_partial_isometry(Eigen::Index n, Eigen::Index r,
                                          std::uint64_t seed);

/// Rank-deficient members of the structure classes (rank 2m).
CMatrix random_quaternionic_rank_deficient(Eigen::Index n, Eigen::Index m,
                                           std::uint64_t seed);
CMatrix random_selfdual_rank_deficient(Eigen::Index n, Eigen::Index m,
                                       std::uint64_t seed);
/// Singular complex symmetric matrix of rank r.
CMatrix random_symmetric_rank_deficient(Eigen::Index n, Eigen::Index r,
                                        std::uint64_t seed);

}  // namespace kramers
