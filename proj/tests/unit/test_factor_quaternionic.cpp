#include <doctest.h>

#include <cmath>

#include "kramers/dense.hpp"
#include "kramers/embedding.hpp"
#include "kramers/errors.hpp"
#include "kramers/factor_quaternionic.hpp"
#include "kramers/generators.hpp"
#include "kramers/structure.hpp"

#include "test_util.hpp"

using namespace kramers;

namespace {

QuatMatrix diag_quat(std::initializer_list<Quaternion> entries) {
  const Eigen::Index n = static_cast<Eigen::Index>(entries.size());
  QuatMatrix m(n, n);
  Eigen::Index i = 0;
  for (const auto& q : entries) m(i, i) = q, ++i;
  return m;
}

}  // namespace

TEST_CASE("schur_commuting on the identity") {
  QuatSchurResult r = schur_commuting({CMatrix::Identity(4, 4)}, 0);
  CHECK(r.residuals[0] <= 1e-12);
  CHECK((r.upper[0] - CMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK(r.strict[0].norm() <= 1e-12);
}

TEST_CASE("schur_commuting on a diagonal quaternion matrix") {
  const CMatrix x = chi(diag_quat({Quaternion::unit_i(), 2.0 * Quaternion::unit_i()}));
  QuatSchurResult r = schur_commuting({x}, 1);
  std::vector<Complex> diag = {r.upper[0](0, 0), r.upper[0](1, 1)};
  std::vector<Complex> expected = {Complex(0, 1), Complex(0, 2)};
  CHECK(testing::multiset_distance(diag, expected) <= 1e-10);
  CHECK(r.strict[0].norm() <= 1e-10);
  CHECK(r.residuals[0] <= 1e-10);
}

TEST_CASE("schur_commuting on random commuting families") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(seed % 5);
    GenSpec spec{n, MatrixClass::Quaternionic, seed};
    std::vector<CMatrix> family = generate_commuting(spec, 2);
    QuatSchurResult r = schur_commuting(family, seed);

    StructureReport sr = classify(r.unitary);
    CHECK(sr.unitary);
    CHECK(sr.symplectic);
    for (size_t j = 0; j < family.size(); ++j) {
      CHECK(r.residuals[j] <= 1e-9);
      double lower = 0.0, strict_block = 0.0;
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) {
          if (a > b) lower += std::norm(r.upper[j](a, b));
          if (a >= b) strict_block += std::norm(r.strict[j](a, b));
        }
      CHECK(std::sqrt(lower) <= 1e-11);
      CHECK(std::sqrt(strict_block) <= 1e-11);
    }
  }
}

TEST_CASE("schur diagonal lists right-eigenvalue representatives") {
  for (std::uint64_t seed = 30; seed < 35; ++seed) {
    Rng rng(seed);
    const QuatMatrix q = random_quat_matrix(4, 4, rng);
    QuatSchurResult r = schur_commuting({chi(q)}, seed);
    std::vector<Complex> diag;
    for (Eigen::Index i = 0; i < 4; ++i) diag.push_back(r.upper[0](i, i));
    std::vector<Complex> reps = right_eigenvalues(q);
    reps.resize(4);  // the representatives come first
    CHECK(testing::multiset_distance(diag, reps) <= 1e-8);
  }
}

TEST_CASE("schur_commuting input validation") {
  CMatrix g(2, 2);
  g << 1, 0, 0, 2;
  CHECK_THROWS_AS(schur_commuting({g}, 0), NotQuaternionic);

  Rng rng(61);
  const CMatrix a = chi(random_quat_matrix(2, 2, rng));
  const CMatrix b = chi(random_quat_matrix(2, 2, rng));
  CHECK_THROWS_AS(schur_commuting({a, b}, 0), NotCommuting);
}

TEST_CASE("diagonalize_commuting_normal") {
  const CMatrix xi = chi(scale_left(Quaternion::unit_i(), QuatMatrix::identity(2)));
  QuatDiagResult r = diagonalize_commuting_normal({xi}, 0);
  std::vector<Complex> diag(r.diagonals[0].data(),
                            r.diagonals[0].data() + r.diagonals[0].size());
  std::vector<Complex> expected = {Complex(0, 1), Complex(0, 1)};
  CHECK(testing::multiset_distance(diag, expected) <= 1e-10);
  CHECK(r.residuals[0] <= 1e-10);

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GenSpec spec{3, MatrixClass::HermitianQuaternionic, seed};
    const CMatrix h = generate(spec);
    QuatDiagResult hr = diagonalize_commuting_normal({h}, seed);
    CHECK(hr.residuals[0] <= 1e-9);
    CHECK(hr.diagonals[0].imag().norm() <= 1e-10);
  }

  for (std::uint64_t seed = 10; seed < 16; ++seed) {
    GenSpec spec{4, MatrixClass::NormalQuaternionic, seed};
    const CMatrix x = generate(spec);
    QuatDiagResult nr = diagonalize_commuting_normal({x}, seed);
    CHECK(nr.residuals[0] <= 1e-9);
  }

  Rng rng(67);
  const CMatrix not_normal = chi(random_quat_matrix(3, 3, rng));
  CHECK_THROWS_AS(diagonalize_commuting_normal({not_normal}, 0), NotNormal);
}

TEST_CASE("symplectic determinants equal one") {
  CHECK(std::abs(symplectic_det_check(CMatrix::Identity(4, 4)) - 1.0) <= 1e-14);
  CHECK(std::abs(symplectic_det_check(symplectic_form(2)) - 1.0) <= 1e-14);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GenSpec spec{4, MatrixClass::SymplecticUnitary, seed};
    CHECK(std::abs(symplectic_det_check(generate(spec)) - 1.0) <= 1e-8);
  }

  CMatrix d(2, 2);
  d << 1, 0, 0, 2;
  CHECK_THROWS_AS(symplectic_det_check(d), NotSymplectic);
}

TEST_CASE("right_eigenvalues") {
  QuatMatrix jm(1, 1);
  jm(0, 0) = Quaternion::unit_j();
  std::vector<Complex> vals = right_eigenvalues(jm);
  REQUIRE(vals.size() == 2);
  CHECK(std::abs(vals[0] - Complex(0, 1)) <= 1e-12);
  CHECK(std::abs(vals[1] - Complex(0, -1)) <= 1e-12);

  std::vector<Complex> ones = right_eigenvalues(QuatMatrix::identity(1));
  CHECK(std::abs(ones[0] - 1.0) <= 1e-12);
  CHECK(std::abs(ones[1] - 1.0) <= 1e-12);
}

TEST_CASE("right eigenpairs satisfy the quaternion eigen relation") {
  for (std::uint64_t seed = 40; seed < 46; ++seed) {
    Rng rng(seed);
    const QuatMatrix q = random_quat_matrix(3, 3, rng);
    const double scale = operator_norm(q);
    for (const auto& [lambda, vec] : right_eigenpairs(q)) {
      const QuatVector lhs = mat_vec(q, vec);
      const QuatVector rhs = scale_right(vec, Quaternion(lambda));
      CHECK(qvec_norm(lhs - rhs) <= 1e-9 * std::max(1.0, scale));
    }
  }
}

TEST_CASE("kramers eigenvalue pairing") {
  for (std::uint64_t seed = 50; seed < 56; ++seed) {
    GenSpec spec{4, MatrixClass::Quaternionic, seed};
    const CMatrix x = generate(spec);
    Eigen::ComplexEigenSolver<CMatrix> ces(x, false);
    std::vector<Complex> eigs(ces.eigenvalues().data(),
                              ces.eigenvalues().data() + 8);
    CHECK(testing::conjugation_closure_defect(eigs) <= 1e-8);

    GenSpec hspec{4, MatrixClass::HermitianQuaternionic, seed};
    Eigen::ComplexEigenSolver<CMatrix> hes(generate(hspec), false);
    std::vector<Complex> heigs(hes.eigenvalues().data(),
                               hes.eigenvalues().data() + 8);
    CHECK(testing::even_multiplicities(heigs, 1e-8));
  }
}

TEST_CASE("polar_quaternionic") {
  GenSpec uspec{2, MatrixClass::SymplecticUnitary, 3};
  const CMatrix u = generate(uspec);
  PolarResult ru = polar_quaternionic(u);
  CHECK((ru.unitary - u).norm() <= 1e-10);
  CHECK((ru.positive - CMatrix::Identity(4, 4)).norm() <= 1e-10);

  QuatMatrix jm(1, 1);
  jm(0, 0) = 2.0 * Quaternion::unit_j();
  PolarResult rj = polar_quaternionic(chi(jm));
  CHECK((rj.positive - 2.0 * CMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK((rj.unitary - symplectic_form(2)).norm() <= 1e-12);  // U = chi(j) = Z

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Eigen::Index n = 3 + static_cast<Eigen::Index>(seed % 2);
    const CMatrix x = random_quaternionic_rank_deficient(n, n - 1, seed);
    PolarResult r = polar_quaternionic(x);
    CHECK(r.residual <= 1e-9);
    StructureReport sr = classify(r.unitary);
    CHECK(sr.unitary);
    CHECK(sr.symplectic);
    StructureReport pr = classify(r.positive);
    CHECK(pr.quaternionic);
    CHECK(pr.hermitian);
    // minimal factor supports P
    const CMatrix gram = r.isometry.adjoint() * r.isometry;
    const CMatrix support =
        herm_fun(r.positive, [](double) { return 1.0; }, 1e-10, 1.0);
    CHECK((gram - support).norm() <= 1e-9 * std::max(1.0, r.positive.norm()));
  }
}

TEST_CASE("svd_quaternionic") {
  QuatSvdResult zero = svd_quaternionic(CMatrix::Zero(4, 4));
  CHECK(zero.d.norm() == 0.0);

  const CMatrix three = 3.0 * chi(QuatMatrix::identity(1));
  QuatSvdResult rs = svd_quaternionic(three);
  CHECK((rs.d - 3.0 * CMatrix::Identity(2, 2)).norm() <= 1e-12);
  CHECK(rs.residual <= 1e-12);

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GenSpec spec{3, MatrixClass::Quaternionic, seed + 60};
    const CMatrix x = generate(spec);
    QuatSvdResult r = svd_quaternionic(x);
    CHECK(r.residual <= 1e-9);
    CHECK(classify(r.u).symplectic);
    CHECK(classify(r.v).symplectic);
    CHECK((dual(r.d) - r.d.adjoint()).norm() <= 1e-12);

    Svd plain = svd_complex(x);
    RVector mine(6);
    for (Eigen::Index i = 0; i < 3; ++i) {
      mine(2 * i) = r.d(i, i).real();
      mine(2 * i + 1) = r.d(3 + i, 3 + i).real();
    }
    std::sort(mine.data(), mine.data() + 6, std::greater<double>());
    CHECK((mine - plain.sigma).norm() <= 1e-9 * std::max(1.0, plain.sigma(0)));

    std::vector<Complex> sv;
    for (Eigen::Index i = 0; i < 6; ++i) sv.emplace_back(plain.sigma(i), 0.0);
    CHECK(testing::even_multiplicities(sv, 1e-8 * std::max(1.0, plain.sigma(0))));
  }
}

TEST_CASE("qr_quaternionic") {
  auto [qi, ri] = qr_quaternionic(CMatrix::Identity(4, 4));
  CHECK((qi - CMatrix::Identity(4, 4)).norm() <= 1e-13);
  CHECK((ri - CMatrix::Identity(4, 4)).norm() <= 1e-13);

  GenSpec uspec{3, MatrixClass::SymplecticUnitary, 11};
  const CMatrix u = generate(uspec);
  auto [qu, ruf] = qr_quaternionic(u);
  for (Eigen::Index i = 0; i < 6; ++i)
    CHECK(std::abs(std::abs(ruf(i, i)) - 1.0) <= 1e-10);
  CHECK((u - qu * ruf).norm() <= 1e-10);

  for (std::uint64_t seed = 70; seed < 76; ++seed) {
    GenSpec spec{4, MatrixClass::Quaternionic, seed};
    const CMatrix x = generate(spec);
    auto [q, r] = qr_quaternionic(x);
    CHECK((x - q * r).norm() <= 1e-10 * std::max(1.0, x.norm()));
    CHECK(classify(q).symplectic);
    CHECK(classify(q).unitary);
    CHECK(classify(r).quaternionic);
    double lower = 0.0;
    for (Eigen::Index a = 0; a < 4; ++a)
      for (Eigen::Index b = 0; b < a; ++b) {
        lower += std::norm(r(a, b));
        lower += std::norm(r(a, 4 + b));
      }
    CHECK(std::sqrt(lower) <= 1e-11);
  }
}

TEST_CASE("operator_norm") {
  CHECK(operator_norm(QuatMatrix::identity(3)) == doctest::Approx(1.0));

  QuatMatrix q(1, 1);
  q(0, 0) = Quaternion(1, 1, 1, 1);
  CHECK(operator_norm(q) == doctest::Approx(2.0));

  for (std::uint64_t seed = 80; seed < 86; ++seed) {
    Rng rng(seed);
    const QuatMatrix x = random_quat_matrix(3, 3, rng);
    const double sigma = operator_norm(x);
    Svd svd = svd_complex(chi(x));
    const QuatVector top = pullback_vector(svd.v.col(0));
    const double achieved = qvec_norm(mat_vec(x, top)) / qvec_norm(top);
    CHECK(std::abs(achieved - sigma) <= 1e-9 * sigma);

    for (int k = 0; k < 20; ++k) {
      const QuatVector v = random_quat_vector(3, rng);
      CHECK(qvec_norm(mat_vec(x, v)) <= sigma * (1.0 + 1e-9) * qvec_norm(v));
    }
  }
}

TEST_CASE("schur unitaries have determinant one") {
  for (std::uint64_t seed = 90; seed < 94; ++seed) {
    GenSpec spec{3, MatrixClass::Quaternionic, seed};
    std::vector<CMatrix> family = generate_commuting(spec, 2);
    QuatSchurResult r = schur_commuting(family, seed);
    CHECK(std::abs(symplectic_det_check(r.unitary) - 1.0) <= 1e-8);
  }
}
