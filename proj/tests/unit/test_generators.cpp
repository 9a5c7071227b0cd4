#include <doctest.h>

#include <cmath>

#include "kramers/factor_quaternionic.hpp"
#include "kramers/generators.hpp"
#include "kramers/report.hpp"
#include "kramers/structure.hpp"

#include "test_util.hpp"

using namespace kramers;

TEST_CASE("identical specs are bit-identical") {
  for (MatrixClass cls :
       {MatrixClass::Quaternionic, MatrixClass::NormalQuaternionic,
        MatrixClass::SelfDual, MatrixClass::SymplecticUnitary}) {
    GenSpec spec{4, cls, 42};
    const CMatrix a = generate(spec);
    const CMatrix b = generate(spec);
    CHECK((a - b).norm() == 0.0);
  }
  GenSpec base{3, MatrixClass::Quaternionic, 7};
  auto fam1 = generate_commuting(base, 3);
  auto fam2 = generate_commuting(base, 3);
  for (size_t j = 0; j < fam1.size(); ++j)
    CHECK((fam1[j] - fam2[j]).norm() == 0.0);
}

TEST_CASE("factorizations are deterministic end to end") {
  GenSpec spec{3, MatrixClass::Quaternionic, 99};
  const CMatrix x = generate(spec);
  QuatSchurResult a = schur_commuting({x}, 5);
  QuatSchurResult b = schur_commuting({x}, 5);
  CHECK((a.unitary - b.unitary).norm() == 0.0);
  CHECK((a.upper[0] - b.upper[0]).norm() == 0.0);
}

TEST_CASE("class soundness across many seeded instances") {
  const double class_tol = 1e-12;
  int generated = 0;
  for (std::uint64_t seed = 0; generated < 10000; ++seed) {
    const Eigen::Index n = 1 + static_cast<Eigen::Index>(seed % 5);
    for (MatrixClass cls :
         {MatrixClass::Quaternionic, MatrixClass::HermitianQuaternionic,
          MatrixClass::NormalQuaternionic, MatrixClass::SelfDual,
          MatrixClass::Symmetric, MatrixClass::SymplecticUnitary}) {
      GenSpec spec{cls == MatrixClass::SelfDual || cls == MatrixClass::Symmetric
                       ? 2 * n
                       : n,
                   cls, seed};
      StructureReport r = classify(generate(spec), class_tol);
      switch (cls) {
        case MatrixClass::Quaternionic:
          REQUIRE(r.quaternionic);
          break;
        case MatrixClass::HermitianQuaternionic:
          REQUIRE(r.quaternionic);
          REQUIRE(r.hermitian);
          break;
        case MatrixClass::NormalQuaternionic:
          REQUIRE(r.quaternionic);
          REQUIRE(r.normal);
          break;
        case MatrixClass::SelfDual:
          REQUIRE(r.selfdual);
          break;
        case MatrixClass::Symmetric:
          REQUIRE(r.symmetric);
          break;
        case MatrixClass::SymplecticUnitary:
          REQUIRE(r.symplectic);
          REQUIRE(r.unitary);
          break;
      }
      ++generated;
    }
  }
  CHECK(generated >= 10000);
}

TEST_CASE("commuting families commute tightly") {
  GenSpec spec{4, MatrixClass::Quaternionic, 3};
  auto family = generate_commuting(spec, 3);
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j) {
      const double comm = (family[i] * family[j] - family[j] * family[i]).norm();
      CHECK(comm <= 1e-12 * std::max(1.0, family[i].norm() * family[j].norm()));
    }
}

TEST_CASE("partial isometry generators") {
  const CMatrix wq = random_quaternionic_partial_isometry(4, 2, 9);
  StructureReport rq = classify(wq);
  CHECK(rq.quaternionic);
  const CMatrix gq = wq.adjoint() * wq;
  CHECK((gq * gq - gq).norm() <= 1e-12);

  const CMatrix ws = random_selfdual_partial_isometry(4, 2, 9);
  CHECK(classify(ws).selfdual);
  const CMatrix gs = ws.adjoint() * ws;
  CHECK((gs * gs - gs).norm() <= 1e-12);

  const CMatrix wt = random_symmetric_partial_isometry(5, 3, 9);
  CHECK((wt - wt.transpose()).norm() <= 1e-13);
  const CMatrix gt = wt.adjoint() * wt;
  CHECK((gt * gt - gt).norm() <= 1e-12);
}

TEST_CASE("residual_report renders pass and fail rows") {
  GenSpec spec{3, MatrixClass::Quaternionic, 21};
  const CMatrix x = generate(spec);
  auto [q, r] = qr_quaternionic(x);
  FactorReport good = verify_qr(q, r, x, tol::structural);
  CHECK(good.all_pass());
  const std::string text = residual_report(good);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("pass") != std::string::npos);

  CMatrix q_bad = q;
  q_bad(0, 0) += 0.5;
  FactorReport bad = verify_qr(q_bad, r, x, tol::structural);
  CHECK_FALSE(bad.all_pass());
  CHECK(residual_report(bad).find("FAIL") != std::string::npos);

  QuatSvdResult svd = svd_quaternionic(x);
  FactorReport svd_report = verify_svd_quaternionic(svd, x, tol::structural);
  CHECK(residual_report(svd_report).find("even.multiplicity") != std::string::npos);
  CHECK(svd_report.all_pass());

  const std::string machine = machine_report(good);
  CHECK(machine.find("all_pass=1") != std::string::npos);
}
