#include <doctest.h>

#include <sstream>

#include "kramers/errors.hpp"
#include "kramers/generators.hpp"
#include "kramers/matrix_io.hpp"

using namespace kramers;

TEST_CASE("complex matrix round trip is exact") {
  Rng rng(5);
  const CMatrix x = random_cmatrix(3, 4, rng);
  std::stringstream ss;
  write_matrix(ss, x);
  MatrixFile file = read_matrix(ss);
  REQUIRE(file.is_complex());
  CHECK((file.complex_matrix() - x).norm() == 0.0);
}

TEST_CASE("quaternion matrix round trip is exact") {
  Rng rng(6);
  const QuatMatrix q = random_quat_matrix(2, 3, rng);
  std::stringstream ss;
  write_matrix(ss, q);
  MatrixFile file = read_matrix(ss);
  REQUIRE_FALSE(file.is_complex());
  CHECK((file.quaternion_matrix() - q).frobenius_norm() == 0.0);
}

TEST_CASE("comments and free layout are accepted") {
  std::stringstream ss;
  ss << "# a banner comment\n"
     << "kramers-matrix 1 complex 2 2\n"
     << "1 0   0 0\n"
     << "# interior comment\n"
     << "0 0\n1 0\n";
  MatrixFile file = read_matrix(ss);
  CHECK((file.complex_matrix() - CMatrix::Identity(2, 2)).norm() == 0.0);
}

TEST_CASE("parse errors name the offending field") {
  auto expect_error = [](const std::string& text, const std::string& field) {
    std::stringstream ss(text);
    try {
      read_matrix(ss);
      FAIL_CHECK("expected a parse error for field " << field);
    } catch (const ParseError& e) {
      CHECK(e.field == field);
    }
  };

  expect_error("bogus 1 complex 2 2\n1 0 0 0 0 0 1 0\n", "magic");
  expect_error("kramers-matrix 2 complex 1 1\n1 0\n", "version");
  expect_error("kramers-matrix 1 octonion 1 1\n1 0\n", "kind");
  expect_error("kramers-matrix 1 complex 0 1\n", "rows");
  expect_error("kramers-matrix 1 complex 2 2\n1 0 0 0 0 0\n", "entry count");
  expect_error("kramers-matrix 1 complex 1 1\n1 zz\n", "entry (0,0)");
}
