#include <doctest.h>

#include "kramers/errors.hpp"
#include "kramers/generators.hpp"
#include "kramers/quat_matrix.hpp"
#include "kramers/quaternion.hpp"

using namespace kramers;

namespace {
double qdist(const Quaternion& p, const Quaternion& q) { return abs(p - q); }
}  // namespace

TEST_CASE("quaternion unit relations") {
  const Quaternion i = Quaternion::unit_i();
  const Quaternion j = Quaternion::unit_j();
  const Quaternion k = Quaternion::unit_k();
  CHECK(qdist(i * j, k) == 0.0);
  CHECK(qdist(j * k, i) == 0.0);
  CHECK(qdist(k * i, j) == 0.0);
  CHECK(qdist(j * j, Quaternion(-1.0)) == 0.0);
  CHECK(qdist(i * i, Quaternion(-1.0)) == 0.0);
  CHECK(qdist(k * k, Quaternion(-1.0)) == 0.0);
}

TEST_CASE("quaternion conjugation") {
  CHECK(qdist(conj(Quaternion(1.0)), Quaternion(1.0)) == 0.0);
  CHECK(qdist(conj(Quaternion::unit_j()), -Quaternion::unit_j()) == 0.0);
  const Quaternion q(1, 2, 3, 4);
  CHECK(qdist(conj(q), Quaternion(1, -2, -3, -4)) == 0.0);
  CHECK(qdist(conj(conj(q)), q) == 0.0);
  CHECK(qdist(conj(q) * q, Quaternion(30.0)) < 1e-14);
}

TEST_CASE("quaternion algebra properties") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Quaternion p(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    const Quaternion q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    const Quaternion r(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    const double s = rng.normal();

    CHECK(qdist(conj(p * q), conj(q) * conj(p)) < 1e-13);
    CHECK(qdist((p + q) * r, p * r + q * r) < 1e-12);
    CHECK(qdist(p * (q + r), p * q + p * r) < 1e-12);
    CHECK(qdist((s * p) * q, s * (p * q)) < 1e-12);
    CHECK(qdist((p * q) * r, p * (q * r)) < 1e-12);
    // conj(q) q is |q|^2, so it vanishes only at q = 0
    CHECK(abs(conj(q) * q - Quaternion(abs2(q))) < 1e-12);
  }
}

TEST_CASE("quaternion matrix identities") {
  Rng rng(11);
  const QuatMatrix x = random_quat_matrix(3, 3, rng);
  const QuatMatrix y = random_quat_matrix(3, 3, rng);
  const QuatMatrix id = QuatMatrix::identity(3);

  CHECK((id * x - x).frobenius_norm() == 0.0);

  const QuatMatrix jmat = scale_left(Quaternion::unit_j(), id);
  QuatMatrix minus_id = QuatMatrix::identity(3);
  for (Eigen::Index i = 0; i < 3; ++i) minus_id(i, i) = Quaternion(-1.0);
  CHECK((jmat * jmat - minus_id).frobenius_norm() == 0.0);

  CHECK((x.adjoint().adjoint() - x).frobenius_norm() == 0.0);
  CHECK(((x * y).adjoint() - y.adjoint() * x.adjoint()).frobenius_norm() < 1e-12);

  const QuatMatrix jadj = jmat.adjoint();
  CHECK((jadj - scale_left(-Quaternion::unit_j(), id)).frobenius_norm() == 0.0);
}

TEST_CASE("quaternion matrix dimension mismatch") {
  const QuatMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, DimensionError);
}

TEST_CASE("quaternion vector norm") {
  QuatVector e1 = {Quaternion(1.0), Quaternion(0.0)};
  CHECK(qvec_norm(e1) == 1.0);
  QuatVector jv = {Quaternion::unit_j()};
  CHECK(qvec_norm(jv) == 1.0);
  QuatVector v = {Quaternion(1, 1, 0, 0), Quaternion(0, 0, 1, 1)};
  CHECK(qvec_norm(v) == 2.0);
  QuatVector zero = {Quaternion(), Quaternion()};
  CHECK(qvec_norm(zero) == 0.0);
}
