#include <doctest.h>

#include "posmap/schmidt.hpp"
#include "test_helpers.hpp"

using namespace posmap;

namespace {

Vector reconstruct(const SchmidtForm& sf, Index m, Index n) {
  Vector x = Vector::Zero(m * n);
  for (Index s = 0; s < sf.rank; ++s)
    for (Index i = 0; i < m; ++i)
      for (Index k = 0; k < n; ++k)
        x(i * n + k) += sf.coefficients(s) * sf.left_vectors(i, s) * sf.right_vectors(k, s);
  return x;
}

}  // namespace

TEST_CASE("schmidt decomposition of a Bell state") {
  Vector bell = Vector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  const SchmidtForm sf = schmidt_decompose(bell, 2, 2, 1e-9);
  CHECK(sf.rank == 2);
  CHECK(sf.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(sf.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK((reconstruct(sf, 2, 2) - bell).norm() < 1e-10);
}

TEST_CASE("schmidt decomposition of a product vector") {
  Vector x = Vector::Zero(6);  // e_1 (x) f_3 with m=2, n=3
  x(2) = 1.0;
  const SchmidtForm sf = schmidt_decompose(x, 2, 3, 1e-9);
  CHECK(sf.rank == 1);
  CHECK(sf.coefficients(0) == doctest::Approx(1.0));
}

TEST_CASE("schmidt decomposition of random vectors") {
  Rng rng(20);
  for (int t = 0; t < 20; ++t) {
    const Vector x = test::random_complex(6, 1, rng).col(0);
    const SchmidtForm sf = schmidt_decompose(x, 2, 3, 1e-9);
    CHECK(sf.rank <= 2);
    CHECK((reconstruct(sf, 2, 3) - x).norm() < 1e-10);
    CHECK(sf.coefficients.squaredNorm() ==
          doctest::Approx(x.squaredNorm()).epsilon(1e-10));  // sum lambda_i^2 = ||x||^2
    CHECK((sf.left_vectors.adjoint() * sf.left_vectors -
           Matrix::Identity(sf.rank, sf.rank)).norm() < 1e-10);
    CHECK((sf.right_vectors.adjoint() * sf.right_vectors -
           Matrix::Identity(sf.rank, sf.rank)).norm() < 1e-10);
  }
}

TEST_CASE("schmidt coefficients are phase covariant") {
  Rng rng(21);
  const Vector x = test::random_complex(9, 1, rng).col(0);
  const Complex phase = std::polar(1.0, 1.2345);
  const SchmidtForm a = schmidt_decompose(x, 3, 3, 1e-9);
  const SchmidtForm b = schmidt_decompose(Vector(phase * x), 3, 3, 1e-9);
  CHECK((a.coefficients - b.coefficients).norm() < 1e-12);
}

TEST_CASE("schmidt decomposition rejects bad input") {
  CHECK_THROWS_WITH_AS(schmidt_decompose(Vector::Zero(4), 2, 2, 1e-9),
                       doctest::Contains("ZeroVector"), Error);
  CHECK_THROWS_WITH_AS(schmidt_decompose(Vector::Ones(5), 2, 2, 1e-9),
                       doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("purify the maximally mixed state") {
  const Vector x = purify(Matrix::Identity(2, 2) / 2.0, 1e-9);
  const SchmidtForm sf = schmidt_decompose(x, 2, 2, 1e-9);
  CHECK(sf.rank == 2);
  CHECK(sf.coefficients(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(sf.coefficients(1) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("purify a pure state gives a product vector") {
  Rng rng(22);
  Vector v = test::random_complex(3, 1, rng).col(0);
  v /= v.norm();
  const Vector x = purify(Matrix(v * v.adjoint()), 1e-9);
  CHECK(schmidt_decompose(x, 3, 3, 1e-9).rank == 1);
  // |x><x| equals |v(x)v><v(x)v| regardless of the eigenvector phase
  Vector vv(9);
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b) vv(a * 3 + b) = v(a) * v(b);
  CHECK((x * x.adjoint() - vv * vv.adjoint()).norm() < 1e-10);
}

TEST_CASE("purify diag(0.9, 0.1)") {
  Matrix rho = Matrix::Zero(2, 2);
  rho.diagonal() << 0.9, 0.1;
  const Vector x = purify(rho, 1e-9);
  CHECK(std::abs(x(0)) == doctest::Approx(std::sqrt(0.9)));
  CHECK(std::abs(x(3)) == doctest::Approx(std::sqrt(0.1)));
  CHECK(std::abs(x(1)) < 1e-14);
  CHECK(std::abs(x(2)) < 1e-14);
}

TEST_CASE("purification reproduces rho under tr_2 and matches its rank") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const Index dim = 2 + (t % 3);
    const Index rank = 1 + static_cast<Index>(rng() % dim);
    const Matrix rho = test::random_psd(dim, rng, rank);
    const Vector x = purify(rho, 1e-9);
    const BlockMatrix xx(dim, dim, x * x.adjoint());
    CHECK((partial_trace(xx, 2) - rho).norm() <= 1e-9 * std::max(1.0, rho.norm()));
    CHECK(schmidt_decompose(x, dim, dim, 1e-9).rank == rank);
  }
}

TEST_CASE("purify rejects non-PSD input") {
  Matrix bad = Matrix::Zero(2, 2);
  bad.diagonal() << 1.0, -0.5;
  CHECK_THROWS_WITH_AS(purify(bad, 1e-9), doctest::Contains("NotPsd"), Error);
}
