#include <doctest.h>

#include "posmap/states.hpp"
#include "test_helpers.hpp"

using namespace posmap;

namespace {

StateFamilySpec horodecki_spec(double a) {
  return {StateFamily::Horodecki, 3, 0, {{"a", a}}, {}, {}, {}};
}
StateFamilySpec werner_spec(Index m, double x) {
  return {StateFamily::Werner, m, 0, {{"x", x}}, {}, {}, {}};
}
StateFamilySpec isotropic_spec(Index m, double y) {
  return {StateFamily::Isotropic, m, 0, {{"y", y}}, {}, {}, {}};
}

}  // namespace

TEST_CASE("make_state entries") {
  const BlockMatrix h = make_state(horodecki_spec(2.0));
  CHECK(h.full()(0, 0).real() == doctest::Approx(2.0 / 21.0));
  CHECK(h.full()(1, 1).real() == doctest::Approx(2.0 / 21.0));
  CHECK(h.full()(2, 2).real() == doctest::Approx(3.0 / 21.0));

  const BlockMatrix w = make_state(werner_spec(2, 0.0));
  const Matrix expected = (2.0 * Matrix::Identity(4, 4) - flip(2).full()) / 6.0;
  CHECK((w.full() - expected).norm() < 1e-15);
  CHECK(w.full().trace().real() == doctest::Approx(1.0));

  const BlockMatrix iso = make_state(isotropic_spec(3, 1.0));
  CHECK((iso.full() - max_ent_projector(3).full()).norm() < 1e-15);
}

TEST_CASE("make_state domain validation") {
  CHECK_THROWS_WITH_AS(make_state(horodecki_spec(5.5)), doctest::Contains("ParamOutOfDomain"),
                       Error);
  CHECK_THROWS_WITH_AS(make_state(werner_spec(2, 2.0)), doctest::Contains("ParamOutOfDomain"),
                       Error);
  CHECK_THROWS_WITH_AS(make_state(isotropic_spec(3, -0.2)), doctest::Contains("ParamOutOfDomain"),
                       Error);
}

TEST_CASE("in-domain states are unit-trace Hermitian PSD with I/m reduced matrix") {
  for (double a : {0.0, 0.5, 1.3, 2.5, 3.7, 4.8, 5.0}) {
    const BlockMatrix s = make_state(horodecki_spec(a));
    CHECK(std::abs(s.full().trace().real() - 1.0) < 1e-12);
    CHECK(hermiticity_defect(s.full()) < 1e-14);
    CHECK(is_psd(s.full(), 1e-10));
    CHECK((partial_trace(s, 2) - Matrix::Identity(3, 3) / 3.0).norm() < 1e-12);
  }
  for (double x : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
    const BlockMatrix s = make_state(werner_spec(3, x));
    CHECK(std::abs(s.full().trace().real() - 1.0) < 1e-12);
    CHECK(is_psd(s.full(), 1e-10));
    CHECK((partial_trace(s, 2) - Matrix::Identity(3, 3) / 3.0).norm() < 1e-12);
  }
  for (double y : {-0.125, 0.0, 0.4, 1.0}) {
    const BlockMatrix s = make_state(isotropic_spec(3, y));
    CHECK(std::abs(s.full().trace().real() - 1.0) < 1e-12);
    CHECK(is_psd(s.full(), 1e-10));
    CHECK((partial_trace(s, 2) - Matrix::Identity(3, 3) / 3.0).norm() < 1e-12);
  }
}

TEST_CASE("classify_state") {
  CHECK(classify_state(horodecki_spec(3.5)).tag == StateTag::PptEntangled);
  CHECK(classify_state(horodecki_spec(2.5)).tag == StateTag::Separable);
  CHECK(classify_state(horodecki_spec(0.5)).tag == StateTag::NpptEntangled);
  CHECK(classify_state(horodecki_spec(4.5)).tag == StateTag::NpptEntangled);
  CHECK_THROWS_AS(classify_state(horodecki_spec(1.5)), Error);  // unclassified gap

  CHECK(classify_state(werner_spec(3, -0.5)).tag == StateTag::NpptEntangled);
  CHECK(classify_state(werner_spec(3, 0.5)).tag == StateTag::Separable);
  CHECK(classify_state(isotropic_spec(3, 0.2)).tag == StateTag::Separable);
  CHECK(classify_state(isotropic_spec(3, 0.3)).tag == StateTag::NpptEntangled);
}

TEST_CASE("flip and max_ent_projector") {
  Rng rng(40);
  for (Index m : {2, 3, 4}) {
    const BlockMatrix F = flip(m);
    CHECK((F.full() * F.full() - Matrix::Identity(m * m, m * m)).norm() == 0.0);
    CHECK(hermiticity_defect(F.full()) == 0.0);

    const Vector x = test::random_complex(m, 1, rng).col(0);
    const Vector y = test::random_complex(m, 1, rng).col(0);
    CHECK((F.full() * kron(x, y) - kron(y, x)).norm() < 1e-14);

    const BlockMatrix P = max_ent_projector(m);
    CHECK((P.full() * P.full() - P.full()).norm() < 1e-14);
    CHECK(P.full().trace().real() == doctest::Approx(1.0));
    const EigResult eig = hermitian_eig(P.full());
    CHECK(eig.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvalues(1)) < 1e-14);
  }
  for (Index m : {2, 3})
    CHECK((partial_transpose(flip(m), 2).full() -
           static_cast<double>(m) * max_ent_projector(m).full()).norm() == 0.0);
}

TEST_CASE("known NPPT ranges match ppt_classify on a parameter grid") {
  const double guard = 1e-3;

  // horodecki: NPPT exactly on [0,1) and (4,5]
  for (int k = 0; k < 50; ++k) {
    const double a = 5.0 * k / 49.0;
    if (std::abs(a - 1.0) < guard || std::abs(a - 4.0) < guard) continue;
    const bool nppt =
        ppt_classify(make_state(horodecki_spec(a)), 1e-9).tag == PptTag::PositiveNppt;
    CHECK(nppt == (a < 1.0 || a > 4.0));
  }

  // werner: NPPT exactly on x < 0
  for (int k = 0; k < 50; ++k) {
    const double x = -1.0 + 2.0 * k / 49.0;
    if (std::abs(x) < guard) continue;
    const bool nppt =
        ppt_classify(make_state(werner_spec(3, x)), 1e-9).tag == PptTag::PositiveNppt;
    CHECK(nppt == (x < 0.0));
  }

  // isotropic: NPPT exactly on y > 1/(m+1)
  for (Index m : {2, 3}) {
    const double lo = -1.0 / (static_cast<double>(m) * m - 1.0);
    for (int k = 0; k < 50; ++k) {
      const double y = lo + (1.0 - lo) * k / 49.0;
      if (std::abs(y - 1.0 / (m + 1.0)) < guard) continue;
      const bool nppt =
          ppt_classify(make_state(isotropic_spec(m, y)), 1e-9).tag == PptTag::PositiveNppt;
      CHECK(nppt == (y > 1.0 / (m + 1.0)));
    }
  }
}

TEST_CASE("cq and product states") {
  Rng rng(41);
  StateFamilySpec cq{StateFamily::Cq, 2, 2, {}, {}, {}, {}};
  cq.components = {{0.6, test::random_density(2, rng)}, {0.4, test::random_density(2, rng)}};
  const BlockMatrix s = make_state(cq);
  CHECK(std::abs(s.full().trace().real() - 1.0) < 1e-12);
  CHECK(is_psd(s.full(), 1e-10));
  CHECK(classify_state(cq).tag == StateTag::Separable);

  StateFamilySpec prod{StateFamily::Product, 3, 2, {}, {}, {}, {}};
  prod.product_left = test::random_density(3, rng);
  prod.product_right = test::random_density(2, rng);
  const BlockMatrix p = make_state(prod);
  CHECK((partial_trace(p, 1) - prod.product_right).norm() < 1e-12);
  CHECK((partial_trace(p, 2) - prod.product_left).norm() < 1e-12);
}
