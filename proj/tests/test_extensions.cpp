#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "pointint/errors.hpp"
#include "pointint/extensions.hpp"
#include "pointint/matrixkernel.hpp"
#include "pointint/weyl.hpp"
#include "support.hpp"

using namespace pointint;

namespace {

bool has_note(const ExtensionReport& r, const std::string& note) {
  return std::find(r.notes.begin(), r.notes.end(), note) != r.notes.end();
}

PointConfiguration pair3(double r) { return make_configuration(3, {{0, 0, 0}, {r, 0, 0}}); }
PointConfiguration pair2(double r) { return make_configuration(2, {{0, 0}, {0, r}}); }

CMatrix scalar(double v) { return CMatrix::Constant(1, 1, v); }

}  // namespace

TEST_SUITE("extensions") {

TEST_CASE("is_self_adjoint examples") {
  const double a[] = {-1.0, 0.5, 3.0};
  ExtensionReport r = is_self_adjoint(diagonal_family(a));
  CHECK(r.self_adjoint);
  CHECK(has_note(r, "diagonal"));
  CHECK(r.defect_cd == 0.0);
  CHECK(r.regularity_gap >= 1.0);

  r = is_self_adjoint(friedrichs_pair(2));
  CHECK(r.self_adjoint);
  CHECK(has_note(r, "friedrichs"));

  CMatrix c(2, 2);
  c << 0, 1, 0, 0;
  r = is_self_adjoint(general_pair(c, CMatrix::Identity(2, 2)));
  CHECK_FALSE(r.self_adjoint);
  CHECK(r.defect_cd == doctest::Approx(1.0));

  // C D* Hermitian but C C* + D D* singular
  r = is_self_adjoint(general_pair(CMatrix::Zero(2, 2), CMatrix::Zero(2, 2)));
  CHECK_FALSE(r.self_adjoint);

  BoundaryPair bad;
  bad.C = CMatrix::Identity(2, 2);
  bad.D = CMatrix::Identity(3, 3);
  CHECK_THROWS_AS(is_self_adjoint(bad), ConfigurationError);
}

TEST_CASE("diagonal family with real alpha is always self-adjoint") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int t = 0; t < 100; ++t) {
    RVector a(1 + t % 6);
    for (Index i = 0; i < a.size(); ++i) a(i) = u(rng);
    CHECK(is_self_adjoint(diagonal_family(a, 1 + t % 3)).self_adjoint);
  }
}

TEST_CASE("random unitary-angle pairs are self-adjoint; perturbed ones are not") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    BoundaryPair p = support::random_self_adjoint_pair(1 + t % 6, rng);
    CHECK(is_self_adjoint(p).self_adjoint);
    p.C(0, 0) += Complex(0.0, 0.1);
    if (p.D.norm() > 0.5) CHECK_FALSE(is_self_adjoint(p).self_adjoint);
  }
}

TEST_CASE("is_nonnegative_3d examples") {
  const auto c1 = make_configuration(3, {{0, 0, 0}});
  const auto c2 = pair3(1.0);

  const RMatrix m0 = weyl_zero(c2).M0;
  CHECK(is_nonnegative_3d(operator_pair(m0.cast<Complex>()), c2));

  const double neg[] = {-1.0};
  CHECK_FALSE(is_nonnegative_3d(diagonal_family(neg), c1));

  const double pos[] = {1.0, 1.0};
  CHECK(is_nonnegative_3d(diagonal_family(pos), c2));
  const HermitianSpectrum s = herm_eig(nonnegativity_form(diagonal_family(pos), c2));
  CHECK(s.eigenvalues(0) == doctest::Approx(1.0 - 1.0 / (4 * kPi)).epsilon(1e-14));
  CHECK(s.eigenvalues(1) == doctest::Approx(1.0 + 1.0 / (4 * kPi)).epsilon(1e-14));

  CHECK_THROWS_AS(is_nonnegative_3d(diagonal_family(neg), make_configuration(2, {{0, 0}})),
                  UnsupportedError);
}

TEST_CASE("Krein and Friedrichs pairs are nonnegative in 3D") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    const auto c = support::random_cloud(3, 1 + t % 5, 2.0, 0.1, rng, 1 + t % 2);
    CHECK(is_nonnegative_3d(krein_pair(c), c));
    CHECK(is_nonnegative_3d(friedrichs_pair(c.boundary_size()), c));
  }
}

TEST_CASE("is_nonnegative_2d_reduced examples") {
  const double e = std::exp(1.0);
  const auto c = pair2(e);
  const WeylZeroRelation z = weyl_zero(c);
  CHECK(std::abs(z.op_matrix(0, 0) - 1.0 / (2 * kPi)) < 1e-16);

  CHECK(is_nonnegative_2d_reduced(z.op_matrix.cast<Complex>(), scalar(1.0), c) ==
        NonnegativeVerdict::nonnegative);
  CHECK(is_nonnegative_2d_reduced(scalar(0.0), scalar(1.0), c) == NonnegativeVerdict::not_nonnegative);
  CHECK(is_nonnegative_2d_reduced(scalar(1.0), scalar(1.0), c) == NonnegativeVerdict::nonnegative);

  CHECK(is_nonnegative_2d_reduced(scalar(0.0), scalar(1.0), make_configuration(2, {{0, 0}})) ==
        NonnegativeVerdict::unique_nonnegative);
  CHECK_THROWS_AS(is_nonnegative_2d_reduced(CMatrix::Zero(2, 2), CMatrix::Zero(2, 2), c),
                  ConfigurationError);
  CHECK_THROWS_AS(is_nonnegative_2d_reduced(scalar(0.0), scalar(1.0), pair3(1.0)), UnsupportedError);
  CHECK(std::string(to_string(NonnegativeVerdict::unique_nonnegative)) == "unique_nonnegative");
}

TEST_CASE("krein_coefficients_3d examples") {
  const CMatrix k1 = krein_coefficients_3d(make_configuration(3, {{0, 0, 0}}));
  CHECK(k1.rows() == 1);
  CHECK(k1(0, 0) == Complex(1.0, 0.0));

  const CMatrix k2 = krein_coefficients_3d(pair3(1.0));
  const double em1 = std::exp(-1.0);
  RMatrix e1(2, 2), rhs(2, 2);
  e1 << 1, em1, em1, 1;
  rhs << 1, 1 - em1, 1 - em1, 1;
  const RMatrix expected = e1.inverse() * rhs;
  CHECK((k2.real() - expected).norm() < 1e-14);
  CHECK(k2.imag().isZero(0.0));

  const CMatrix k3 = krein_coefficients_3d(make_configuration(3, {{0, 0, 0}, {1, 0, 0}}, 2));
  CHECK(k3.rows() == 4);
  CHECK((k3.topLeftCorner(2, 2) - k2).norm() == 0.0);

  CHECK_THROWS_AS(krein_coefficients_3d(pair2(1.0)), UnsupportedError);
}

TEST_CASE("krein_pair examples") {
  BoundaryPair p = krein_pair(make_configuration(3, {{0, 0, 0}}));
  CHECK(p.C(0, 0) == Complex(0.0));
  CHECK(p.D(0, 0) == Complex(1.0));
  CHECK(p.kind == PairKind::krein);

  p = krein_pair(make_configuration(2, {{0, 0}}));
  CHECK(p.C(0, 0) == Complex(1.0));
  CHECK(p.D(0, 0) == Complex(0.0));

  p = krein_pair(pair2(2.0));
  CHECK(is_self_adjoint(p).self_adjoint);
  // first row enforces sum(Gamma_0) = 0
  CHECK(std::abs(p.C(0, 0) - p.C(0, 1)) < 1e-16);
  CHECK(p.D.row(0).isZero(0.0));
}

TEST_CASE("2D Krein pair realizes the zero-energy relation") {
  std::mt19937_64 rng(19);
  for (Index m : {2, 3, 4, 5}) {
    const auto c = support::random_cloud(2, m, 2.0, 0.2, rng);
    const WeylZeroRelation z = weyl_zero(c);
    const BoundaryPair p = krein_pair(c);
    CHECK(is_self_adjoint(p).self_adjoint);
    // (h, A h + t e) lies in the relation for h in the hyperplane and any t
    const RVector h = z.op_basis * RVector::LinSpaced(m - 1, 0.3, 1.1);
    const RVector hp = z.form_matrix * h + 0.7 * z.mul_basis;
    CHECK((p.C * h.cast<Complex>() - p.D * hp.cast<Complex>()).norm() < 1e-13);
    // and Gamma_0 = e_mul is excluded
    CHECK((p.C * z.mul_basis.cast<Complex>()).norm() > 0.5);
  }
}

TEST_CASE("Krein and Friedrichs pairs pass whenever a random pair does") {
  std::mt19937_64 rng(44);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const int d = t % 2 ? 2 : 3;
    const auto c = support::random_cloud(d, 1 + t % 5, 2.0, 0.1, rng);
    const BoundaryPair p = support::random_self_adjoint_pair(c.boundary_size(), rng);
    if (!is_self_adjoint(p).self_adjoint) continue;
    ++checked;
    CHECK(is_self_adjoint(krein_pair(c)).self_adjoint);
    CHECK(is_self_adjoint(friedrichs_pair(c.boundary_size())).self_adjoint);
  }
  CHECK(checked == 100);
}

}  // TEST_SUITE
