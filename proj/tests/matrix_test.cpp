#include "specgap/matrix.hpp"
#include "specgap/pf.hpp"

#include <doctest.h>

using namespace specgap;

TEST_CASE("rational matrix algebra") {
  RationalMatrix a(2);
  a(0, 0) = Rational(1, 2);
  a(0, 1) = Rational(1, 2);
  a(1, 0) = Rational(1, 3);
  a(1, 1) = Rational(2, 3);

  RationalMatrix id = RationalMatrix::identity(2);
  CHECK(a * id == a);
  CHECK(id * a == a);
  CHECK(a.transpose().transpose() == a);

  RationalMatrix sq = a * a;
  CHECK(sq(0, 0) == Rational(1, 4) + Rational(1, 6));
  CHECK(sq(1, 1) == Rational(1, 6) + Rational(4, 9));

  Eigen::MatrixXd d = a.to_double();
  CHECK(d(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("from_dense clamps roundoff but rejects real negatives") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  m(0, 0) = -1e-16;  // within clamp tolerance
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  NonnegMatrix ok = NonnegMatrix::from_dense(m);
  CHECK(ok.entries(0, 0) == 0.0);

  m(0, 0) = -1e-3;
  CHECK_THROWS_AS(NonnegMatrix::from_dense(m), ValidationError);

  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(NonnegMatrix::from_dense(m), ValidationError);

  CHECK_THROWS_AS(NonnegMatrix::from_dense(Eigen::MatrixXd::Zero(2, 3)), DomainError);
}

TEST_CASE("from_rational rejects negatives") {
  RationalMatrix m(1);
  m(0, 0) = Rational(-1, 7);
  CHECK_THROWS_AS(NonnegMatrix::from_rational(m), ValidationError);
}

TEST_CASE("validate tags uniform and identity correctly") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pf = pf_data(j);
  ValidationReport rep = validate(j, &pf);
  CHECK(rep.nonneg_ok);
  CHECK(rep.doubly_stochastic_ok);
  CHECK(rep.row_sum_max_dev == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(rep.symmetric_dev == 0.0);
  CHECK_FALSE(rep.lazy_ok);  // diagonal is 1/4
  REQUIRE(rep.detailed_balance_dev.has_value());
  CHECK(*rep.detailed_balance_dev <= 1e-15);
  CHECK(j.tags.doubly_stochastic);
  CHECK(j.tags.symmetric);

  NonnegMatrix id = named_matrix(NamedKind::Identity, 3);
  ValidationReport rid = validate(id);
  CHECK(rid.lazy_ok);
  CHECK(rid.doubly_stochastic_ok);

  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 4);
  ValidationReport rc = validate(c);
  CHECK(rc.doubly_stochastic_ok);
  CHECK(rc.symmetric_dev == 1.0);
  CHECK_FALSE(c.tags.symmetric);
}

TEST_CASE("named matrices have the expected support") {
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 5);
  for (Eigen::Index i = 0; i < 5; ++i) {
    CHECK(c.entries(i, (i + 1) % 5) == 1.0);
    CHECK(c.entries.row(i).sum() == 1.0);
  }
  CHECK_THROWS_AS(named_matrix(NamedKind::DirectedCycle, 1), DomainError);
  CHECK_THROWS_AS(named_matrix(NamedKind::Identity, 0), DomainError);
}

TEST_CASE("sinkhorn fixtures are reproducible and doubly stochastic") {
  NonnegMatrix a = random_doubly_stochastic(6, 42);
  NonnegMatrix b = random_doubly_stochastic(6, 42);
  CHECK((a.entries - b.entries).cwiseAbs().maxCoeff() == 0.0);
  CHECK(a.entries.minCoeff() > 0.0);
  CHECK((a.entries.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
  CHECK((a.entries.colwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);

  NonnegMatrix other = random_doubly_stochastic(6, 43);
  CHECK((a.entries - other.entries).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("scale_to_unit_pf divides by the PF eigenvalue") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  NonnegMatrix two = NonnegMatrix::from_dense(2.0 * j.entries);
  PFData pf = pf_data(two);
  CHECK(pf.r == doctest::Approx(2.0).epsilon(1e-12));
  NonnegMatrix unit = scale_to_unit_pf(two, pf);
  CHECK(pf_data(unit).r == doctest::Approx(1.0).epsilon(1e-12));
}
