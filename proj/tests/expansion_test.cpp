#include "specgap/expansion.hpp"
#include "specgap/matrix.hpp"
#include "specgap/pf.hpp"

#include <doctest.h>

using namespace specgap;

TEST_CASE("single-cut expansion of the uniform matrix") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pf = pf_data(j);
  // S = {0}: flow 3/16, weight 1/4.
  CHECK(phi_cut(j, pf, 0b0001) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(phi_cut(j, pf, 0b0011) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(phi_cut(j, pf, 0), DomainError);
  CHECK_THROWS_AS(phi_cut(j, pf, 0b1111), DomainError);
}

TEST_CASE("uniform matrix expansion is (n-k)/n, minimized at the half cut") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pf = pf_data(j);
  ExpansionResult res = phi_exact(j, pf);
  CHECK(res.phi == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(res.method == ExpansionMethod::BruteForce);
  REQUIRE(res.argmin_cut.has_value());
  CHECK(res.argmin_cut->members == 0b0011);  // smallest bitmask among the ties
  CHECK(res.argmin_cut->weight == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("directed cycle expansion") {
  NonnegMatrix c8 = named_matrix(NamedKind::DirectedCycle, 8);
  PFData pf8 = pf_data(c8);
  ExpansionResult res8 = phi_exact(c8, pf8);
  CHECK(res8.phi == doctest::Approx(0.25).epsilon(1e-12));  // 2/n for even n
  CHECK(res8.argmin_cut->members == 0b00001111);            // the contiguous arc at 0

  NonnegMatrix c7 = named_matrix(NamedKind::DirectedCycle, 7);
  ExpansionResult res7 = phi_exact(c7, pf_data(c7));
  CHECK(res7.phi == doctest::Approx(1.0 / 3.0).epsilon(1e-12));  // 2/(n-1) for odd n
}

TEST_CASE("zero flow across components gives zero expansion") {
  NonnegMatrix id = named_matrix(NamedKind::Identity, 4);
  PFData pf = pf_data(id);
  REQUIRE(pf.classification == PFClassification::ReducibleWithPositivePair);
  ExpansionResult res = phi_exact(id, pf);
  CHECK(res.phi == 0.0);
  CHECK(res.method == ExpansionMethod::BruteForce);
}

TEST_CASE("degenerate inputs have expansion zero by definition") {
  Eigen::MatrixXd tri(2, 2);
  tri << 1.0, 1.0, 0.0, 1.0;
  NonnegMatrix m = NonnegMatrix::from_dense(tri);
  PFData pf = pf_data(m);
  ExpansionResult res = phi_exact(m, pf);
  CHECK(res.phi == 0.0);
  CHECK(res.method == ExpansionMethod::DefinitionZero);
  CHECK_FALSE(res.argmin_cut.has_value());
  CHECK_THROWS_AS(phi_cut(m, pf, 1), DegeneratePFError);
}

TEST_CASE("complement symmetry of the cut functional") {
  NonnegMatrix a = random_doubly_stochastic(6, 3);
  PFData pf = pf_data(a);
  const std::uint64_t full = (1ull << 6) - 1;
  for (std::uint64_t s : {0b000001ull, 0b010101ull, 0b001111ull, 0b100110ull}) {
    CHECK(phi_cut(a, pf, s) ==
          doctest::Approx(phi_cut(a, pf, full & ~s)).epsilon(1e-12));
  }
}

TEST_CASE("expansion scales linearly with the matrix") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  NonnegMatrix two = NonnegMatrix::from_dense(2.0 * j.entries);
  PFData pf = pf_data(two);
  CHECK(phi_exact(two, pf).phi == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("enumeration matches a direct scan on a random fixture") {
  NonnegMatrix a = random_doubly_stochastic(7, 19);
  PFData pf = pf_data(a);
  ExpansionResult res = phi_exact(a, pf);
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t s = 1; s < (1ull << 7) - 1; ++s) best = std::min(best, phi_cut(a, pf, s));
  CHECK(res.phi == doctest::Approx(best).epsilon(1e-12));
  CHECK(phi_cut(a, pf, res.argmin_cut->members) == doctest::Approx(res.phi).epsilon(1e-12));
  CHECK(res.argmin_cut->weight <= 0.5 + 1e-12);
}

TEST_CASE("enumeration is capped") {
  NonnegMatrix a = random_doubly_stochastic(6, 1);
  PFData pf = pf_data(a);
  CHECK_THROWS_AS(phi_exact(a, pf, 5), CapacityError);
}

TEST_CASE("eulerian defect vanishes for a consistent pair") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  CHECK(eulerian_defect(j, pf_data(j)) <= 1e-15);
  NonnegMatrix a = random_doubly_stochastic(5, 99);
  CHECK(eulerian_defect(a, pf_data(a)) <= 1e-12);
}
