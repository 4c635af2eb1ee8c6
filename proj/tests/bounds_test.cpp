#include "specgap/bounds.hpp"
#include "specgap/construction.hpp"
#include "specgap/expansion.hpp"

#include <doctest.h>

#include <cmath>

using namespace specgap;

TEST_CASE("full report on the uniform matrix") {
  BoundReport rep = bound_report(named_matrix(NamedKind::UniformJ, 4));
  CHECK(rep.n == 4);
  CHECK_FALSE(rep.degenerate);
  CHECK(rep.kappa == 0.25);
  CHECK(rep.phi_exact_known);
  CHECK(rep.phi_lo == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.phi_hi == rep.phi_lo);
  CHECK(rep.re_lambda2 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rep.sigma2 == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(rep.all_pass());
  CHECK(rep.records.count("fiedler_upper") == 1);
  CHECK(rep.records.count("general_lower") == 1);
  CHECK(rep.records.count("ds_lower_35n") == 1);  // doubly stochastic input
  CHECK(rep.records.count("detailed_balance_cheeger_lo") == 1);  // symmetric input
  CHECK(rep.records.at("fiedler_upper").rhs ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(rep.records.at("ds_lower_35n").lhs == doctest::Approx(1.0 / 140.0).epsilon(1e-10));
  // Detailed-balance lower end (1 - lambda2)/2 = 1/2 = phi: equality within slack.
  CHECK(rep.records.at("detailed_balance_cheeger_lo").status == BoundStatus::Pass);
}

TEST_CASE("full report on the directed 6-cycle") {
  BoundReport rep = bound_report(named_matrix(NamedKind::DirectedCycle, 6));
  CHECK(rep.all_pass());
  CHECK(rep.phi_lo == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(rep.re_lambda2 == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.records.count("detailed_balance_cheeger_lo") == 0);  // not reversible
  // M = (C + C^T)/2 has lambda2 = cos(pi/3): the sandwich sits at its upper edge.
  CHECK(rep.lambda2_sym == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(rep.records.at("sym_sandwich_hi").status == BoundStatus::Pass);
  CHECK(rep.records.at("sym_sandwich_hi").margin == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("non-stochastic inputs are scaled to unit PF value first") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  NonnegMatrix five = NonnegMatrix::from_dense(5.0 * j.entries);
  BoundReport rep = bound_report(five);
  CHECK(rep.all_pass());
  CHECK(rep.phi_lo == doctest::Approx(0.5).epsilon(1e-10));  // scale-invariant after unit PF
  CHECK(rep.records.count("ds_lower_35n") == 1);  // the scaled matrix is doubly stochastic
}

TEST_CASE("degenerate inputs only get the upper bound") {
  Eigen::MatrixXd tri(2, 2);
  tri << 1.0, 1.0, 0.0, 1.0;
  BoundReport rep = bound_report(NonnegMatrix::from_dense(tri));
  CHECK(rep.degenerate);
  CHECK(rep.phi_lo == 0.0);
  CHECK(rep.phi_exact_known);
  CHECK(rep.records.size() == 1);
  CHECK(rep.records.count("fiedler_upper") == 1);
  CHECK(rep.records.at("fiedler_upper").status == BoundStatus::Pass);
  CHECK(rep.all_pass());
}

TEST_CASE("bracketed expansion beyond the enumeration cap never reports Fail") {
  NonnegMatrix a = random_doubly_stochastic(10, 8);
  BoundReport rep = bound_report(a, /*n_limit=*/8);
  CHECK_FALSE(rep.phi_exact_known);
  CHECK(rep.phi_lo <= rep.phi_hi);
  CHECK(rep.all_pass());
  // The bracket is honest: the true value lies inside it.
  BoundReport exact = bound_report(a);
  CHECK(exact.phi_exact_known);
  CHECK(rep.phi_lo <= exact.phi_lo + 1e-12);
  CHECK(exact.phi_hi <= rep.phi_hi + 1e-12);
}

TEST_CASE("witness table entries sit between the proven bounds") {
  for (Eigen::Index n : {9, 16, 25}) {
    GammaRecord rec = gamma_witness(n);
    CHECK(rec.gamma_lower_bound == doctest::Approx(1.0 / (35.0 * double(n))).epsilon(1e-14));
    CHECK(rec.gamma_upper_witness >= rec.gamma_lower_bound);
    CHECK(rec.gamma_upper_witness <= rec.inv_sqrt_n + 1e-12);
  }
}

TEST_CASE("expansion of powers is submultiplicative") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pfj = pf_data(j);
  auto [pj_k, pj_bound] = submultiplicativity_check(j, pfj, 2);
  CHECK(pj_k == doctest::Approx(0.5).epsilon(1e-12));  // J^2 = J
  CHECK(pj_bound == doctest::Approx(1.0).epsilon(1e-12));

  NonnegMatrix a = random_doubly_stochastic(6, 21);
  PFData pf = pf_data(a);
  for (int k : {2, 3, 5}) {
    auto [phi_k, bound] = submultiplicativity_check(a, pf, k);
    CHECK(phi_k <= bound + 1e-9);
  }
  CHECK_THROWS_AS(submultiplicativity_check(a, pf, 0), DomainError);
}

TEST_CASE("perturbation reading of the lower bound") {
  CHECK(perturbation_gap_bound(0.1, 4, 0.25) ==
        doctest::Approx(3.0 * (4.0 + std::log(4.0))).epsilon(1e-12));
  CHECK(perturbation_gap_bound(0.0, 4, 0.25) == 0.0);
  CHECK_THROWS_AS(perturbation_gap_bound(-1.0, 4, 0.25), DomainError);
  CHECK_THROWS_AS(perturbation_gap_bound(0.1, 4, 0.0), DomainError);
  CHECK_THROWS_AS(perturbation_gap_bound(0.1, 4, 2.0), DomainError);

  // The construction's perturbation saturates the reading: a 2b_n move closes
  // a unit gap, so the bound at delta = 2b_n must be >= 1.
  ConstructionCoefficients co = construction_coefficients(16, ArithmeticMode::Float64);
  CHECK(perturbation_gap_bound(2.0 * co.b, 16, 1.0 / 16.0) >= 1.0);
}
