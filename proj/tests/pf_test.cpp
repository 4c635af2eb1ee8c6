#include "specgap/expansion.hpp"
#include "specgap/pf.hpp"
#include "specgap/spectral.hpp"

#include <doctest.h>

#include <complex>

using namespace specgap;

namespace {

// Row-stochastic but not doubly stochastic; stationary distribution (3/7, 4/7).
NonnegMatrix skew_chain() {
  Eigen::MatrixXd m(2, 2);
  m << 0.2, 0.8, 0.6, 0.4;
  return NonnegMatrix::from_dense(m);
}

void check_eig_multiset(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double tol) {
  auto ea = sorted_eigenvalues(a);
  auto eb = sorted_eigenvalues(b);
  REQUIRE(ea.size() == eb.size());
  for (std::size_t i = 0; i < ea.size(); ++i) CHECK(std::abs(ea[i] - eb[i]) <= tol);
}

}  // namespace

TEST_CASE("doubly stochastic inputs get the exact uniform pair") {
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 5);
  PFData pf = pf_data(c);
  CHECK(pf.classification == PFClassification::Irreducible);
  CHECK(pf.r == 1.0);
  CHECK(pf.kappa == 1.0 / 5.0);
  CHECK(pf.normalized);
  for (Eigen::Index i = 0; i < 5; ++i) {
    CHECK(pf.u(i) == 1.0 / std::sqrt(5.0));
    CHECK(pf.v(i) == pf.u(i));
  }
  CHECK(pf.u.dot(pf.v) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("non-doubly-stochastic chain gets the stationary pair") {
  NonnegMatrix m = skew_chain();
  PFData pf = pf_data(m);
  CHECK(pf.classification == PFClassification::Irreducible);
  CHECK(pf.r == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pf.u.dot(pf.v) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pf.u.norm() == doctest::Approx(pf.v.norm()).epsilon(1e-10));
  // u proportional to (3, 4), v to (1, 1).
  CHECK(pf.u(0) / pf.u(1) == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(pf.v(0) / pf.v(1) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK((m.entries * pf.v - pf.v).lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK((m.entries.transpose() * pf.u - pf.u).lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK(eulerian_defect(m, pf) <= 1e-9);
}

TEST_CASE("strong components of a two-block chain") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(4, 4);
  m(0, 1) = m(1, 0) = 1.0;  // block {0,1}
  m(2, 3) = m(3, 2) = 0.5;  // block {2,3}, smaller PF value
  m(1, 2) = 0.25;           // condensation edge
  ComponentStructure cs = strong_components(NonnegMatrix::from_dense(m));
  REQUIRE(cs.components.size() == 2);
  REQUIRE(cs.condensation_edges.size() == 1);
  std::vector<double> pfs = cs.per_component_pf;
  std::sort(pfs.begin(), pfs.end());
  CHECK(pfs[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(pfs[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("classification is combinatorial") {
  // Two isolated 2-cycles at the same PF value: positive pair exists.
  Eigen::MatrixXd two = Eigen::MatrixXd::Zero(4, 4);
  two(0, 1) = two(1, 0) = 1.0;
  two(2, 3) = two(3, 2) = 1.0;
  PFData pos = pf_data(NonnegMatrix::from_dense(two));
  CHECK(pos.classification == PFClassification::ReducibleWithPositivePair);
  CHECK(pos.kappa == doctest::Approx(0.25).epsilon(1e-10));
  CHECK(pos.u.minCoeff() > 0.0);
  CHECK(pos.u.dot(pos.v) == doctest::Approx(1.0).epsilon(1e-10));

  // Identity: n isolated blocks at PF value 1.
  PFData id = pf_data(named_matrix(NamedKind::Identity, 3));
  CHECK(id.classification == PFClassification::ReducibleWithPositivePair);

  // Condensation edge between blocks at the same PF value: degenerate.
  Eigen::MatrixXd tri(2, 2);
  tri << 1.0, 1.0, 0.0, 1.0;
  PFData deg = pf_data(NonnegMatrix::from_dense(tri));
  CHECK(deg.classification == PFClassification::ReducibleDegenerate);
  CHECK(deg.kappa == 0.0);

  // Blocks at different PF values: degenerate even without edges.
  Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
  diag(0, 0) = 1.0;
  diag(1, 1) = 0.5;
  CHECK(pf_data(NonnegMatrix::from_dense(diag)).classification ==
        PFClassification::ReducibleDegenerate);
}

TEST_CASE("balance preserves the spectrum and fixes w on both sides") {
  NonnegMatrix m = skew_chain();
  PFData pf = pf_data(m);
  auto [a, w] = balance(m, pf);
  check_eig_multiset(m.entries, a.entries, 1e-9);
  CHECK((a.entries * w - pf.r * w).lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK((a.entries.transpose() * w - pf.r * w).lpNorm<Eigen::Infinity>() <= 1e-9);
  CHECK(operator_norm(a.entries) == doctest::Approx(pf.r).epsilon(1e-9));

  Eigen::MatrixXd tri(2, 2);
  tri << 1.0, 1.0, 0.0, 1.0;
  NonnegMatrix degm = NonnegMatrix::from_dense(tri);
  PFData deg = pf_data(degm);
  CHECK_THROWS_AS(balance(degm, deg), DegeneratePFError);
}

TEST_CASE("lazify maps the spectrum affinely") {
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 4);
  NonnegMatrix l = lazify(c, 0.5);
  CHECK(l.tags.lazy);
  auto eigs = sorted_eigenvalues(l.entries);
  // Cycle spectrum {1, i, -1, -i} maps to {1, 0.5 +- 0.5i, 0}. The conjugate
  // pair can swap positions on fp noise, so match the multiset.
  std::vector<std::complex<double>> expected = {
      {0.0, 0.0}, {0.5, -0.5}, {0.5, 0.5}, {1.0, 0.0}};
  for (const auto& e : expected) {
    double best = 1e9;
    for (const auto& z : eigs) best = std::min(best, std::abs(z - e));
    CHECK(best <= 1e-12);
  }
  CHECK_THROWS_AS(lazify(c, 1.5), DomainError);
}

TEST_CASE("additive symmetrization") {
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 4);
  NonnegMatrix m = additive_symmetrize(c);
  CHECK(m.tags.symmetric);
  CHECK((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(m.entries(0, 1) == 0.5);
  CHECK(m.entries(1, 0) == 0.5);
}
