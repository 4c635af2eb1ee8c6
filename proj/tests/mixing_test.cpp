#include "specgap/mixing.hpp"
#include "specgap/matrix.hpp"
#include "specgap/pf.hpp"

#include <doctest.h>

#include <cmath>

using namespace specgap;

TEST_CASE("residual of the deviation from the stationary projector") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pf = pf_data(j);
  CHECK(mixing_residual(j.entries, pf) <= 1e-15);
  // I - J has column 1-norm 2(1 - 1/n) in the u-weighted metric.
  CHECK(mixing_residual(Eigen::MatrixXd::Identity(4, 4), pf) ==
        doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("uniform matrix mixes in one step") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pf = pf_data(j);
  CHECK(mixing_time(j, pf, 0.25) == 1);
  CHECK_THROWS_AS(mixing_time(j, pf, 0.0), DomainError);
  CHECK_THROWS_AS(mixing_time(j, pf, 0.5), DomainError);
}

TEST_CASE("lazy uniform matrix mixes at the frozen step count") {
  // R = I/2 + J/2, so R^t - J = 2^{-t}(I - J) and the residual is 1.5 * 2^{-t}.
  NonnegMatrix l = lazify(named_matrix(NamedKind::UniformJ, 4), 0.5);
  PFData pf = pf_data(l);
  CHECK(mixing_time(l, pf, 0.25) == 3);
  CHECK(mixing_time(l, pf, 0.4) == 2);
}

TEST_CASE("periodic and disconnected inputs diverge") {
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 4);
  CHECK_FALSE(mixing_time(c, pf_data(c), 0.25, 512).has_value());
  NonnegMatrix id = named_matrix(NamedKind::Identity, 4);
  CHECK_FALSE(mixing_time(id, pf_data(id), 0.25, 512).has_value());
  // The lazy version of the cycle is aperiodic and mixes.
  NonnegMatrix lc = lazify(c, 0.5);
  auto tau = mixing_time(lc, pf_data(lc), 0.25, 100000);
  REQUIRE(tau.has_value());
  CHECK(*tau >= 1);
}

TEST_CASE("mixing sandwich on a lazy fixture") {
  NonnegMatrix l = lazify(named_matrix(NamedKind::UniformJ, 4), 0.5);
  PFData pf = pf_data(l);
  MixReport rep = mixing_bounds(l, pf, 0.25);
  REQUIRE(rep.tau.has_value());
  CHECK(*rep.tau == 3);
  CHECK(rep.phi_is_exact);
  CHECK(rep.phi == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(std::ceil(rep.lower_phi) <= double(*rep.tau) + 1e-9);
  CHECK(double(*rep.tau) <= rep.upper_phi + 1e-9);
  CHECK(std::ceil(rep.lower_lambda) <= double(*rep.tau) + 1e-9);
  CHECK(double(*rep.tau) <= rep.upper_lambda + 1e-9);
  REQUIRE(rep.tau_balanced.has_value());
  CHECK(double(*rep.tau_balanced) <= rep.upper_sigma_c1 + 1e-9);
  CHECK(double(*rep.tau_balanced) <= rep.upper_sigma_c2 + 1e-9);
  REQUIRE(rep.tau_sym.has_value());
  REQUIRE(rep.sym_lower.has_value());
  REQUIRE(rep.sym_upper.has_value());
  CHECK(*rep.sym_lower <= double(*rep.tau_balanced) + 1e-9);
  CHECK(double(*rep.tau_balanced) <= *rep.sym_upper + 1e-9);
}

TEST_CASE("matrix exponential of the uniform generator is in closed form") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  // exp(t(J - I)) = J + e^{-t}(I - J).
  for (double t : {0.0, 0.5, 1.0, 3.0, 20.0}) {
    Eigen::MatrixXd got = matrix_exponential(j.entries, t);
    Eigen::MatrixXd want = j.entries + std::exp(-t) * (Eigen::MatrixXd::Identity(4, 4) -
                                                       j.entries);
    CHECK((got - want).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((got.rowwise().sum().array() - 1.0).abs().maxCoeff() <= 1e-12);
  }
  CHECK_THROWS_AS(matrix_exponential(j.entries, -1.0), DomainError);
}

TEST_CASE("continuous mixing time of the uniform matrix is ln 6") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  PFData pf = pf_data(j);
  auto t = continuous_mixing_time(j, pf, 0.25);
  REQUIRE(t.has_value());
  // Residual e^{-t} * 1.5 = 0.25 at t = ln 6; bisection returns the right endpoint.
  CHECK(*t >= std::log(6.0) - 1e-9);
  CHECK(*t <= std::log(6.0) * (1.0 + 2e-3));

  // The continuous walk on the cycle mixes even though the discrete one is periodic.
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 4);
  CHECK(continuous_mixing_time(c, pf_data(c), 0.25).has_value());

  NonnegMatrix id = named_matrix(NamedKind::Identity, 4);
  CHECK_FALSE(continuous_mixing_time(id, pf_data(id), 0.25, 64.0).has_value());
}

TEST_CASE("default path ensemble is BFS with lexicographic parents") {
  NonnegMatrix c = named_matrix(NamedKind::DirectedCycle, 4);
  PathEnsemble ensemble = bfs_path_ensemble(c);
  CHECK(ensemble.paths.size() == 12);
  auto path = ensemble.paths.at({0, 2});
  REQUIRE(path.size() == 2);
  CHECK(path[0] == std::pair<Eigen::Index, Eigen::Index>(0, 1));
  CHECK(path[1] == std::pair<Eigen::Index, Eigen::Index>(1, 2));
}

TEST_CASE("congestion bound on the uniform matrix") {
  NonnegMatrix j = named_matrix(NamedKind::UniformJ, 4);
  CanonicalPathsResult res = canonical_paths_bound(j);
  CHECK(res.rho == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.gap_lower == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(res.tau_upper == doctest::Approx(std::log(16.0)).epsilon(1e-12));
  CHECK(res.tau_upper_singular == doctest::Approx(2.0 * std::log(16.0)).epsilon(1e-12));

  CHECK_THROWS_AS(canonical_paths_bound(named_matrix(NamedKind::DirectedCycle, 4)),
                  DomainError);
}

TEST_CASE("disconnected or unsupported paths give an infinite congestion") {
  Eigen::MatrixXd blocks = Eigen::MatrixXd::Zero(4, 4);
  blocks.topLeftCorner(2, 2).setConstant(0.5);
  blocks.bottomRightCorner(2, 2).setConstant(0.5);
  CanonicalPathsResult res = canonical_paths_bound(NonnegMatrix::from_dense(blocks));
  CHECK(std::isinf(res.rho));
  CHECK(res.gap_lower == 0.0);

  // A supplied ensemble routing through a zero-weight edge is unusable.
  PathEnsemble bad;
  bad.paths[{0, 1}] = {{0, 1}};
  bad.paths[{1, 0}] = {{1, 1}, {1, 0}};  // the loop edge has weight 0
  Eigen::MatrixXd no_loop(2, 2);
  no_loop << 0.0, 1.0, 1.0, 0.0;
  CanonicalPathsResult unusable =
      canonical_paths_bound(NonnegMatrix::from_dense(no_loop), &bad);
  CHECK(std::isinf(unusable.rho));
}
