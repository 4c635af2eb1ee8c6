#pragma once

#include "specgap/matrix.hpp"
#include "specgap/pf.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace specgap {

/// Mixing time tau_eps: smallest tau with
///   max_i ||D_u (R^tau - v u^T) y_i||_1 <= eps,  y_i = e_i / ||D_u e_i||_1.
/// Returns nullopt (divergence) once tau_max is exceeded, which is the
/// legitimate outcome for reducible or periodic inputs.
std::optional<long> mixing_time(const NonnegMatrix& r, const PFData& pf, double eps,
                                long tau_max = 1'000'000);

/// The mixing residual at a fixed power; exposed for tests.
double mixing_residual(const Eigen::MatrixXd& r_pow, const PFData& pf);

struct MixReport {
  double eps = 0.25;
  std::optional<long> tau;           // of R itself
  std::optional<long> tau_balanced;  // of the balanced form A
  std::optional<long> tau_sym;       // of M = (A + A^T)/2
  double lower_phi = 0.0;
  double upper_phi = 0.0;
  double lower_lambda = 0.0;
  double upper_lambda = 0.0;
  double upper_sigma_c1 = 0.0;
  double upper_sigma_c2 = 0.0;
  std::optional<double> sym_lower;  // vs tau_balanced
  std::optional<double> sym_upper;
  double phi = 0.0;
  bool phi_is_exact = false;
};

MixReport mixing_bounds(const NonnegMatrix& r, const PFData& pf, double eps,
                        long tau_max = 1'000'000);

/// exp(t (M - I)) computed as e^{-t} exp(tM) by scaling-and-squaring with a
/// truncated series; tiny negative entries from roundoff are clamped.
Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m, double t, double tol = 1e-14);

/// Mixing time of the continuous operator exp(t (R - I)): doubling bracket,
/// then bisection to relative resolution 1e-3 (right endpoint returned).
std::optional<double> continuous_mixing_time(const NonnegMatrix& r, const PFData& pf, double eps,
                                             double t_max = 1e4);

/// Canonical paths: one edge list per ordered vertex pair.
struct PathEnsemble {
  std::map<std::pair<Eigen::Index, Eigen::Index>, std::vector<std::pair<Eigen::Index, Eigen::Index>>>
      paths;
};

/// BFS shortest paths on the positive support with lexicographic parent
/// choice; the default ensemble when none is supplied.
PathEnsemble bfs_path_ensemble(const NonnegMatrix& m);

struct CanonicalPathsResult {
  double rho = 0.0;  // +inf when some pair is disconnected
  double gap_lower = 0.0;
  double tau_upper = 0.0;           // rho ln(n/eps)
  double tau_upper_singular = 0.0;  // 2 rho ln(n/eps), for M = A A^T
};

/// Congestion bound for a symmetric doubly stochastic M:
///   rho_W = max_{(x,y): M_xy > 0} sum_{(u,v): (x,y) in gamma_uv} |gamma_uv|
///           / (n M_xy),
/// with 1 - lambda_2(M) >= 1/rho_W.
CanonicalPathsResult canonical_paths_bound(const NonnegMatrix& m,
                                           const PathEnsemble* w = nullptr, double eps = 0.25);

}  // namespace specgap
