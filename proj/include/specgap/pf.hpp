#pragma once

#include "specgap/matrix.hpp"

#include <utility>
#include <vector>

namespace specgap {

enum class PFClassification {
  Irreducible,
  ReducibleWithPositivePair,
  ReducibleDegenerate,
};

/// Perron-Frobenius eigenpair data: PF eigenvalue r, left/right eigenvectors
/// u and v, balanced vector w_i = sqrt(u_i v_i) and kappa = min_i u_i v_i.
struct PFData {
  double r = 0.0;
  Eigen::VectorXd u;
  Eigen::VectorXd v;
  Eigen::VectorXd w;
  double kappa = 0.0;
  bool normalized = false;
  PFClassification classification = PFClassification::ReducibleDegenerate;
  double residual = 0.0;
};

struct ComponentStructure {
  std::vector<std::vector<Eigen::Index>> components;
  std::vector<std::pair<int, int>> condensation_edges;  // (from SCC, to SCC)
  std::vector<double> per_component_pf;
};

/// Strongly connected components of the support digraph {(i,j): R_ij > 0},
/// with the PF eigenvalue of each diagonal block.
ComponentStructure strong_components(const NonnegMatrix& r);

/// PF eigenpair via power iteration on the half-lazy matrix (I+R)/2, which
/// removes periodicity without changing eigenvectors. Classification is
/// decided combinatorially from the SCC structure, never from eigenvector
/// zeros. Convention: u, v >= 0, <u,v> = 1, ||u|| = ||v||; for doubly
/// stochastic inputs u = v = 1/sqrt(n) exactly, so kappa = 1/n.
PFData pf_data(const NonnegMatrix& r, double tol = 1e-12);

class DegeneratePFError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The balancing similarity A = D_u^{1/2} D_v^{-1/2} R D_u^{-1/2} D_v^{1/2}.
/// A has w as both left and right PF eigenvector and operator norm equal to
/// the PF eigenvalue; the spectrum and edge expansion of R are preserved.
std::pair<NonnegMatrix, Eigen::VectorXd> balance(const NonnegMatrix& r, const PFData& pf);

/// pI + (1-p)A. Eigenvalues map affinely; PF eigenvectors are unchanged.
NonnegMatrix lazify(const NonnegMatrix& a, double p);

/// M = (A + A^T)/2.
NonnegMatrix additive_symmetrize(const NonnegMatrix& a);

}  // namespace specgap
