#pragma once

#include "specgap/matrix.hpp"

#include <utility>

namespace specgap {

/// Closed-form scalars of the low-expansion / zero-spectrum family, all
/// rational in m = sqrt(n). Exact when n is a perfect square.
struct ConstructionCoefficients {
  double m;
  double a, b, c, d, e, f;
  double r;      // 1 - 1/(m+2)
  double alpha;  // -1 + 1/(m(m+1))
  double beta;   // 1/(m(m+1))
  // Populated in exact-rational mode.
  std::optional<Rational> a_q, b_q, c_q, d_q, e_q, f_q, r_q, alpha_q, beta_q, inv_m_q;
};

ConstructionCoefficients construction_coefficients(Eigen::Index n, ArithmeticMode mode);

/// The n x n doubly stochastic matrix A_n whose nontrivial eigenvalues are
/// all zero yet whose edge expansion is at most 1/sqrt(n).
NonnegMatrix rogue_matrix(Eigen::Index n, ArithmeticMode mode = ArithmeticMode::Float64);

/// The Schur witness (U_n, T_n) with A_n = U_n T_n U_n^*. Both matrices are
/// real (U is symmetric, not nonnegative); in rational mode the identity
/// holds exactly.
struct SchurWitness {
  Eigen::MatrixXd u;
  Eigen::MatrixXd t;
  std::optional<RationalMatrix> u_exact;
  std::optional<RationalMatrix> t_exact;
};

SchurWitness schur_witness(Eigen::Index n, ArithmeticMode mode = ArithmeticMode::Float64);

/// A'_n: a_n -> a_n + b_n, b_n -> 0, f_n -> f_n + b_n. Moves 2 b_n < 2/sqrt(n)
/// of mass and flips lambda_2 from 0 to 1 (vertex 1 decouples).
NonnegMatrix perturbed_rogue(Eigen::Index n);

/// de Bruijn walk on n = 2^k vertices: from v, drop the leading bit and
/// append 0 or 1, each with probability 1/2.
NonnegMatrix de_bruijn(int k);

/// Klawe-Vazirani walk on Z/p (p an odd prime): from v, move to v+1 or 2v,
/// each with probability 1/2.
NonnegMatrix klawe_vazirani(long p);

}  // namespace specgap
