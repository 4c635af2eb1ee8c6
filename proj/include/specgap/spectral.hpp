#pragma once

#include "specgap/matrix.hpp"

#include <complex>
#include <vector>

namespace specgap {

struct SchurFactors {
  Eigen::MatrixXcd u;  // unitary
  Eigen::MatrixXcd t;  // upper triangular
  double reconstruction_residual = 0.0;
};

/// Nontrivial spectrum after deflating the PF direction.
struct SpectralSummary {
  std::complex<double> lambda2;   // max real part among nontrivial eigenvalues
  std::complex<double> lambda_m;  // max modulus among nontrivial eigenvalues
  double sigma2 = 0.0;            // second largest singular value
  double spectral_gap = 0.0;      // 1 - Re(lambda2)
  std::vector<std::complex<double>> nontrivial_eigs;
  double deflation_residual = 0.0;
};

SchurFactors schur_decompose(const NonnegMatrix& m);

/// Spectrum of a balanced matrix A (Aw = A^T w = w, <w,w> = 1). Deflates via
/// B = A - w w^T, whose eigenvalues are the nontrivial ones of A plus one
/// zero; exactly one zero (tolerance 1e-7) is removed from the multiset, or
/// failing that the eigenvalue closest to 0, recorded in deflation_residual.
SpectralSummary spectral_summary(const NonnegMatrix& a, const Eigen::VectorXd& w);

/// Eigenvalue multiset helper shared with tests: complex eigenvalues sorted
/// by (real, imag).
std::vector<std::complex<double>> sorted_eigenvalues(const Eigen::MatrixXd& m);

/// Power-norm bound for upper triangular T with ||T||_2 = sigma >= 1 and
/// |T_ii| <= beta:  ||T^k||_2 <= n sigma^n C(k+n, n) beta^{k-n}.
/// Evaluated in log-space; may return +inf.
double triangular_power_bound(int n, double sigma, double beta, int k);

/// Smallest guaranteed k with ||T^k||_2 <= eps for upper triangular T with
/// ||T||_2 <= 1 and |T_ii| <= alpha < 1; the sharp proof constant
/// ceil((3.51 n + 1.385 ln(n/eps)) / (1 - alpha)).
long triangular_mix_power(int n, double alpha, double eps);

double operator_norm(const Eigen::MatrixXd& m);
double operator_norm(const Eigen::MatrixXcd& m);

}  // namespace specgap
