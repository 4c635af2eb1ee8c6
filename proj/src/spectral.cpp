#include "specgap/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace specgap {

double operator_norm(const Eigen::MatrixXd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues()(0);
}

double operator_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

SchurFactors schur_decompose(const NonnegMatrix& m) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m.entries.cast<std::complex<double>>());
  if (schur.info() != Eigen::Success) throw NumericError("Schur decomposition did not converge");
  SchurFactors out;
  out.u = schur.matrixU();
  out.t = schur.matrixT();
  Eigen::MatrixXcd rec = out.u * out.t * out.u.adjoint();
  double scale = std::max(1e-300, m.entries.cwiseAbs().maxCoeff());
  out.reconstruction_residual =
      (rec - m.entries.cast<std::complex<double>>()).cwiseAbs().maxCoeff() / scale;
  return out;
}

std::vector<std::complex<double>> sorted_eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::ComplexSchur<Eigen::MatrixXcd> schur(m.cast<std::complex<double>>(), false);
  if (schur.info() != Eigen::Success) throw NumericError("eigenvalue computation failed");
  std::vector<std::complex<double>> eigs(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) eigs[std::size_t(i)] = schur.matrixT()(i, i);
  std::sort(eigs.begin(), eigs.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return eigs;
}

SpectralSummary spectral_summary(const NonnegMatrix& a, const Eigen::VectorXd& w) {
  const Eigen::Index n = a.n();
  Eigen::MatrixXd b = a.entries - w * w.transpose();
  std::vector<std::complex<double>> eigs = sorted_eigenvalues(b);

  // The deflation replaces the trivial eigenvalue by 0; drop exactly one zero
  // (or the closest thing to it, when A is reducible with a repeated unit
  // eigenvalue and genuine zeros are absent).
  std::size_t drop = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    double mod = std::abs(eigs[i]);
    if (mod < best) {
      best = mod;
      drop = i;
    }
  }
  SpectralSummary out;
  out.deflation_residual = best > 1e-7 ? best : 0.0;
  for (std::size_t i = 0; i < eigs.size(); ++i)
    if (i != drop) out.nontrivial_eigs.push_back(eigs[i]);

  if (out.nontrivial_eigs.empty()) {
    // n = 1: no nontrivial spectrum; gap is 1 by convention.
    out.lambda2 = out.lambda_m = 0.0;
  } else {
    auto by_real = *std::max_element(
        out.nontrivial_eigs.begin(), out.nontrivial_eigs.end(), [](const auto& x, const auto& y) {
          if (x.real() != y.real()) return x.real() < y.real();
          return std::abs(x.imag()) < std::abs(y.imag());
        });
    // Conjugate-pair tie: report the representative with imag >= 0.
    out.lambda2 = by_real.imag() < 0 ? std::conj(by_real) : by_real;
    out.lambda_m = *std::max_element(
        out.nontrivial_eigs.begin(), out.nontrivial_eigs.end(),
        [](const auto& x, const auto& y) { return std::abs(x) < std::abs(y); });
    if (out.lambda_m.imag() < 0) out.lambda_m = std::conj(out.lambda_m);
  }
  out.spectral_gap = 1.0 - out.lambda2.real();

  Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(a.entries).singularValues();
  out.sigma2 = n >= 2 ? sv(1) : 0.0;
  return out;
}

namespace {

double log_binomial(long n, long k) {
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0);
}

}  // namespace

double triangular_power_bound(int n, double sigma, double beta, int k) {
  if (n < 1 || k < 1) throw DomainError("n and k must be >= 1");
  if (beta < 0) throw DomainError("beta must be nonnegative");
  if (sigma < 1.0) throw DomainError("bound requires sigma >= 1");
  if (beta == 0.0) {
    if (k > n) return 0.0;
    // 0^0 at the boundary exponent: the beta factor degenerates to 1.
    if (k == n) return double(n) * std::pow(sigma, n) * std::exp(log_binomial(2L * n, n));
    return std::numeric_limits<double>::infinity();
  }
  double logv = std::log(double(n)) + double(n) * std::log(sigma) +
                log_binomial(long(k) + long(n), long(n)) +
                double(k - n) * std::log(beta);
  return std::exp(logv);
}

long triangular_mix_power(int n, double alpha, double eps) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0, 1)");
  if (!(eps > 0.0 && eps < 1.0)) throw DomainError("eps must lie in (0, 1)");
  double k = (3.51 * double(n) + 1.385 * std::log(double(n) / eps)) / (1.0 - alpha);
  return static_cast<long>(std::ceil(k));
}

}  // namespace specgap
