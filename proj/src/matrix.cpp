#include "specgap/matrix.hpp"

#include "specgap/pf.hpp"

#include <cmath>
#include <random>

namespace specgap {

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (n_ != rhs.n_) throw DomainError("rational matrix dimension mismatch");
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& lik = (*this)(i, k);
      if (lik == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rhs(k, j) == 0) continue;
        out(i, j) += lik * rhs(k, j);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          static_cast<double>((*this)(i, j));
  return out;
}

NonnegMatrix NonnegMatrix::from_dense(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) throw DomainError("matrix must be square");
  if (m.rows() < 1) throw DomainError("matrix dimension must be >= 1");
  NonnegMatrix out;
  out.entries = std::move(m);
  out.mode = ArithmeticMode::Float64;
  for (Eigen::Index i = 0; i < out.entries.rows(); ++i) {
    for (Eigen::Index j = 0; j < out.entries.cols(); ++j) {
      double& e = out.entries(i, j);
      if (!std::isfinite(e)) throw ValidationError("non-finite matrix entry");
      if (e < 0.0) {
        if (e < -1e-15) throw ValidationError("negative matrix entry below tolerance");
        e = 0.0;  // roundoff clamp
      }
    }
  }
  return out;
}

NonnegMatrix NonnegMatrix::from_rational(RationalMatrix m) {
  NonnegMatrix out;
  const std::size_t n = m.size();
  if (n < 1) throw DomainError("matrix dimension must be >= 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j) < 0) throw ValidationError("negative matrix entry");
  out.entries = m.to_double();
  out.exact = std::move(m);
  out.mode = ArithmeticMode::ExactRational;
  return out;
}

ValidationReport validate(NonnegMatrix& m, const PFData* pf, double tol) {
  if (tol <= 0) throw DomainError("tolerance must be positive");
  const Eigen::Index n = m.n();
  const Eigen::MatrixXd& a = m.entries;
  if (!a.allFinite()) throw ValidationError("non-finite matrix entry");

  ValidationReport rep;
  rep.nonneg_ok = (a.minCoeff() >= 0.0);
  rep.row_sum_max_dev = (a.rowwise().sum().array() - 1.0).abs().maxCoeff();
  rep.col_sum_max_dev = (a.colwise().sum().array() - 1.0).abs().maxCoeff();
  rep.lazy_ok = (a.diagonal().minCoeff() >= 0.5 - tol);
  rep.symmetric_dev = (a - a.transpose()).cwiseAbs().maxCoeff();
  rep.doubly_stochastic_ok =
      rep.nonneg_ok && rep.row_sum_max_dev <= tol && rep.col_sum_max_dev <= tol;

  if (pf != nullptr && pf->u.size() == n && pf->u.minCoeff() > 0 && pf->v.minCoeff() > 0) {
    Eigen::MatrixXd g = pf->u.asDiagonal() * a * pf->v.asDiagonal();
    rep.detailed_balance_dev = (g - g.transpose()).cwiseAbs().maxCoeff();
  }

  m.tags.doubly_stochastic = rep.doubly_stochastic_ok;
  m.tags.lazy = rep.lazy_ok;
  m.tags.symmetric = rep.symmetric_dev <= tol;
  return rep;
}

NonnegMatrix named_matrix(NamedKind kind, Eigen::Index n) {
  if (n < 1) throw DomainError("n must be >= 1");
  NonnegMatrix out;
  switch (kind) {
    case NamedKind::Identity:
      out = NonnegMatrix::from_dense(Eigen::MatrixXd::Identity(n, n));
      out.tags = {.doubly_stochastic = true, .lazy = true, .symmetric = true};
      break;
    case NamedKind::UniformJ:
      out = NonnegMatrix::from_dense(Eigen::MatrixXd::Constant(n, n, 1.0 / double(n)));
      out.tags = {.doubly_stochastic = true, .lazy = n <= 2, .symmetric = true};
      break;
    case NamedKind::DirectedCycle: {
      if (n < 2) throw DomainError("directed cycle needs n >= 2");
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i) c(i, (i + 1) % n) = 1.0;
      out = NonnegMatrix::from_dense(std::move(c));
      out.tags = {.doubly_stochastic = true, .lazy = false, .symmetric = n == 2};
      break;
    }
  }
  return out;
}

NonnegMatrix random_doubly_stochastic(Eigen::Index n, std::uint64_t seed, double sinkhorn_tol) {
  if (n < 2) throw DomainError("n must be >= 2");
  if (sinkhorn_tol <= 0) throw DomainError("sinkhorn_tol must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = 0.05 + unif(rng);

  constexpr int kMaxSweeps = 100000;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    a.array().colwise() /= a.rowwise().sum().array();
    a.array().rowwise() /= a.colwise().sum().array();
    double dev = std::max((a.rowwise().sum().array() - 1.0).abs().maxCoeff(),
                          (a.colwise().sum().array() - 1.0).abs().maxCoeff());
    if (dev <= sinkhorn_tol) {
      NonnegMatrix out = NonnegMatrix::from_dense(std::move(a));
      out.tags.doubly_stochastic = true;
      return out;
    }
  }
  throw NumericError("sinkhorn normalization failed to converge");
}

NonnegMatrix scale_to_unit_pf(const NonnegMatrix& r, const PFData& pf) {
  if (pf.r <= 0) throw DegeneratePFError("PF eigenvalue is zero");
  NonnegMatrix out = r;
  out.entries /= pf.r;
  return out;
}

}  // namespace specgap
