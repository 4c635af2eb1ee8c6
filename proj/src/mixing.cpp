#include "specgap/mixing.hpp"

#include "specgap/expansion.hpp"
#include "specgap/spectral.hpp"

#include <cmath>
#include <deque>
#include <vector>

namespace specgap {

double mixing_residual(const Eigen::MatrixXd& r_pow, const PFData& pf) {
  // max_i ||D_u (R^t - v u^T) y_i||_1 with y_i = e_i / ||D_u e_i||_1: column i
  // of the deviation, u-weighted, scaled by 1/u_i.
  Eigen::MatrixXd dev = r_pow - pf.v * pf.u.transpose();
  Eigen::VectorXd col_norms = (pf.u.asDiagonal() * dev).cwiseAbs().colwise().sum();
  return (col_norms.array() / pf.u.array()).maxCoeff();
}

std::optional<long> mixing_time(const NonnegMatrix& r, const PFData& pf, double eps,
                                long tau_max) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("eps must lie in (0, 1/2)");
  if (pf.u.size() != r.n() || pf.u.minCoeff() <= 0.0 || pf.v.minCoeff() <= 0.0)
    throw DegeneratePFError("mixing time needs a positive eigenvector pair");

  if (mixing_residual(r.entries, pf) <= eps) return 1;

  // Doubling via repeated squaring to bracket the answer, then a linear scan
  // over the bracketed octave. The definition asks for the smallest tau and
  // monotonicity is not assumed.
  std::vector<Eigen::MatrixXd> squares{r.entries};  // squares[k] = R^(2^k)
  long tau_hi = -1;
  for (long t = 2; t <= tau_max; t *= 2) {
    const Eigen::MatrixXd& last = squares.back();
    squares.push_back(last * last);
    if (mixing_residual(squares.back(), pf) <= eps) {
      tau_hi = t;
      break;
    }
  }
  if (tau_hi < 0) return std::nullopt;

  long tau_lo = tau_hi / 2;  // residual > eps here
  Eigen::MatrixXd pow = squares[squares.size() - 2];
  for (long t = tau_lo + 1; t <= tau_hi; ++t) {
    pow = pow * r.entries;
    if (mixing_residual(pow, pf) <= eps) return t;
  }
  return tau_hi;  // squaring roundoff vs the incremental product; trust the bracket
}

MixReport mixing_bounds(const NonnegMatrix& r, const PFData& pf, double eps, long tau_max) {
  MixReport rep;
  rep.eps = eps;
  const Eigen::Index n = r.n();
  const double kappa = pf.kappa;

  rep.tau = mixing_time(r, pf, eps, tau_max);

  auto [a, w] = balance(r, pf);
  PFData pf_a = pf_data(a);
  SpectralSummary spec = spectral_summary(a, w);

  double phi;
  if (n <= 24) {
    rep.phi = phi = phi_exact(r, pf).phi;
    rep.phi_is_exact = true;
  } else {
    rep.phi = phi = std::max(0.0, (1.0 - spec.sigma2) / 2.0);  // certified lower end
    rep.phi_is_exact = false;
  }

  const double gap = 1.0 - spec.lambda2.real();
  const double log_nke = std::log(double(n) / (kappa * eps));
  if (phi > 0) {
    rep.lower_phi = (0.5 - eps) / phi;
    rep.upper_phi = 4.0 * log_nke / (phi * phi);
  } else {
    rep.lower_phi = rep.upper_phi = std::numeric_limits<double>::infinity();
  }
  rep.lower_lambda = gap > 0 ? (0.5 - eps) / std::sqrt(2.0 * gap)
                             : std::numeric_limits<double>::infinity();
  rep.upper_lambda = gap > 0 ? 20.0 * (double(n) + std::log(1.0 / (kappa * eps))) / gap
                             : std::numeric_limits<double>::infinity();

  const double log_sqrt = std::log(std::sqrt(double(n)) / (std::sqrt(kappa) * eps));
  for (int c : {1, 2}) {
    double denom = 1.0 - std::pow(spec.sigma2, c);
    double value =
        denom > 0 ? double(c) * log_sqrt / denom : std::numeric_limits<double>::infinity();
    (c == 1 ? rep.upper_sigma_c1 : rep.upper_sigma_c2) = value;
  }

  rep.tau_balanced = mixing_time(a, pf_a, eps, tau_max);
  NonnegMatrix m = additive_symmetrize(a);
  PFData pf_m = pf_data(m);
  rep.tau_sym = mixing_time(m, pf_m, eps, tau_max);
  if (rep.tau_sym) {
    double tm = double(*rep.tau_sym);
    rep.sym_lower = (1.0 - 2.0 * eps) / (4.0 * std::sqrt(log_nke)) * std::sqrt(tm);
    rep.sym_upper = 2.0 * log_nke / std::log(1.0 / eps) * tm;
  }
  return rep;
}

Eigen::MatrixXd matrix_exponential(const Eigen::MatrixXd& m, double t, double tol) {
  const Eigen::Index n = m.rows();
  if (t < 0) throw DomainError("time must be nonnegative");
  if (t == 0.0) return Eigen::MatrixXd::Identity(n, n);

  // exp(t(M - I)) = e^{-t} exp(tM); scaling and squaring on exp(tM).
  Eigen::MatrixXd tm = t * m;
  double norm = tm.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  Eigen::MatrixXd x = tm / std::pow(2.0, squarings);
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int i = 1; i <= 60; ++i) {
    term = (term * x) / double(i);
    result += term;
    if (term.cwiseAbs().maxCoeff() < tol) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  result *= std::exp(-t);
  // Entries of exp(t(M-I)) are nonnegative for nonnegative M; clamp roundoff.
  if (result.minCoeff() < -1e-10) throw NumericError("matrix exponential lost nonnegativity");
  result = result.cwiseMax(0.0);
  return result;
}

std::optional<double> continuous_mixing_time(const NonnegMatrix& r, const PFData& pf, double eps,
                                             double t_max) {
  if (!(eps > 0.0 && eps < 0.5)) throw DomainError("eps must lie in (0, 1/2)");
  auto residual_at = [&](double t) {
    return mixing_residual(matrix_exponential(r.entries, t, 1e-14), pf);
  };
  double hi = 1.0;
  while (residual_at(hi) > eps) {
    hi *= 2.0;
    if (hi > t_max) return std::nullopt;
  }
  double lo = hi > 1.0 ? hi / 2.0 : 0.0;
  while (hi - lo > 1e-3 * hi) {
    double mid = 0.5 * (lo + hi);
    if (residual_at(mid) <= eps)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

PathEnsemble bfs_path_ensemble(const NonnegMatrix& m) {
  const Eigen::Index n = m.n();
  PathEnsemble ensemble;
  for (Eigen::Index src = 0; src < n; ++src) {
    std::vector<Eigen::Index> parent(static_cast<std::size_t>(n), -1);
    std::deque<Eigen::Index> queue{src};
    parent[static_cast<std::size_t>(src)] = src;
    while (!queue.empty()) {
      Eigen::Index x = queue.front();
      queue.pop_front();
      for (Eigen::Index y = 0; y < n; ++y) {  // lexicographic neighbor order
        if (m.entries(x, y) > 0.0 && parent[static_cast<std::size_t>(y)] == -1) {
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    for (Eigen::Index dst = 0; dst < n; ++dst) {
      if (dst == src) continue;
      if (parent[static_cast<std::size_t>(dst)] == -1) continue;  // unreachable: omitted
      std::vector<std::pair<Eigen::Index, Eigen::Index>> edges;
      for (Eigen::Index at = dst; at != src; at = parent[static_cast<std::size_t>(at)])
        edges.emplace_back(parent[static_cast<std::size_t>(at)], at);
      std::reverse(edges.begin(), edges.end());
      ensemble.paths[{src, dst}] = std::move(edges);
    }
  }
  return ensemble;
}

CanonicalPathsResult canonical_paths_bound(const NonnegMatrix& m, const PathEnsemble* w,
                                           double eps) {
  const Eigen::Index n = m.n();
  if ((m.entries - m.entries.transpose()).cwiseAbs().maxCoeff() > 1e-8)
    throw DomainError("canonical paths bound needs a symmetric matrix");

  PathEnsemble def;
  if (w == nullptr) {
    def = bfs_path_ensemble(m);
    w = &def;
  }

  CanonicalPathsResult out;
  const std::size_t expected_pairs = static_cast<std::size_t>(n) * (n - 1);
  if (w->paths.size() < expected_pairs) {
    out.rho = std::numeric_limits<double>::infinity();
    out.gap_lower = 0.0;
    out.tau_upper = out.tau_upper_singular = std::numeric_limits<double>::infinity();
    return out;
  }

  Eigen::MatrixXd load = Eigen::MatrixXd::Zero(n, n);  // sum of |gamma| per edge
  for (const auto& [pair, edges] : w->paths) {
    const double len = double(edges.size());
    for (const auto& [x, y] : edges) {
      if (m.entries(x, y) <= 0.0) {
        out.rho = std::numeric_limits<double>::infinity();
        out.gap_lower = 0.0;
        out.tau_upper = out.tau_upper_singular = std::numeric_limits<double>::infinity();
        return out;
      }
      load(x, y) += len;
    }
  }
  double rho = 0.0;
  for (Eigen::Index x = 0; x < n; ++x)
    for (Eigen::Index y = 0; y < n; ++y)
      if (load(x, y) > 0.0) rho = std::max(rho, load(x, y) / (double(n) * m.entries(x, y)));
  out.rho = rho;
  out.gap_lower = rho > 0 ? 1.0 / rho : std::numeric_limits<double>::infinity();
  out.tau_upper = rho * std::log(double(n) / eps);
  out.tau_upper_singular = 2.0 * rho * std::log(double(n) / eps);
  return out;
}

}  // namespace specgap
