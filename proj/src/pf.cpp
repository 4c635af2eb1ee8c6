#include "specgap/pf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace specgap {

namespace {

// Tarjan, iterative. Components come out in reverse topological order.
std::vector<std::vector<Eigen::Index>> tarjan_scc(const Eigen::MatrixXd& a) {
  const Eigen::Index n = a.rows();
  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Eigen::Index> stack;
  std::vector<std::vector<Eigen::Index>> components;
  int next_index = 0;

  struct Frame {
    Eigen::Index v;
    Eigen::Index next_child;
  };
  for (Eigen::Index start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> call_stack{{start, 0}};
    index[start] = lowlink[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!call_stack.empty()) {
      Frame& f = call_stack.back();
      bool descended = false;
      while (f.next_child < n) {
        Eigen::Index w = f.next_child++;
        if (a(f.v, w) <= 0.0) continue;
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[w]) lowlink[f.v] = std::min(lowlink[f.v], index[w]);
      }
      if (descended) continue;
      if (lowlink[f.v] == index[f.v]) {
        std::vector<Eigen::Index> comp;
        Eigen::Index w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != f.v);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      Eigen::Index v = f.v;
      call_stack.pop_back();
      if (!call_stack.empty())
        lowlink[call_stack.back().v] = std::min(lowlink[call_stack.back().v], lowlink[v]);
    }
  }
  return components;
}

struct PowerResult {
  double r = 0.0;
  Eigen::VectorXd vec;
  double residual = 0.0;
};

// Power iteration on the half-lazy matrix (I+B)/2. The shift removes
// periodicity without changing eigenvectors; the PF value of B is 2l-1 for
// the limit eigenvalue l of (I+B)/2.
PowerResult pf_power(const Eigen::MatrixXd& b, double tol, int max_iters = 100000) {
  const Eigen::Index n = b.rows();
  Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
  double lambda = 0.0, residual = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd y = 0.5 * (x + b * x);
    double norm = y.norm();
    if (norm == 0.0) {
      // Nilpotent direction; PF value 0 with the uniform vector as a stand-in.
      return {0.0, Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n))),
              0.0};
    }
    y /= norm;
    lambda = 0.5 * (1.0 + y.dot(b * y));
    residual = (0.5 * (y + b * y) - lambda * y).lpNorm<Eigen::Infinity>() /
               std::max(1e-300, y.lpNorm<Eigen::Infinity>());
    x = y;
    if (residual <= tol) break;
  }
  double r = 2.0 * lambda - 1.0;
  if (std::abs(r) < 1e-14) r = 0.0;
  x = x.cwiseMax(0.0);  // the PF limit is nonnegative; clamp roundoff
  return {r, x, residual};
}

double block_pf_value(const Eigen::MatrixXd& a, const std::vector<Eigen::Index>& comp,
                      double tol) {
  const auto k = static_cast<Eigen::Index>(comp.size());
  if (k == 1) return a(comp[0], comp[0]);
  Eigen::MatrixXd block(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) block(i, j) = a(comp[i], comp[j]);
  return pf_power(block, tol).r;
}

}  // namespace

ComponentStructure strong_components(const NonnegMatrix& r) {
  ComponentStructure out;
  out.components = tarjan_scc(r.entries);
  const auto k = out.components.size();
  std::vector<int> comp_of(static_cast<std::size_t>(r.n()), 0);
  for (std::size_t c = 0; c < k; ++c)
    for (Eigen::Index v : out.components[c]) comp_of[static_cast<std::size_t>(v)] = int(c);
  for (Eigen::Index i = 0; i < r.n(); ++i) {
    for (Eigen::Index j = 0; j < r.n(); ++j) {
      if (r.entries(i, j) > 0.0 && comp_of[std::size_t(i)] != comp_of[std::size_t(j)])
        out.condensation_edges.emplace_back(comp_of[std::size_t(i)], comp_of[std::size_t(j)]);
    }
  }
  std::sort(out.condensation_edges.begin(), out.condensation_edges.end());
  out.condensation_edges.erase(
      std::unique(out.condensation_edges.begin(), out.condensation_edges.end()),
      out.condensation_edges.end());
  out.per_component_pf.reserve(k);
  for (const auto& comp : out.components)
    out.per_component_pf.push_back(block_pf_value(r.entries, comp, 1e-12));
  return out;
}

PFData pf_data(const NonnegMatrix& r, double tol) {
  if (!r.entries.allFinite()) throw ValidationError("non-finite matrix entry");
  const Eigen::Index n = r.n();
  ComponentStructure cs = strong_components(r);
  const std::size_t k = cs.components.size();
  const double r_max = *std::max_element(cs.per_component_pf.begin(), cs.per_component_pf.end());

  PFData pf;
  pf.r = r_max;

  bool all_blocks_at_max = true;
  for (double rv : cs.per_component_pf)
    if (rv < r_max - 1e-9 * std::max(1.0, r_max)) all_blocks_at_max = false;

  auto finalize_pair = [&](Eigen::VectorXd u, Eigen::VectorXd v) {
    double dot = u.dot(v);
    if (dot <= 0) throw NumericError("degenerate eigenvector inner product");
    // <u,v> = 1 and ||u|| = ||v|| fix the scalar freedom.
    double scale = std::sqrt(u.norm() / v.norm());
    u /= scale;
    v *= scale;
    double c = u.dot(v);
    u /= std::sqrt(c);
    v /= std::sqrt(c);
    pf.u = u;
    pf.v = v;
    pf.w = (u.array() * v.array()).sqrt().matrix();
    pf.kappa = (u.array() * v.array()).minCoeff();
    pf.normalized = true;
  };

  if (k == 1) {
    pf.classification = PFClassification::Irreducible;
    // Doubly stochastic shortcut: u = v = 1/sqrt(n) exactly, kappa = 1/n.
    double row_dev = (r.entries.rowwise().sum().array() - 1.0).abs().maxCoeff();
    double col_dev = (r.entries.colwise().sum().array() - 1.0).abs().maxCoeff();
    if (row_dev <= 1e-12 && col_dev <= 1e-12) {
      pf.r = 1.0;
      Eigen::VectorXd unit = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
      pf.u = pf.v = pf.w = unit;
      pf.kappa = 1.0 / double(n);
      pf.normalized = true;
      pf.residual = (r.entries * unit - unit).lpNorm<Eigen::Infinity>();
      return pf;
    }
    PowerResult right = pf_power(r.entries, tol);
    PowerResult left = pf_power(r.entries.transpose(), tol);
    pf.r = 0.5 * (right.r + left.r);
    pf.residual = std::max(right.residual, left.residual);
    if (pf.residual > 1e-8)
      throw NumericError("PF power iteration did not converge, residual " +
                         std::to_string(pf.residual));
    finalize_pair(left.vec, right.vec);
    return pf;
  }

  if (!all_blocks_at_max || !cs.condensation_edges.empty()) {
    pf.classification = PFClassification::ReducibleDegenerate;
    pf.kappa = 0.0;
    // Best-effort nonnegative pair; it has zero entries and is reported
    // unnormalized.
    PowerResult right = pf_power(r.entries, tol);
    PowerResult left = pf_power(r.entries.transpose(), tol);
    pf.u = left.vec;
    pf.v = right.vec;
    pf.w = (pf.u.array() * pf.v.array()).sqrt().matrix();
    pf.residual = std::max(right.residual, left.residual);
    return pf;
  }

  // k >= 2 isolated blocks, all with PF value r_max: positive pair exists,
  // canonical per-block normalization <u_b, v_b> = |b|/n.
  pf.classification = PFClassification::ReducibleWithPositivePair;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n), v = Eigen::VectorXd::Zero(n);
  double max_residual = 0.0;
  for (const auto& comp : cs.components) {
    const auto bsize = static_cast<Eigen::Index>(comp.size());
    Eigen::MatrixXd block(bsize, bsize);
    for (Eigen::Index i = 0; i < bsize; ++i)
      for (Eigen::Index j = 0; j < bsize; ++j) block(i, j) = r.entries(comp[i], comp[j]);
    PowerResult right = pf_power(block, tol);
    PowerResult left = pf_power(block.transpose(), tol);
    max_residual = std::max({max_residual, right.residual, left.residual});
    double dot = left.vec.dot(right.vec);
    double target = double(bsize) / double(n);
    double scale = std::sqrt(left.vec.norm() / right.vec.norm());
    Eigen::VectorXd ub = left.vec / scale, vb = right.vec * scale;
    double c = std::sqrt(dot / target);
    for (Eigen::Index i = 0; i < bsize; ++i) {
      u(comp[i]) = ub(i) / c;
      v(comp[i]) = vb(i) / c;
    }
  }
  pf.residual = max_residual;
  double dot = u.dot(v);
  pf.u = u / std::sqrt(dot);
  pf.v = v / std::sqrt(dot);
  pf.w = (pf.u.array() * pf.v.array()).sqrt().matrix();
  pf.kappa = (pf.u.array() * pf.v.array()).minCoeff();
  pf.normalized = true;
  return pf;
}

std::pair<NonnegMatrix, Eigen::VectorXd> balance(const NonnegMatrix& r, const PFData& pf) {
  if (pf.classification == PFClassification::ReducibleDegenerate)
    throw DegeneratePFError("balance needs a positive eigenvector pair");
  if (pf.u.minCoeff() <= 0.0 || pf.v.minCoeff() <= 0.0)
    throw DegeneratePFError("zero entry in PF eigenvector");
  Eigen::ArrayXd s = (pf.u.array() / pf.v.array()).sqrt();  // D_u^{1/2} D_v^{-1/2}
  Eigen::MatrixXd a =
      s.matrix().asDiagonal() * r.entries * s.inverse().matrix().asDiagonal();
  NonnegMatrix out = NonnegMatrix::from_dense(std::move(a));
  out.tags = r.tags;
  out.tags.symmetric = false;
  Eigen::VectorXd w = (pf.u.array() * pf.v.array()).sqrt().matrix();
  return {std::move(out), std::move(w)};
}

NonnegMatrix lazify(const NonnegMatrix& a, double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("laziness parameter must lie in [0,1]");
  NonnegMatrix out = a;
  out.entries = p * Eigen::MatrixXd::Identity(a.n(), a.n()) + (1.0 - p) * a.entries;
  out.exact.reset();
  out.mode = ArithmeticMode::Float64;
  if (p >= 0.5) out.tags.lazy = true;
  return out;
}

NonnegMatrix additive_symmetrize(const NonnegMatrix& a) {
  NonnegMatrix out = a;
  out.entries = 0.5 * (a.entries + a.entries.transpose());
  out.exact.reset();
  out.mode = ArithmeticMode::Float64;
  out.tags.symmetric = true;
  return out;
}

}  // namespace specgap
