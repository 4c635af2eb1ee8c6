#include "specgap/expansion.hpp"

#include <cmath>

namespace specgap {

namespace {

// sum_{i in S, j notin S} R_ij u_i v_j
double cut_flow(const Eigen::MatrixXd& r, const Eigen::VectorXd& u, const Eigen::VectorXd& v,
                std::uint64_t s) {
  const Eigen::Index n = r.rows();
  double flow = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(s >> i & 1)) continue;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (s >> j & 1) continue;
      flow += r(i, j) * u(i) * v(j);
    }
  }
  return flow;
}

}  // namespace

double phi_cut(const NonnegMatrix& r, const PFData& pf, std::uint64_t members) {
  const Eigen::Index n = r.n();
  if (n > 63) throw CapacityError("bitmask cuts support n <= 63");
  const std::uint64_t full = (n == 63) ? ~0ull : ((1ull << n) - 1);
  if (members == 0 || (members & full) == 0 || (members & full) == full)
    throw DomainError("cut must be a proper nonempty subset");
  if (pf.classification == PFClassification::ReducibleDegenerate)
    throw DegeneratePFError("no positive eigenvector pair; phi is 0 by definition");
  double weight = 0.0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (members >> i & 1) weight += pf.u(i) * pf.v(i);
  double denom = std::min(weight, 1.0 - weight);
  if (denom <= 0.0) return 0.0;
  return cut_flow(r.entries, pf.u, pf.v, members) / denom;
}

ExpansionResult phi_exact(const NonnegMatrix& r, const PFData& pf, int n_limit) {
  const Eigen::Index n = r.n();
  if (pf.classification == PFClassification::ReducibleDegenerate)
    return {0.0, std::nullopt, ExpansionMethod::DefinitionZero};
  if (n > n_limit || n > 63)
    throw CapacityError("phi enumeration capped at n = " + std::to_string(n_limit) +
                        "; use certified bounds instead");
  if (n == 1) return {0.0, std::nullopt, ExpansionMethod::DefinitionZero};

  const Eigen::MatrixXd& a = r.entries;
  Eigen::VectorXd mass = (pf.u.array() * pf.v.array()).matrix();

  // Gray-code walk over all subsets containing index 0. Incremental O(n)
  // update of the flow and weight per visited subset.
  std::uint64_t s = 1;  // current subset
  double flow = cut_flow(a, pf.u, pf.v, s);
  double weight = mass(0);

  double best_phi = std::numeric_limits<double>::infinity();
  std::uint64_t best_mask = 0;
  double best_weight = 0.0;

  const std::uint64_t full = (1ull << n) - 1;
  auto consider = [&](std::uint64_t mask, double w, double phi) {
    // Report the orientation with weight <= 1/2; at a tie both qualify and
    // the smaller bitmask wins.
    std::uint64_t cand = mask;
    double cw = w;
    std::uint64_t comp = full & ~mask;
    bool mask_ok = w <= 0.5 + 1e-15;
    bool comp_ok = (1.0 - w) <= 0.5 + 1e-15;
    if (!mask_ok || (comp_ok && comp < mask)) {
      cand = comp;
      cw = 1.0 - w;
    }
    // Tie tolerance covers the roundoff of the incremental flow updates.
    const double tie =
        std::isfinite(best_phi) ? 1e-12 * std::max(1.0, std::abs(best_phi)) : 0.0;
    if (phi < best_phi - tie || (phi <= best_phi + tie && cand < best_mask)) {
      best_phi = phi;
      best_mask = cand;
      best_weight = cw;
    }
  };

  auto phi_of = [&](double fl, double w) {
    double denom = std::min(w, 1.0 - w);
    return denom <= 0.0 ? 0.0 : fl / denom;
  };

  consider(s, weight, phi_of(flow, weight));
  const std::uint64_t count = 1ull << (n - 1);  // subsets of {1..n-1}, index 0 fixed in S
  std::uint64_t gray = 0;
  for (std::uint64_t t = 1; t < count; ++t) {
    std::uint64_t next_gray = t ^ (t >> 1);
    std::uint64_t changed = gray ^ next_gray;
    int bit = std::countr_zero(changed) + 1;  // bits 1..n-1 toggle
    gray = next_gray;
    bool adding = (next_gray >> (bit - 1)) & 1;
    const Eigen::Index kk = bit;
    if (adding) {
      // k joins S: edges k -> outside added, edges inside -> k removed.
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == kk) continue;
        if (s >> j & 1)
          flow -= a(j, kk) * pf.u(j) * pf.v(kk);
        else
          flow += a(kk, j) * pf.u(kk) * pf.v(j);
      }
      s |= 1ull << kk;
      weight += mass(kk);
    } else {
      s &= ~(1ull << kk);
      weight -= mass(kk);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == kk) continue;
        if (s >> j & 1)
          flow += a(j, kk) * pf.u(j) * pf.v(kk);
        else
          flow -= a(kk, j) * pf.u(kk) * pf.v(j);
      }
    }
    if (s == full) continue;  // not a proper cut
    consider(s, weight, phi_of(flow, weight));
  }

  ExpansionResult out;
  out.phi = std::max(0.0, best_phi);
  out.method = ExpansionMethod::BruteForce;
  Cut cut;
  cut.members = best_mask;
  cut.weight = best_weight;
  cut.phi_s = out.phi;
  out.argmin_cut = cut;
  return out;
}

double eulerian_defect(const NonnegMatrix& r, const PFData& pf) {
  Eigen::VectorXd lhs = pf.u.asDiagonal() * (r.entries * pf.v);
  Eigen::VectorXd rhs = pf.v.asDiagonal() * (r.entries.transpose() * pf.u);
  return (lhs - rhs).lpNorm<Eigen::Infinity>();
}

}  // namespace specgap
