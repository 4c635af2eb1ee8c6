#include "specgap/bounds.hpp"

#include "specgap/construction.hpp"

#include <cmath>

namespace specgap {

namespace {

constexpr double kSlack = 1e-9;

double slack_for(double lhs, double rhs) {
  return kSlack * std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

BoundRecord make_record(double lhs, double rhs) {
  BoundRecord rec;
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.margin = rhs - lhs;
  rec.status = rec.margin >= -slack_for(lhs, rhs) ? BoundStatus::Pass : BoundStatus::Fail;
  return rec;
}

// lower <= phi, with phi known only inside [phi_lo, phi_hi].
BoundRecord lower_vs_phi(double lower, double phi_lo, double phi_hi, bool exact) {
  if (exact) return make_record(lower, phi_lo);
  BoundRecord rec = make_record(lower, phi_lo);
  if (rec.status == BoundStatus::Pass) return rec;
  // Not provable from the bracket; only a failure against the upper end is
  // an actual violation.
  BoundRecord hi = make_record(lower, phi_hi);
  if (hi.status == BoundStatus::Fail) return hi;
  rec.status = BoundStatus::Indeterminate;
  return rec;
}

// phi <= upper, with phi bracketed.
BoundRecord phi_vs_upper(double upper, double phi_lo, double phi_hi, bool exact) {
  if (exact) return make_record(phi_lo, upper);
  BoundRecord rec = make_record(phi_hi, upper);
  if (rec.status == BoundStatus::Pass) return rec;
  BoundRecord lo = make_record(phi_lo, upper);
  if (lo.status == BoundStatus::Fail) return lo;
  rec.status = BoundStatus::Indeterminate;
  return rec;
}

}  // namespace

bool BoundReport::all_pass() const {
  for (const auto& [name, rec] : records)
    if (rec.status == BoundStatus::Fail) return false;
  return true;
}

BoundReport bound_report(const NonnegMatrix& r_in, int n_limit) {
  BoundReport rep;
  rep.n = r_in.n();
  const auto n = rep.n;

  PFData pf0 = pf_data(r_in);
  rep.degenerate = pf0.classification == PFClassification::ReducibleDegenerate;

  if (rep.degenerate) {
    // phi = 0 by definition; kappa undefined, so only the upper bound
    // applies. We still need the spectrum, via plain Schur on the raw matrix.
    rep.phi_lo = rep.phi_hi = 0.0;
    rep.phi_exact_known = true;
    SchurFactors sf = schur_decompose(r_in);
    double max_re = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i)
      max_re = std::max(max_re, sf.t(i, i).real());
    // For a matrix with multiple components at the PF value, lambda2 = r; the
    // Fiedler upper bound is evaluated after unit scaling when r > 0.
    double scale = pf0.r > 0 ? pf0.r : 1.0;
    rep.re_lambda2 = max_re / scale;
    rep.records["fiedler_upper"] =
        make_record(0.0, std::sqrt(std::max(0.0, 2.0 * (1.0 - rep.re_lambda2))));
    return rep;
  }

  if (pf0.r <= 0) throw DegeneratePFError("PF eigenvalue is zero");
  NonnegMatrix r = scale_to_unit_pf(r_in, pf0);
  PFData pf = pf_data(r);  // kappa is exactly 1/n for doubly stochastic inputs
  rep.kappa = pf.kappa;

  auto [a, w] = balance(r, pf);
  SpectralSummary spec = spectral_summary(a, w);
  rep.re_lambda2 = spec.lambda2.real();
  rep.mod_lambda_m = std::abs(spec.lambda_m);
  rep.sigma2 = spec.sigma2;

  if (n <= n_limit && n <= 63) {
    ExpansionResult ex = phi_exact(r, pf, n_limit);
    rep.phi_lo = rep.phi_hi = ex.phi;
    rep.phi_exact_known = true;
  } else {
    rep.phi_lo = std::max(0.0, (1.0 - spec.sigma2) / 2.0);
    double best_single = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i)
      best_single = std::min(best_single, phi_cut(r, pf, 1ull << i));
    rep.phi_hi = best_single;
    rep.phi_exact_known = false;
  }

  const double gap = 1.0 - rep.re_lambda2;
  const double denom = double(n) + std::log(1.0 / rep.kappa);
  const bool exact = rep.phi_exact_known;

  rep.records["fiedler_upper"] =
      phi_vs_upper(std::sqrt(std::max(0.0, 2.0 * gap)), rep.phi_lo, rep.phi_hi, exact);
  rep.records["general_lower"] = lower_vs_phi(gap / (30.0 * denom), rep.phi_lo, rep.phi_hi, exact);
  rep.records["modulus_lower"] = lower_vs_phi((1.0 - rep.mod_lambda_m) / (20.0 * denom),
                                              rep.phi_lo, rep.phi_hi, exact);
  rep.records["sigma_lower"] =
      lower_vs_phi((1.0 - rep.sigma2) / 2.0, rep.phi_lo, rep.phi_hi, exact);
  for (int c = 2; c <= 4; ++c) {
    rep.records["sigma_lower_c" + std::to_string(c)] = lower_vs_phi(
        (1.0 - std::pow(rep.sigma2, c)) / (2.0 * c), rep.phi_lo, rep.phi_hi, exact);
  }

  NonnegMatrix mtx = r;
  ValidationReport val = validate(mtx, &pf, 1e-12);
  if (val.doubly_stochastic_ok) {
    rep.records["ds_lower_35n"] =
        lower_vs_phi(gap / (35.0 * double(n)), rep.phi_lo, rep.phi_hi, exact);
  }

  // Symmetrization sandwich on the balanced form (w is both left and right
  // eigenvector of A, hence of M too).
  NonnegMatrix m_sym = additive_symmetrize(a);
  SpectralSummary spec_sym = spectral_summary(m_sym, w);
  rep.lambda2_sym = spec_sym.lambda2.real();
  rep.records["sym_sandwich_lo"] =
      make_record(std::pow(gap / denom, 2) / 1800.0, 1.0 - rep.lambda2_sym);
  rep.records["sym_sandwich_hi"] = make_record(1.0 - rep.lambda2_sym, gap);

  if (val.detailed_balance_dev && *val.detailed_balance_dev <= 1e-10) {
    // Detailed balance forces a real spectrum; Cheeger applies two-sided.
    double l2 = rep.re_lambda2;
    rep.records["detailed_balance_cheeger_lo"] =
        lower_vs_phi((1.0 - l2) / 2.0, rep.phi_lo, rep.phi_hi, exact);
    rep.records["detailed_balance_cheeger_hi"] = phi_vs_upper(
        std::sqrt(std::max(0.0, 2.0 * (1.0 - l2))), rep.phi_lo, rep.phi_hi, exact);
  }
  return rep;
}

GammaRecord gamma_witness(Eigen::Index n) {
  GammaRecord rec;
  rec.n = n;
  rec.inv_sqrt_n = 1.0 / std::sqrt(double(n));
  rec.gamma_lower_bound = 1.0 / (35.0 * double(n));

  NonnegMatrix a = rogue_matrix(n);
  // The nontrivial spectrum is read off the triangular witness: the matrix is
  // defective, so dense QR smears its zero eigenvalues by eps^(1/n) and cannot
  // certify the gap. The witness diagonal is {1, 0, ..., 0}.
  SchurWitness w = schur_witness(n);
  double residual = (w.u * w.t * w.u.transpose() - a.entries).cwiseAbs().maxCoeff();
  if (residual > 1e-10) throw NumericError("triangular witness residual too large");
  double lambda2 = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 1; i < n; ++i) lambda2 = std::max(lambda2, w.t(i, i));
  double gap = 1.0 - lambda2;

  double phi;
  if (n <= 16) {
    phi = phi_exact(a, pf_data(a)).phi;
  } else {
    // b_n upper-bounds phi via the single cut holding the first vertex.
    phi = construction_coefficients(n, ArithmeticMode::Float64).b;
  }
  rec.gamma_upper_witness = phi / gap;
  return rec;
}

std::pair<double, double> submultiplicativity_check(const NonnegMatrix& r, const PFData& pf,
                                                    int k) {
  if (k < 1) throw DomainError("power must be >= 1");
  NonnegMatrix rk = r;
  Eigen::MatrixXd pow = r.entries;
  for (int i = 1; i < k; ++i) pow = pow * r.entries;
  rk.entries = pow;
  rk.exact.reset();
  // R^k has the same eigenvector pair as R.
  double phi_k = phi_exact(rk, pf).phi;
  double phi_1 = phi_exact(r, pf).phi;
  return {phi_k, double(k) * phi_1};
}

double perturbation_gap_bound(double delta, Eigen::Index n, double kappa) {
  if (delta < 0) throw DomainError("delta must be nonnegative");
  if (!(kappa > 0 && kappa <= 1)) throw DomainError("kappa must lie in (0, 1]");
  return 30.0 * delta * (double(n) + std::log(1.0 / kappa));
}

}  // namespace specgap
