#pragma once

#include "specgap/expansion.hpp"
#include "specgap/matrix.hpp"
#include "specgap/pf.hpp"
#include "specgap/spectral.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace specgap {

enum class BoundStatus { Pass, Fail, Indeterminate, NotApplicable };

/// One evaluated inequality lhs <= rhs, with margin = rhs - lhs and a slack
/// of 1e-9 scaled by max(1, |lhs|, |rhs|).
struct BoundRecord {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  BoundStatus status = BoundStatus::NotApplicable;
};

struct BoundReport {
  Eigen::Index n = 0;
  double kappa = 0.0;
  double phi_lo = 0.0;  // phi_lo == phi_hi when phi is exact
  double phi_hi = 0.0;
  bool phi_exact_known = false;
  double re_lambda2 = 0.0;
  double mod_lambda_m = 0.0;
  double sigma2 = 0.0;
  double lambda2_sym = 0.0;  // lambda_2 of (A + A^T)/2 on the balanced form
  bool degenerate = false;
  // Keys: fiedler_upper, general_lower, ds_lower_35n, modulus_lower,
  // sigma_lower, sigma_lower_c2/3/4, sym_sandwich_lo, sym_sandwich_hi,
  // detailed_balance_cheeger_lo, detailed_balance_cheeger_hi.
  std::map<std::string, BoundRecord> records;

  bool all_pass() const;
};

/// Evaluates every inequality the library certifies for R (scaled to unit PF
/// eigenvalue first). phi comes from enumeration when n <= n_limit, else from
/// the bracket [(1-sigma2)/2, best single cut]; inequalities undecidable from
/// a bracket are marked Indeterminate.
BoundReport bound_report(const NonnegMatrix& r, int n_limit = 24);

struct GammaRecord {
  Eigen::Index n = 0;
  double gamma_upper_witness = 0.0;  // phi(A_n) / (1 - Re lambda2(A_n))
  double inv_sqrt_n = 0.0;
  double gamma_lower_bound = 0.0;  // 1/(35 n)
};

GammaRecord gamma_witness(Eigen::Index n);

/// (phi(R^k), k * phi(R)); R^k keeps the same eigenvector pair.
std::pair<double, double> submultiplicativity_check(const NonnegMatrix& r, const PFData& pf,
                                                    int k);

/// Perturbation reading of the lower bound: 30 * delta * (n + ln(1/kappa)).
double perturbation_gap_bound(double delta, Eigen::Index n, double kappa);

}  // namespace specgap
