#include "specgap/verify.hpp"

#include "specgap/bounds.hpp"
#include "specgap/construction.hpp"
#include "specgap/expansion.hpp"
#include "specgap/matrix.hpp"
#include "specgap/mixing.hpp"
#include "specgap/pf.hpp"
#include "specgap/spectral.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace specgap {

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << what;
    }
  }
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

std::vector<NonnegMatrix> seeded_fixture_set(int count) {
  // Random doubly stochastic matrices with n in [3, 16], seeds fixed.
  std::vector<NonnegMatrix> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    Eigen::Index n = 3 + (i % 14);
    out.push_back(random_doubly_stochastic(n, 1000 + std::uint64_t(i)));
  }
  return out;
}

NonnegMatrix matrix_power(const NonnegMatrix& a, int k) {
  NonnegMatrix out = a;
  Eigen::MatrixXd pow = a.entries;
  for (int i = 1; i < k; ++i) pow = pow * a.entries;
  out.entries = pow;
  out.exact.reset();
  return out;
}

// Criterion 1: exact double stochasticity, unitarity, and Schur identity.
CriterionResult construction_exactness(const std::vector<Eigen::Index>& sizes) {
  Check c;
  for (Eigen::Index n : sizes) {
    NonnegMatrix a = rogue_matrix(n, ArithmeticMode::ExactRational);
    const RationalMatrix& aq = *a.exact;
    const std::size_t un = aq.size();
    for (std::size_t i = 0; i < un; ++i) {
      Rational row = 0, col = 0;
      for (std::size_t j = 0; j < un; ++j) {
        c.require(aq(i, j) >= 0, "negative entry at n=" + std::to_string(n));
        row += aq(i, j);
        col += aq(j, i);
      }
      c.require(row == 1 && col == 1, "row/col sum != 1 at n=" + std::to_string(n));
    }
    SchurWitness sw = schur_witness(n, ArithmeticMode::ExactRational);
    c.require(*sw.u_exact * sw.u_exact->transpose() == RationalMatrix::identity(un),
              "U not exactly unitary at n=" + std::to_string(n));
    c.require(*sw.u_exact * *sw.t_exact * sw.u_exact->transpose() == aq,
              "A != U T U* at n=" + std::to_string(n));
  }
  return {1, "construction_exactness", c.ok, c.detail.str()};
}

// Criterion 2: every nontrivial eigenvalue of A_n is 0. The matrix is
// defective (the nontrivial block is nilpotent), so any backward-stable dense
// eigensolver smears the zeros by eps^(1/n), far above the tolerance. The
// eigenvalues are therefore read off the float triangularization A = U T U^T
// after verifying it to 1e-10; its diagonal is {1, 0, ..., 0}.
CriterionResult zero_spectrum(const std::vector<Eigen::Index>& sizes) {
  Check c;
  for (Eigen::Index n : sizes) {
    NonnegMatrix a = rogue_matrix(n);
    SchurWitness w = schur_witness(n);
    double unitary_res =
        (w.u * w.u.transpose() - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff();
    double schur_res = (w.u * w.t * w.u.transpose() - a.entries).cwiseAbs().maxCoeff();
    c.require(unitary_res <= 1e-10,
              "n=" + std::to_string(n) + " unitary residual " + fmt(unitary_res));
    c.require(schur_res <= 1e-10,
              "n=" + std::to_string(n) + " triangularization residual " + fmt(schur_res));
    double max_mod = 0.0;
    for (Eigen::Index i = 1; i < n; ++i) max_mod = std::max(max_mod, std::abs(w.t(i, i)));
    c.require(max_mod <= 1e-7,
              "n=" + std::to_string(n) + " max nontrivial modulus " + fmt(max_mod));
  }
  return {2, "zero_spectrum", c.ok, c.detail.str()};
}

// Criterion 3: singular values {1, r_n x (n-2), 0}.
CriterionResult singular_values(const std::vector<Eigen::Index>& sizes) {
  Check c;
  for (Eigen::Index n : sizes) {
    NonnegMatrix a = rogue_matrix(n);
    double rn = construction_coefficients(n, ArithmeticMode::Float64).r;
    Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(a.entries).singularValues();
    bool ok = std::abs(sv(0) - 1.0) <= 1e-8 && std::abs(sv(n - 1)) <= 1e-8;
    for (Eigen::Index i = 1; i + 1 < n; ++i) ok = ok && std::abs(sv(i) - rn) <= 1e-8;
    c.require(ok, "n=" + std::to_string(n) + " singular values off");
  }
  return {3, "singular_values", c.ok, c.detail.str()};
}

// Criterion 4: phi(A_n) in [1/(6 sqrt n), 1/sqrt n]; certified bracket for
// larger n.
CriterionResult expansion_bracket(const std::vector<Eigen::Index>& small,
                                  const std::vector<Eigen::Index>& large) {
  Check c;
  constexpr double tol = 1e-10;
  for (Eigen::Index n : small) {
    NonnegMatrix a = rogue_matrix(n);
    PFData pf = pf_data(a);
    double phi = phi_exact(a, pf).phi;
    double lo = 1.0 / (6.0 * std::sqrt(double(n))), hi = 1.0 / std::sqrt(double(n));
    c.require(phi >= lo - tol && phi <= hi + tol,
              "n=" + std::to_string(n) + " phi=" + fmt(phi) + " outside bracket");
  }
  for (Eigen::Index n : large) {
    NonnegMatrix a = rogue_matrix(n);
    PFData pf = pf_data(a);
    SpectralSummary spec = spectral_summary(a, pf.w);
    double lo = (1.0 - spec.sigma2) / 2.0;
    double hi = construction_coefficients(n, ArithmeticMode::Float64).b;
    double target_lo = 1.0 / (6.0 * std::sqrt(double(n)));
    double target_hi = 1.0 / std::sqrt(double(n));
    c.require(lo >= target_lo - tol, "n=" + std::to_string(n) + " certified lower end " +
                                         fmt(lo) + " < " + fmt(target_lo));
    c.require(hi < target_hi, "n=" + std::to_string(n) + " b_n not below 1/sqrt(n)");
    c.require(lo <= hi + tol, "n=" + std::to_string(n) + " empty bracket");
  }
  return {4, "expansion_bracket", c.ok, c.detail.str()};
}

// Criterion 5: Gamma witness between 1/(35n) and 1/sqrt(n).
CriterionResult gamma_witness_table(const std::vector<Eigen::Index>& sizes) {
  Check c;
  for (Eigen::Index n : sizes) {
    GammaRecord rec = gamma_witness(n);
    c.require(rec.gamma_upper_witness <= rec.inv_sqrt_n + 1e-9,
              "n=" + std::to_string(n) + " witness " + fmt(rec.gamma_upper_witness) +
                  " above 1/sqrt(n)");
    // The lower end of the ratio: certified phi lower bound over the gap,
    // which is 1 (zero nontrivial spectrum, via the witness inside
    // gamma_witness).
    NonnegMatrix a = rogue_matrix(n);
    PFData pf = pf_data(a);
    SpectralSummary spec = spectral_summary(a, pf.w);
    double phi_lo =
        n <= 16 ? phi_exact(a, pf).phi : (1.0 - spec.sigma2) / 2.0;
    double ratio_lo = phi_lo / 1.0;
    c.require(ratio_lo >= rec.gamma_lower_bound - 1e-9,
              "n=" + std::to_string(n) + " witness below 1/(35n)");
  }
  return {5, "gamma_witness_table", c.ok, c.detail.str()};
}

// Criterion 6: the O(1/sqrt n) perturbation flips lambda2 to 1.
CriterionResult perturbation_sensitivity(const std::vector<Eigen::Index>& sizes) {
  Check c;
  for (Eigen::Index n : sizes) {
    NonnegMatrix a = perturbed_rogue(n);
    NonnegMatrix orig = rogue_matrix(n);
    double moved = (a.entries - orig.entries).cwiseAbs().sum() / 2.0;
    double bn = construction_coefficients(n, ArithmeticMode::Float64).b;
    c.require(std::abs(moved - 2.0 * bn) <= 1e-12,
              "n=" + std::to_string(n) + " moved mass " + fmt(moved) + " != 2 b_n");
    c.require(moved < 2.0 / std::sqrt(double(n)), "n=" + std::to_string(n) + " mass too large");
    Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    SpectralSummary spec = spectral_summary(a, w);
    c.require(std::abs(spec.lambda2 - std::complex<double>(1.0, 0.0)) <= 1e-9,
              "n=" + std::to_string(n) + " lambda2 did not flip to 1");
  }
  return {6, "perturbation_sensitivity", c.ok, c.detail.str()};
}

// Criterion 7: every inequality record passes on the seeded fixture suite
// and its lazy versions, squares, and symmetrizations.
CriterionResult inequality_suite(int count) {
  Check c;
  auto base = seeded_fixture_set(count);
  int idx = 0;
  for (const auto& m : base) {
    std::vector<NonnegMatrix> variants;
    variants.push_back(m);
    variants.push_back(lazify(m, 0.5));
    variants.push_back(matrix_power(m, 2));
    variants.push_back(additive_symmetrize(m));
    int vidx = 0;
    for (const auto& v : variants) {
      BoundReport rep = bound_report(v);
      for (const auto& [name, rec] : rep.records) {
        c.require(rec.status != BoundStatus::Fail,
                  "fixture " + std::to_string(idx) + "/" + std::to_string(vidx) + " record " +
                      name + " margin " + fmt(rec.margin));
      }
      ++vidx;
    }
    ++idx;
  }
  return {7, "inequality_suite", c.ok, c.detail.str()};
}

// Criterion 8: phi(R^k) <= k phi(R).
CriterionResult submultiplicativity(int count) {
  Check c;
  auto base = seeded_fixture_set(count);
  int idx = 0;
  for (const auto& m : base) {
    PFData pf = pf_data(m);
    for (int k : {2, 3, 4}) {
      auto [phi_k, k_phi] = submultiplicativity_check(m, pf, k);
      c.require(phi_k <= k_phi + 1e-10, "fixture " + std::to_string(idx) + " k=" +
                                            std::to_string(k) + ": " + fmt(phi_k) + " > " +
                                            fmt(k_phi));
    }
    ++idx;
  }
  return {8, "submultiplicativity", c.ok, c.detail.str()};
}

// Criterion 9: triangular norm bounds.
CriterionResult triangular_bounds(int count) {
  Check c;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const double alphas[] = {0.0, 0.3, 0.7};
  for (int trial = 0; trial < count; ++trial) {
    const int n = 2 + int(rng() % 7);  // 2..8
    const double alpha = alphas[trial % 3];
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) t(i, j) = unif(rng);
      t(i, i) = alpha * unif(rng);
    }
    double norm = operator_norm(t);
    if (norm > 1.0) t /= norm;  // keeps |T_ii| <= alpha

    Eigen::MatrixXd pow = Eigen::MatrixXd::Identity(n, n);
    std::vector<double> pow_norms(51, 0.0);
    for (int k = 1; k <= 50; ++k) {
      pow = pow * t;
      pow_norms[std::size_t(k)] = operator_norm(pow);
      double bound = triangular_power_bound(n, 1.0, alpha, k);
      c.require(pow_norms[std::size_t(k)] <= bound + 1e-12,
                "trial " + std::to_string(trial) + " k=" + std::to_string(k) + ": norm " +
                    fmt(pow_norms[std::size_t(k)]) + " > bound " + fmt(bound));
    }
    for (double eps : {0.1, 0.01}) {
      long k = triangular_mix_power(n, alpha, eps);
      double norm_k;
      if (k <= 50) {
        norm_k = pow_norms[std::size_t(k)];
      } else {
        Eigen::MatrixXd pk = Eigen::MatrixXd::Identity(n, n);
        Eigen::MatrixXd sq = t;
        long rem = k;
        while (rem > 0) {
          if (rem & 1) pk = pk * sq;
          sq = sq * sq;
          rem >>= 1;
        }
        norm_k = operator_norm(pk);
      }
      c.require(norm_k <= eps, "trial " + std::to_string(trial) + " eps=" + fmt(eps) +
                                   ": ||T^k|| = " + fmt(norm_k) + " at k=" + std::to_string(k));
    }
  }
  return {9, "triangular_bounds", c.ok, c.detail.str()};
}

// Criterion 10: mixing-time sandwiches on half-lazy irreducible fixtures.
CriterionResult mixing_sandwiches(bool quick) {
  Check c;
  const double eps = 0.25;
  std::vector<std::pair<std::string, NonnegMatrix>> fixtures;
  fixtures.emplace_back("lazy_cycle8", lazify(named_matrix(NamedKind::DirectedCycle, 8), 0.5));
  fixtures.emplace_back("lazy_J4", lazify(named_matrix(NamedKind::UniformJ, 4), 0.5));
  fixtures.emplace_back("lazy_rogue9", lazify(rogue_matrix(9), 0.5));
  std::vector<Eigen::Index> sizes = quick ? std::vector<Eigen::Index>{5, 10}
                                          : std::vector<Eigen::Index>{3, 5, 8, 10, 12};
  for (Eigen::Index n : sizes)
    fixtures.emplace_back("lazy_rand" + std::to_string(n),
                          lazify(random_doubly_stochastic(n, 77 + std::uint64_t(n)), 0.5));
  {
    // A genuinely non-doubly-stochastic fixture: diagonal similarity of a
    // random walk keeps PF eigenvalue 1 with u != v.
    NonnegMatrix base = lazify(random_doubly_stochastic(6, 99), 0.5);
    Eigen::VectorXd d(6);
    d << 1.0, 2.0, 0.5, 1.5, 0.8, 1.2;
    NonnegMatrix skewed = NonnegMatrix::from_dense(
        (d.asDiagonal().inverse() * base.entries * d.asDiagonal()).eval());
    fixtures.emplace_back("lazy_skewed6", skewed);
  }

  for (const auto& [name, m] : fixtures) {
    PFData pf = pf_data(m);
    MixReport rep = mixing_bounds(m, pf, eps);
    c.require(rep.tau.has_value(), name + ": divergence");
    if (!rep.tau) continue;
    double tau = double(*rep.tau);
    c.require(std::ceil(rep.lower_phi) <= tau + 1e-9, name + ": phi lower bound fails");
    c.require(tau <= rep.upper_phi + 1e-9, name + ": phi upper bound fails");
    c.require(std::ceil(rep.lower_lambda) <= tau + 1e-9, name + ": lambda lower bound fails");
    c.require(tau <= rep.upper_lambda + 1e-9, name + ": lambda upper bound fails");
    c.require(rep.tau_balanced.has_value(), name + ": balanced divergence");
    double tau_a = double(*rep.tau_balanced);
    c.require(tau_a <= rep.upper_sigma_c1 + 1e-9, name + ": sigma c=1 bound fails");
    c.require(tau_a <= rep.upper_sigma_c2 + 1e-9, name + ": sigma c=2 bound fails");
    c.require(rep.sym_lower && *rep.sym_lower <= tau_a + 1e-9,
              name + ": symmetrization lower fails");
    c.require(rep.sym_upper && tau_a <= *rep.sym_upper + 1e-9,
              name + ": symmetrization upper fails");
  }
  return {10, "mixing_sandwiches", c.ok, c.detail.str()};
}

// Criterion 11: tau(lazify(A_n)) scales as sqrt(n) log n; canonical paths on
// A_n A_n^T give congestion O(sqrt n).
CriterionResult construction_mixing_scaling(bool quick) {
  Check c;
  const double eps = 0.25;
  std::vector<Eigen::Index> sizes =
      quick ? std::vector<Eigen::Index>{16, 64} : std::vector<Eigen::Index>{16, 64, 256};
  std::vector<double> cs, ds;
  for (Eigen::Index n : sizes) {
    NonnegMatrix lazy = lazify(rogue_matrix(n), 0.5);
    PFData pf = pf_data(lazy);
    auto tau = mixing_time(lazy, pf, eps);
    c.require(tau.has_value(), "n=" + std::to_string(n) + " diverged");
    if (!tau) continue;
    cs.push_back(double(*tau) / (std::sqrt(double(n)) * std::log(double(n))));

    NonnegMatrix a = rogue_matrix(n);
    NonnegMatrix aat = NonnegMatrix::from_dense((a.entries * a.entries.transpose()).eval());
    CanonicalPathsResult cp = canonical_paths_bound(aat, nullptr, eps);
    c.require(std::isfinite(cp.rho), "n=" + std::to_string(n) + " infinite congestion");
    ds.push_back(cp.rho / std::sqrt(double(n)));

    // Corollary check: tau(A) <= 2 rho(AA^T) ln(n/eps). A_n is not lazy, so
    // use the lazy walk's tau against the lazy walk's own congestion route;
    // the direct non-lazy matrix also mixes (its powers contract), so check
    // the non-lazy tau as well.
    PFData pf_a = pf_data(a);
    auto tau_a = mixing_time(a, pf_a, eps);
    c.require(tau_a.has_value() && double(*tau_a) <= cp.tau_upper_singular + 1e-9,
              "n=" + std::to_string(n) + " canonical-paths bound fails");
  }
  auto stable = [&](const std::vector<double>& xs, const std::string& what) {
    double fitted = 0.0;
    for (double x : xs) fitted += x;
    fitted /= double(xs.size());
    for (double x : xs)
      c.require(x >= fitted / 1.5 - 1e-12 && x <= 1.5 * fitted + 1e-12,
                what + " unstable: " + fmt(x) + " vs fitted " + fmt(fitted));
  };
  stable(cs, "tau / (sqrt n log n)");
  stable(ds, "rho / sqrt n");
  return {11, "construction_mixing_scaling", c.ok, c.detail.str()};
}

// Criterion 12: continuous-time sandwich, including the non-lazy cycle.
CriterionResult continuous_sandwich() {
  Check c;
  const double eps = 0.25;
  std::vector<std::pair<std::string, NonnegMatrix>> fixtures;
  fixtures.emplace_back("cycle6", named_matrix(NamedKind::DirectedCycle, 6));
  fixtures.emplace_back("J4", named_matrix(NamedKind::UniformJ, 4));
  fixtures.emplace_back("rogue9", rogue_matrix(9));
  fixtures.emplace_back("rand5", random_doubly_stochastic(5, 5));
  fixtures.emplace_back("rand10", random_doubly_stochastic(10, 10));
  for (const auto& [name, m] : fixtures) {
    PFData pf = pf_data(m);
    double phi = phi_exact(m, pf).phi;
    auto t = continuous_mixing_time(m, pf, eps);
    c.require(t.has_value(), name + ": divergence");
    if (!t) continue;
    double lower = (0.5 - eps) / phi;
    double upper = 100.0 * std::log(double(m.n()) / (pf.kappa * eps)) / (phi * phi);
    c.require(*t >= lower - 1e-9, name + ": t below (1/2-eps)/phi");
    c.require(*t <= upper + 1e-9, name + ": t above 100 ln(n/(kappa eps))/phi^2");
  }
  return {12, "continuous_sandwich", c.ok, c.detail.str()};
}

// Criterion 13: de Bruijn and Klawe-Vazirani spectra.
CriterionResult family_spectra(bool quick) {
  Check c;
  const int kmax = quick ? 4 : 6;
  for (int k = 1; k <= kmax; ++k) {
    NonnegMatrix a = de_bruijn(k);
    Eigen::MatrixXd pow = a.entries;
    for (int i = 1; i < k; ++i) pow = pow * a.entries;
    Eigen::MatrixXd j = Eigen::MatrixXd::Constant(a.n(), a.n(), 1.0 / double(a.n()));
    Eigen::MatrixXd dev = pow - j;
    c.require(dev.cwiseAbs().maxCoeff() <= 1e-12,
              "de_bruijn k=" + std::to_string(k) + ": A^k != J");
    // (A - J)^k = A^k - J since AJ = JA = J, so every nontrivial modulus is
    // bounded by ||A^k - J||^(1/k). The walk is dyadic, A^k - J vanishes to
    // the last bit, and the bound is 0 exactly; an eigensolver would smear the
    // defective zeros by eps^(1/k) instead.
    double max_mod =
        dev.isZero(0.0) ? 0.0 : std::pow(operator_norm(dev), 1.0 / double(k));
    c.require(max_mod <= 1e-7, "de_bruijn k=" + std::to_string(k) + " nontrivial modulus " +
                                   fmt(max_mod));
  }
  for (long p : {5L, 7L, 11L, 13L}) {
    NonnegMatrix a = klawe_vazirani(p);
    PFData pf = pf_data(a);
    SpectralSummary spec = spectral_summary(a, pf.w);
    // The Fourier-basis factorization of the characteristic polynomial,
    // x (x-1) ((2x)^{p-1} - 1) / (2x - 1), needs 2 to generate (Z/p)^*. That
    // holds for p = 5, 11, 13 but not p = 7 (2^3 = 1 mod 7), where moduli
    // 2^{-1/2} and 2^{-3/4} appear instead. The consequence actually used
    // downstream, Re lambda_2 <= 1/2, holds for all four.
    if (p != 7) {
      for (const auto& z : spec.nontrivial_eigs) {
        double mod = std::abs(z);
        c.require(std::abs(mod) <= 1e-8 || std::abs(mod - 0.5) <= 1e-8,
                  "klawe_vazirani p=" + std::to_string(p) + " modulus " + fmt(mod));
      }
    }
    c.require(spec.lambda2.real() <= 0.5 + 1e-8,
              "klawe_vazirani p=" + std::to_string(p) + " Re lambda2 " +
                  fmt(spec.lambda2.real()));
  }
  return {13, "family_spectra", c.ok, c.detail.str()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool quick) {
  const std::vector<Eigen::Index> exact_sizes =
      quick ? std::vector<Eigen::Index>{4, 9, 16} : std::vector<Eigen::Index>{4, 9, 16, 25, 49, 100};
  const int fixture_count = quick ? 40 : 200;
  const int triangular_count = quick ? 30 : 100;

  std::vector<CriterionResult> results;
  results.push_back(construction_exactness(exact_sizes));
  results.push_back(zero_spectrum(exact_sizes));
  results.push_back(singular_values(exact_sizes));
  results.push_back(expansion_bracket({4, 9, 16}, quick ? std::vector<Eigen::Index>{25}
                                                        : std::vector<Eigen::Index>{25, 49, 100}));
  results.push_back(gamma_witness_table(exact_sizes));
  results.push_back(perturbation_sensitivity(quick ? std::vector<Eigen::Index>{16}
                                                   : std::vector<Eigen::Index>{16, 100}));
  results.push_back(inequality_suite(fixture_count));
  results.push_back(submultiplicativity(fixture_count));
  results.push_back(triangular_bounds(triangular_count));
  results.push_back(mixing_sandwiches(quick));
  results.push_back(construction_mixing_scaling(quick));
  results.push_back(continuous_sandwich());
  results.push_back(family_spectra(quick));
  return results;
}

}  // namespace specgap
