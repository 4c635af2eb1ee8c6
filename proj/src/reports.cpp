#include "specgap/reports.hpp"

#include <json.hpp>

#include <sstream>

namespace specgap {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json complex_pair(const std::complex<double>& z) {
  return ordered_json::array({z.real(), z.imag()});
}

const char* status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::Pass:
      return "pass";
    case BoundStatus::Fail:
      return "fail";
    case BoundStatus::Indeterminate:
      return "indeterminate";
    default:
      return "not_applicable";
  }
}

const char* classification_name(PFClassification c) {
  switch (c) {
    case PFClassification::Irreducible:
      return "irreducible";
    case PFClassification::ReducibleWithPositivePair:
      return "reducible_with_positive_pair";
    default:
      return "reducible_degenerate";
  }
}

ordered_json vector_json(const Eigen::VectorXd& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

}  // namespace

std::string to_json(const ValidationReport& rep) {
  ordered_json j;
  j["nonneg_ok"] = rep.nonneg_ok;
  j["row_sum_max_dev"] = rep.row_sum_max_dev;
  j["col_sum_max_dev"] = rep.col_sum_max_dev;
  j["doubly_stochastic_ok"] = rep.doubly_stochastic_ok;
  j["lazy_ok"] = rep.lazy_ok;
  j["symmetric_dev"] = rep.symmetric_dev;
  if (rep.detailed_balance_dev) j["detailed_balance_dev"] = *rep.detailed_balance_dev;
  return j.dump(2);
}

std::string to_json(const PFData& pf) {
  ordered_json j;
  j["r"] = pf.r;
  j["u"] = vector_json(pf.u);
  j["v"] = vector_json(pf.v);
  j["w"] = vector_json(pf.w);
  j["kappa"] = pf.kappa;
  j["normalized"] = pf.normalized;
  j["classification"] = classification_name(pf.classification);
  j["residual"] = pf.residual;
  return j.dump(2);
}

std::string to_json(const ExpansionResult& res) {
  ordered_json j;
  j["phi"] = res.phi;
  switch (res.method) {
    case ExpansionMethod::BruteForce:
      j["method"] = "brute_force";
      break;
    case ExpansionMethod::DefinitionZero:
      j["method"] = "definition_zero";
      break;
    case ExpansionMethod::SingleCut:
      j["method"] = "single_cut";
      break;
  }
  if (res.argmin_cut) {
    j["argmin_bitmask"] = res.argmin_cut->members;
    j["argmin_weight"] = res.argmin_cut->weight;
  }
  return j.dump(2);
}

std::string to_json(const SpectralSummary& spec) {
  ordered_json j;
  j["lambda2"] = complex_pair(spec.lambda2);
  j["lambda_m"] = complex_pair(spec.lambda_m);
  j["sigma2"] = spec.sigma2;
  j["spectral_gap"] = spec.spectral_gap;
  ordered_json eigs = ordered_json::array();
  for (const auto& z : spec.nontrivial_eigs) eigs.push_back(complex_pair(z));
  j["nontrivial_eigs"] = std::move(eigs);
  j["deflation_residual"] = spec.deflation_residual;
  return j.dump(2);
}

std::string to_json(const BoundReport& rep) {
  ordered_json j;
  j["n"] = rep.n;
  j["kappa"] = rep.kappa;
  j["degenerate"] = rep.degenerate;
  j["phi_lo"] = rep.phi_lo;
  j["phi_hi"] = rep.phi_hi;
  j["phi_exact_known"] = rep.phi_exact_known;
  j["re_lambda2"] = rep.re_lambda2;
  j["mod_lambda_m"] = rep.mod_lambda_m;
  j["sigma2"] = rep.sigma2;
  j["lambda2_sym"] = rep.lambda2_sym;
  ordered_json records;
  for (const auto& [name, rec] : rep.records) {
    ordered_json r;
    r["lhs"] = rec.lhs;
    r["rhs"] = rec.rhs;
    r["margin"] = rec.margin;
    r["pass"] = rec.status == BoundStatus::Pass;
    r["status"] = status_name(rec.status);
    records[name] = std::move(r);
  }
  j["records"] = std::move(records);
  j["all_pass"] = rep.all_pass();
  return j.dump(2);
}

std::string to_json(const MixReport& rep) {
  ordered_json j;
  j["eps"] = rep.eps;
  auto tau_field = [](const std::optional<long>& t) -> ordered_json {
    if (t) return *t;
    return "divergence";
  };
  j["tau"] = tau_field(rep.tau);
  j["tau_balanced"] = tau_field(rep.tau_balanced);
  j["tau_sym"] = tau_field(rep.tau_sym);
  j["phi"] = rep.phi;
  j["phi_is_exact"] = rep.phi_is_exact;
  j["lower_phi"] = rep.lower_phi;
  j["upper_phi"] = rep.upper_phi;
  j["lower_lambda"] = rep.lower_lambda;
  j["upper_lambda"] = rep.upper_lambda;
  j["upper_sigma_c1"] = rep.upper_sigma_c1;
  j["upper_sigma_c2"] = rep.upper_sigma_c2;
  if (rep.sym_lower) j["sym_lower"] = *rep.sym_lower;
  if (rep.sym_upper) j["sym_upper"] = *rep.sym_upper;
  return j.dump(2);
}

std::string gamma_csv(const std::vector<GammaRecord>& records) {
  std::ostringstream out;
  out.precision(12);
  out << "n,witness,inv_sqrt_n,inv_35n\n";
  for (const auto& rec : records)
    out << rec.n << "," << rec.gamma_upper_witness << "," << rec.inv_sqrt_n << ","
        << rec.gamma_lower_bound << "\n";
  return out.str();
}

}  // namespace specgap
