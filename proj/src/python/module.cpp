#include "specgap/bounds.hpp"
#include "specgap/construction.hpp"
#include "specgap/expansion.hpp"
#include "specgap/io.hpp"
#include "specgap/matrix.hpp"
#include "specgap/mixing.hpp"
#include "specgap/pf.hpp"
#include "specgap/reports.hpp"
#include "specgap/spectral.hpp"
#include "specgap/verify.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace specgap;

namespace {

NonnegMatrix wrap(const Eigen::MatrixXd& a) { return NonnegMatrix::from_dense(a); }

}  // namespace

PYBIND11_MODULE(_native, m) {
  m.doc() = "edge expansion, nontrivial spectra and mixing times of nonnegative matrices";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.def("rogue", [](Eigen::Index n) { return rogue_matrix(n).entries; }, py::arg("n"),
        "doubly stochastic matrix with zero nontrivial spectrum and expansion <= 1/sqrt(n)");
  m.def("perturbed_rogue", [](Eigen::Index n) { return perturbed_rogue(n).entries; },
        py::arg("n"));
  m.def("de_bruijn", [](int k) { return de_bruijn(k).entries; }, py::arg("k"));
  m.def("klawe_vazirani", [](long p) { return klawe_vazirani(p).entries; }, py::arg("p"));
  m.def("cycle", [](Eigen::Index n) { return named_matrix(NamedKind::DirectedCycle, n).entries; },
        py::arg("n"));
  m.def("uniform", [](Eigen::Index n) { return named_matrix(NamedKind::UniformJ, n).entries; },
        py::arg("n"));
  m.def("random_doubly_stochastic",
        [](Eigen::Index n, std::uint64_t seed) { return random_doubly_stochastic(n, seed).entries; },
        py::arg("n"), py::arg("seed") = 1);

  m.def("pf_json", [](const Eigen::MatrixXd& a, double tol) {
          return to_json(pf_data(wrap(a), tol));
        }, py::arg("a"), py::arg("tol") = 1e-12);
  m.def("validate_json", [](const Eigen::MatrixXd& a, double tol) {
          NonnegMatrix r = wrap(a);
          PFData pf = pf_data(r);
          return to_json(validate(r, &pf, tol));
        }, py::arg("a"), py::arg("tol") = 1e-12);
  m.def("phi_json", [](const Eigen::MatrixXd& a, int n_limit) {
          NonnegMatrix r = wrap(a);
          return to_json(phi_exact(r, pf_data(r), n_limit));
        }, py::arg("a"), py::arg("n_limit") = 24);
  m.def("spectrum_json", [](const Eigen::MatrixXd& a) {
          NonnegMatrix r = wrap(a);
          PFData pf = pf_data(r);
          if (pf.classification == PFClassification::ReducibleDegenerate)
            throw DomainError("spectrum summary needs a positive eigenvector pair");
          NonnegMatrix scaled = scale_to_unit_pf(r, pf);
          auto [bal, w] = balance(scaled, pf_data(scaled));
          return to_json(spectral_summary(bal, w));
        }, py::arg("a"));
  m.def("bounds_json", [](const Eigen::MatrixXd& a, int n_limit) {
          return to_json(bound_report(wrap(a), n_limit));
        }, py::arg("a"), py::arg("n_limit") = 24);
  m.def("mixing_json", [](const Eigen::MatrixXd& a, double eps, long tau_max) {
          NonnegMatrix r = wrap(a);
          PFData pf = pf_data(r);
          if (pf.classification == PFClassification::ReducibleDegenerate)
            throw DomainError("mixing analysis needs a positive eigenvector pair");
          return to_json(mixing_bounds(r, pf, eps, tau_max));
        }, py::arg("a"), py::arg("eps") = 0.25, py::arg("tau_max") = 1'000'000L);
  m.def("mixing_time", [](const Eigen::MatrixXd& a, double eps, long tau_max) {
          NonnegMatrix r = wrap(a);
          return mixing_time(r, pf_data(r), eps, tau_max);
        }, py::arg("a"), py::arg("eps") = 0.25, py::arg("tau_max") = 1'000'000L);
  m.def("continuous_mixing_time", [](const Eigen::MatrixXd& a, double eps, double t_max) {
          NonnegMatrix r = wrap(a);
          return continuous_mixing_time(r, pf_data(r), eps, t_max);
        }, py::arg("a"), py::arg("eps") = 0.25, py::arg("t_max") = 1e4);
  m.def("canonical_paths", [](const Eigen::MatrixXd& a, double eps) {
          CanonicalPathsResult res = canonical_paths_bound(wrap(a), nullptr, eps);
          return py::make_tuple(res.rho, res.gap_lower, res.tau_upper, res.tau_upper_singular);
        }, py::arg("a"), py::arg("eps") = 0.25,
        "(rho, gap_lower, tau_upper, tau_upper_singular) with BFS default paths");

  m.def("gamma_csv", [](const std::vector<Eigen::Index>& sizes) {
          std::vector<GammaRecord> records;
          records.reserve(sizes.size());
          for (Eigen::Index n : sizes) records.push_back(gamma_witness(n));
          return gamma_csv(records);
        }, py::arg("sizes"));
  m.def("triangular_power_bound", &triangular_power_bound, py::arg("n"), py::arg("sigma"),
        py::arg("beta"), py::arg("k"));
  m.def("triangular_mix_power", &triangular_mix_power, py::arg("n"), py::arg("alpha"),
        py::arg("eps"));

  m.def("load_matrix", [](const std::string& path) {
          return load_matrix(path, format_from_path(path)).entries;
        }, py::arg("path"));
  m.def("save_matrix", [](const Eigen::MatrixXd& a, const std::string& path) {
          save_matrix(wrap(a), path, format_from_path(path));
        }, py::arg("a"), py::arg("path"));

  m.def("acceptance", [](bool quick) {
          std::vector<py::tuple> out;
          for (const auto& r : run_acceptance(quick))
            out.push_back(py::make_tuple(r.id, r.name, r.pass, r.detail));
          return out;
        }, py::arg("quick") = true);
}
