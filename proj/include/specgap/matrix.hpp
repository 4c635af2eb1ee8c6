#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace specgap {

using Rational = boost::multiprecision::cpp_rational;

/// Dense square matrix over exact rationals. Used where closed forms make
/// exact certification possible (the explicit constructions).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const { return n_ == rhs.n_ && data_ == rhs.data_; }

  static RationalMatrix identity(std::size_t n);

  /// Entrywise conversion to float64.
  Eigen::MatrixXd to_double() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

enum class ArithmeticMode { Float64, ExactRational };

struct MatrixTags {
  bool doubly_stochastic = false;
  bool lazy = false;
  bool symmetric = false;
};

/// Dense square nonnegative matrix. Float entries are always present;
/// exact rational entries ride along in rational mode.
struct NonnegMatrix {
  Eigen::MatrixXd entries;
  ArithmeticMode mode = ArithmeticMode::Float64;
  std::optional<RationalMatrix> exact;
  MatrixTags tags;

  Eigen::Index n() const { return entries.rows(); }

  static NonnegMatrix from_dense(Eigen::MatrixXd m);
  static NonnegMatrix from_rational(RationalMatrix m);
};

struct ValidationReport {
  bool nonneg_ok = false;
  double row_sum_max_dev = 0.0;
  double col_sum_max_dev = 0.0;
  bool lazy_ok = false;
  double symmetric_dev = 0.0;
  std::optional<double> detailed_balance_dev;
  bool doubly_stochastic_ok = false;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PFData;  // pf.hpp

/// Validates entry nonnegativity, stochasticity, laziness and symmetry, and
/// (when a PF pair is supplied) the detailed-balance deviation
/// max |(D_u R D_v - D_v R^T D_u)_ij|. Updates the tags on `m`.
/// Throws ValidationError only for non-finite entries.
ValidationReport validate(NonnegMatrix& m, const PFData* pf = nullptr, double tol = 1e-12);

enum class NamedKind { Identity, UniformJ, DirectedCycle };

NonnegMatrix named_matrix(NamedKind kind, Eigen::Index n);

/// Seeded positive random matrix pushed to doubly stochastic by alternating
/// row/column normalization (Sinkhorn). Deterministic given (n, seed).
NonnegMatrix random_doubly_stochastic(Eigen::Index n, std::uint64_t seed,
                                      double sinkhorn_tol = 1e-12);

NonnegMatrix scale_to_unit_pf(const NonnegMatrix& r, const PFData& pf);

}  // namespace specgap
