#pragma once

#include "specgap/matrix.hpp"
#include "specgap/pf.hpp"

#include <cstdint>
#include <optional>

namespace specgap {

/// A cut is a proper nonempty subset of [n], stored as a bitmask (n <= 63).
struct Cut {
  std::uint64_t members = 0;
  double weight = 0.0;  // sum of u_i v_i over members
  double phi_s = 0.0;
};

enum class ExpansionMethod { BruteForce, DefinitionZero, SingleCut };

struct ExpansionResult {
  double phi = 0.0;
  std::optional<Cut> argmin_cut;
  ExpansionMethod method = ExpansionMethod::BruteForce;
};

/// Edge expansion of a single cut:
///   phi_S = sum_{i in S, j not in S} R_ij u_i v_j
///           / min(sum_{i in S} u_i v_i, sum_{i not in S} u_i v_i).
double phi_cut(const NonnegMatrix& r, const PFData& pf, std::uint64_t members);

/// Exact edge expansion by enumeration over all cuts (2^{n-1} after fixing
/// index 0 inside S). Returns phi = 0 with method DefinitionZero when no
/// positive eigenvector pair exists. Argmin ties break to the smallest
/// bitmask among cuts of weight <= 1/2.
ExpansionResult phi_exact(const NonnegMatrix& r, const PFData& pf, int n_limit = 24);

/// Infinity norm of D_u R D_v 1 - D_v R^T D_u 1; a consistency check on the
/// eigenvector pair (the weighted graph must be Eulerian).
double eulerian_defect(const NonnegMatrix& r, const PFData& pf);

}  // namespace specgap
