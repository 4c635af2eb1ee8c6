#pragma once

#include <string>
#include <vector>

namespace specgap {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the full certification suite: the construction's exact identities,
/// its spectrum/singular values/expansion bracket, the inequality property
/// suite on seeded fixtures, the triangular norm bounds, and the mixing-time
/// sandwiches. `quick` trims fixture counts and the largest sizes.
std::vector<CriterionResult> run_acceptance(bool quick = false);

}  // namespace specgap
