#pragma once

#include "specgap/bounds.hpp"
#include "specgap/expansion.hpp"
#include "specgap/matrix.hpp"
#include "specgap/mixing.hpp"
#include "specgap/pf.hpp"
#include "specgap/spectral.hpp"

#include <string>
#include <vector>

namespace specgap {

/// JSON emission with stable field ordering; complex numbers as [re, im].
std::string to_json(const ValidationReport& rep);
std::string to_json(const PFData& pf);
std::string to_json(const ExpansionResult& res);
std::string to_json(const SpectralSummary& spec);
std::string to_json(const BoundReport& rep);
std::string to_json(const MixReport& rep);

std::string gamma_csv(const std::vector<GammaRecord>& records);

}  // namespace specgap
