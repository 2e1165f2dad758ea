#ifndef CRITSCALE_CONFIG_HPP
#define CRITSCALE_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "spectral.hpp"
#include "system.hpp"

namespace critscale {

// Parsed analysis description: the system, an optional declared Jordan
// structure, and command defaults.
struct AnalysisConfig {
  LinearSystem system;
  std::optional<std::vector<DeclaredBlock>> jordan;
  std::int64_t k_max = 15;
  double alpha_tol = 1e-4;
  double alpha_hi = 10.0;

  const std::vector<DeclaredBlock>* declared() const {
    return jordan ? &*jordan : nullptr;
  }
};

AnalysisConfig parse_config(const std::string& json_text);
AnalysisConfig load_config(const std::string& path);

// Canonical JSON serialization; parse_config(serialize_config(c)) reproduces
// an equal structure.
std::string serialize_config(const AnalysisConfig& config);

}  // namespace critscale

#endif
