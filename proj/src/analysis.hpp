#ifndef CRITSCALE_ANALYSIS_HPP
#define CRITSCALE_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "attack.hpp"
#include "bounds.hpp"
#include "config.hpp"
#include "reach.hpp"

namespace critscale {

// One support-table row per (block, direction): the values h_X, h_{-BU} and
// h_Wbar at +-phi_{i,j} (or the complex pair directions).
struct DirectionRow {
  int block = 0;
  int j = 1;
  Vec direction;
  double hX_plus = 0, hX_minus = 0;
  double hBU_plus = 0, hBU_minus = 0;
  double hW_plus = 0, hW_minus = 0;
};

struct SpectralReport {
  SpectralDecomposition eig;
  std::vector<DirectionRow> rows;
};

SpectralReport spectral_report(const LinearSystem& system,
                               const std::vector<DeclaredBlock>* declared);

struct OracleRow {
  std::int64_t k = 0;
  double alpha_star = 0;
  std::optional<double> t1, t3, t4, t6;
  std::string winner;  // theorem with the smallest bound at this k
};

struct OracleReport {
  std::vector<OracleRow> rows;  // k = 2 .. k_max
};

OracleReport oracle_report(const LinearSystem& system, const SpectralDecomposition& eig,
                           std::int64_t k_max, double alpha_tol, double alpha_hi);

Defender defender_by_name(const std::string& name);

}  // namespace critscale

#endif
