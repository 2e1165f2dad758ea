#include "analysis.hpp"

#include <algorithm>
#include <map>

namespace critscale {

SpectralReport spectral_report(const LinearSystem& system,
                               const std::vector<DeclaredBlock>* declared) {
  SpectralReport rep;
  rep.eig = decompose(system.A(), declared);
  for (int bi = 0; bi < static_cast<int>(rep.eig.blocks.size()); ++bi) {
    const JordanBlock& blk = rep.eig.blocks[static_cast<size_t>(bi)];
    const int dirs = blk.kind == BlockKind::ComplexPair ? 2 : blk.size;
    for (int j = 1; j <= dirs; ++j) {
      DirectionRow row;
      row.block = bi;
      row.j = j;
      row.direction = blk.phi[static_cast<size_t>(j - 1)];
      const SupportTriple t =
          support_triple(system.X(), system.neg_bu(), system.Wbar(), row.direction);
      row.hX_plus = t.hX_plus;
      row.hX_minus = t.hX_minus;
      row.hBU_plus = t.hBU_plus;
      row.hBU_minus = t.hBU_minus;
      row.hW_plus = t.hW_plus;
      row.hW_minus = t.hW_minus;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

OracleReport oracle_report(const LinearSystem& system, const SpectralDecomposition& eig,
                           std::int64_t k_max, double alpha_tol, double alpha_hi) {
  const BoundTable bounds = best_bound(system, eig, k_max);
  std::map<std::pair<std::int64_t, int>, double> by_k_theorem;  // (k, theorem#) -> min bar
  for (const BoundRow& r : bounds.rows) {
    const auto key = std::make_pair(r.k, theorem_number(r.theorem));
    auto it = by_k_theorem.find(key);
    if (it == by_k_theorem.end() || r.bar < it->second) by_k_theorem[key] = r.bar;
  }
  OracleReport rep;
  for (std::int64_t k = 2; k <= k_max; ++k) {
    OracleRow row;
    row.k = k;
    row.alpha_star = critical_alpha(system, k, alpha_tol, alpha_hi);
    double best = std::numeric_limits<double>::infinity();
    for (int tn : {1, 3, 4, 6}) {
      auto it = by_k_theorem.find({k, tn});
      if (it == by_k_theorem.end()) continue;
      switch (tn) {
        case 1: row.t1 = it->second; break;
        case 3: row.t3 = it->second; break;
        case 4: row.t4 = it->second; break;
        case 6: row.t6 = it->second; break;
      }
      if (it->second < best) {
        best = it->second;
        row.winner = "T" + std::to_string(tn);
      }
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

Defender defender_by_name(const std::string& name) {
  if (name == "projected-worst-case") return Defender::ProjectedWorstCase;
  if (name == "zero") return Defender::ZeroInput;
  if (name == "saturating-feedback") return Defender::SaturatingFeedback;
  throw Error(ErrorCode::InvalidArgument, "unknown defender '" + name + "'");
}

}  // namespace critscale
