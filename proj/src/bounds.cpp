#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "series.hpp"

namespace critscale {

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kDirTol = 1e-12;  // h_Wbar(z) below this: direction orthogonal to Wbar

void require_positive_supports(const SupportTriple& t) {
  if (t.hX_plus <= 0 || t.hX_minus <= 0)
    throw Error(ErrorCode::InvalidArgument, "bounds: h_X(+/-z) must be positive (X a PC-set)");
  if (t.hBU_plus < 0 || t.hBU_minus < 0)
    throw Error(ErrorCode::InvalidArgument, "bounds: h_{-BU}(+/-z) must be nonnegative");
  if (t.hW_plus <= kDirTol || t.hW_minus <= kDirTol)
    throw Error(ErrorCode::DegenerateProjection,
                "bounds: h_Wbar vanishes in the eigen-direction; bound undefined");
}

Classification classify_one(double lhs, double rhs) {
  if (lhs > rhs + kTieTol) return Classification::Decreasing;
  if (lhs < rhs - kTieTol) return Classification::Increasing;
  return Classification::Constant;
}

double alpha_plus_one_direction(double lambda, double hX, double hBU, double hW, std::int64_t k) {
  const GeomRatios r = geom_ratios(lambda, k);
  return (r.inv_s * hX + r.prev_over_s * hBU) / hW;
}

double alpha_plus_limit_one_direction(double lambda, double hX, double hBU, double hW) {
  if (lambda >= 1.0) return (1.0 / lambda) * hBU / hW;
  return (1.0 - lambda) * hX / hW + hBU / hW;
}

double alpha_minus_one_direction(double absLam, double hX, double hBU_opp, double hBU_same,
                                 double hW_opp, double hW_same, std::int64_t k) {
  const std::int64_t sp = absLam > 1.0 ? k - 1 : 0;
  const ParitySums num_s = parity_sums_scaled(absLam, k - 2, sp);
  const ParitySums den_s = parity_sums_scaled(absLam, k - 1, sp);
  const double hX_coeff = std::pow(absLam, -static_cast<double>(sp));
  const double num = hX * hX_coeff + num_s.odd * hBU_opp + num_s.even * hBU_same;
  const double den = den_s.odd * hW_opp + den_s.even * hW_same;
  return num / den;
}

struct MinusLimits {
  double odd = 0, even = 0;
};

MinusLimits alpha_minus_limits_one_direction(double absLam, double hX, double hBU_opp,
                                             double hBU_same, double hW_opp, double hW_same) {
  MinusLimits out;
  if (absLam < 1.0) {
    const double v = ((1.0 - absLam * absLam) * hX + absLam * hBU_opp + hBU_same) /
                     (absLam * hW_opp + hW_same);
    out.odd = out.even = v;
  } else {
    out.odd = (absLam * hBU_opp + hBU_same) / (absLam * hW_opp + absLam * absLam * hW_same);
    out.even = (hBU_opp + absLam * hBU_same) / (absLam * absLam * hW_opp + absLam * hW_same);
  }
  return out;
}

double beta_direction_value(double lambda, double hX2, double hBU2, double hBU1, double hW2,
                            double hW1, std::int64_t k) {
  const double l_star = lambda * hW2 / hW1;
  const std::int64_t fl = static_cast<std::int64_t>(std::floor(l_star));
  const double num = hX2 + geom_sum(0, k - 2, lambda) * hBU2 + geom_sum_deriv(0, k - 2, lambda) * hBU1;
  double den;
  if (k <= fl + 1) {
    den = geom_sum(0, k - 1, lambda) * hW2 - geom_sum_deriv(0, k - 1, lambda) * hW1;
  } else {
    const double G2 = geom_sum(0, fl, lambda) - geom_sum(fl + 1, k - 1, lambda);
    const double G1 = geom_sum_deriv(fl + 1, k - 1, lambda) - geom_sum_deriv(0, fl, lambda);
    den = G2 * hW2 + G1 * hW1;
  }
  if (!std::isfinite(num) || !std::isfinite(den))
    throw Error(ErrorCode::NumericalFailure, "beta_plus_k: series overflow at this (lambda, k)");
  if (den <= 0)
    throw Error(ErrorCode::NonPositiveDenominator, "beta_plus_k: denominator not positive");
  // dual-route self-check: direct summation of the |f| series and the
  // numerator series must agree with the closed forms
  double den_direct = 0, sum1 = 0, sum2 = 0;
  for (std::int64_t l = 0; l <= k - 1; ++l) {
    const double f = std::pow(lambda, static_cast<double>(l)) * hW2 -
                     l * std::pow(lambda, static_cast<double>(l - 1)) * hW1;
    den_direct += std::max(f, -f);
    if (l <= k - 2) {
      sum1 += std::pow(lambda, static_cast<double>(l));
      sum2 += l * std::pow(lambda, static_cast<double>(l - 1));
    }
  }
  const double num_direct = hX2 + sum1 * hBU2 + sum2 * hBU1;
  const double scale = std::max({1.0, std::abs(num), std::abs(den)});
  if (std::abs(num - num_direct) > 1e-9 * scale || std::abs(den - den_direct) > 1e-9 * scale)
    throw Error(ErrorCode::NumericalFailure,
                "beta_plus_k: closed form disagrees with direct summation");
  return num / den;
}

double alpha_c_direction_value(const JordanBlock& block, const ConvexSet& X,
                               const ConvexSet& negBU, const ConvexSet& Wbar, int j,
                               std::int64_t l0, int sign, std::int64_t k) {
  const Vec psi0 = static_cast<double>(sign) * rotating_direction(block, j, l0);
  const Vec psik = static_cast<double>(sign) * rotating_direction(block, j, l0 + k);
  const double hW = Wbar.support(psi0);
  if (hW <= kDirTol)
    throw Error(ErrorCode::DegenerateProjection,
                "alpha_c: h_Wbar vanishes in a rotating direction");
  const GeomRatios r = geom_ratios(block.rho, k);
  return (r.inv_s * X.support(psik) + r.prev_over_s * negBU.support(psi0)) / hW;
}

Classification classify_sequence(const std::vector<std::pair<std::int64_t, double>>& per_k) {
  if (per_k.size() < 2) return Classification::Unknown;
  bool dec = true, inc = true, eq = true;
  for (size_t i = 1; i < per_k.size(); ++i) {
    const double d = per_k[i].second - per_k[i - 1].second;
    if (d >= -kTieTol) dec = false;
    if (d <= kTieTol) inc = false;
    if (std::abs(d) > kTieTol) eq = false;
  }
  if (eq) return Classification::Constant;
  if (dec) return Classification::Decreasing;
  if (inc) return Classification::Increasing;
  return Classification::NonMonotone;
}

}  // namespace

SupportTriple support_triple(const ConvexSet& X, const ConvexSet& negBU, const ConvexSet& Wbar,
                             const Vec& z) {
  SupportTriple t;
  const Vec nz = -z;
  t.hX_plus = X.support(z);
  t.hX_minus = X.support(nz);
  t.hBU_plus = negBU.support(z);
  t.hBU_minus = negBU.support(nz);
  t.hW_plus = Wbar.support(z);
  t.hW_minus = Wbar.support(nz);
  return t;
}

DirectionalBound alpha_plus_k(double lambda, const SupportTriple& t, std::int64_t k) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveEigenvalue, "alpha_plus_k: lambda <= 0");
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "alpha_plus_k: k >= 1 required");
  require_positive_supports(t);
  DirectionalBound b;
  b.value_plus = alpha_plus_one_direction(lambda, t.hX_plus, t.hBU_plus, t.hW_plus, k);
  b.value_minus = alpha_plus_one_direction(lambda, t.hX_minus, t.hBU_minus, t.hW_minus, k);
  b.bar = std::max(b.value_plus, b.value_minus);
  return b;
}

std::pair<Classification, Classification> alpha_plus_classify(double lambda,
                                                              const SupportTriple& t) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveEigenvalue, "alpha_plus_classify: lambda <= 0");
  return {classify_one(lambda * t.hX_plus, t.hBU_plus),
          classify_one(lambda * t.hX_minus, t.hBU_minus)};
}

InfimumResult alpha_plus_inf(double lambda, const SupportTriple& t) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveEigenvalue, "alpha_plus_inf: lambda <= 0");
  require_positive_supports(t);
  InfimumResult r;
  const auto [cp, cm] = alpha_plus_classify(lambda, t);
  r.hypothesis_ok = cp == Classification::Decreasing && cm == Classification::Decreasing;
  if (r.hypothesis_ok) {
    r.value = std::max(alpha_plus_limit_one_direction(lambda, t.hX_plus, t.hBU_plus, t.hW_plus),
                       alpha_plus_limit_one_direction(lambda, t.hX_minus, t.hBU_minus, t.hW_minus));
    r.justification = InfJustification::LimitFormula;
  } else {
    r.value = alpha_plus_k(lambda, t, 1).bar;
    r.justification = InfJustification::K1Value;
    r.k_at = 1;
  }
  return r;
}

double support_sum_lower_bound(const std::vector<std::pair<double, double>>& values) {
  if (values.empty())
    throw Error(ErrorCode::InvalidArgument, "support_sum_lower_bound: empty list");
  double best = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < values.size(); ++i) {
    double v = values[i].first;
    for (size_t j = 0; j < values.size(); ++j)
      if (j != i) v -= values[j].second;
    best = std::max(best, v);
  }
  return best;
}

double Crossover::f(double l) const {
  return std::pow(lambda, l) * hW_phi2 - l * std::pow(lambda, l - 1.0) * hW_phi1;
}

Crossover f_crossover(double lambda, double hW_phi2, double hW_phi1) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveEigenvalue, "f_crossover: lambda <= 0");
  if (hW_phi2 <= 0 || hW_phi1 <= 0)
    throw Error(ErrorCode::InvalidArgument, "f_crossover: supports must be positive");
  Crossover c;
  c.lambda = lambda;
  c.hW_phi2 = hW_phi2;
  c.hW_phi1 = hW_phi1;
  c.l_star = lambda * hW_phi2 / hW_phi1;
  return c;
}

DirectionalBound beta_plus_k(double lambda, const BetaSupports& s, std::int64_t k) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveEigenvalue, "beta_plus_k: lambda <= 0");
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "beta_plus_k: k >= 1 required");
  const double wscale = std::max({1.0, s.hW2_plus, s.hW1_plus});
  if (std::abs(s.hW2_plus - s.hW2_minus) > 1e-9 * wscale ||
      std::abs(s.hW1_plus - s.hW1_minus) > 1e-9 * wscale)
    throw Error(ErrorCode::AsymmetricW, "beta_plus_k: Wbar must be symmetric about the origin");
  if (s.hW2_plus <= kDirTol || s.hW1_plus <= kDirTol)
    throw Error(ErrorCode::NonPositiveDenominator, "beta_plus_k: h_Wbar must be positive");
  DirectionalBound b;
  b.value_plus =
      beta_direction_value(lambda, s.hX2_plus, s.hBU2_plus, s.hBU1_plus, s.hW2_plus, s.hW1_plus, k);
  b.value_minus = beta_direction_value(lambda, s.hX2_minus, s.hBU2_minus, s.hBU1_minus, s.hW2_plus,
                                       s.hW1_plus, k);
  b.bar = std::max(b.value_plus, b.value_minus);
  return b;
}

DirectionalBound alpha_minus_k(double lambda, const SupportTriple& t, std::int64_t k) {
  if (lambda >= 0) throw Error(ErrorCode::NonNegativeEigenvalue, "alpha_minus_k: lambda >= 0");
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "alpha_minus_k: k >= 1 required");
  require_positive_supports(t);
  const double al = -lambda;
  DirectionalBound b;
  b.value_plus = alpha_minus_one_direction(al, t.hX_plus, t.hBU_minus, t.hBU_plus, t.hW_minus,
                                           t.hW_plus, k);
  b.value_minus = alpha_minus_one_direction(al, t.hX_minus, t.hBU_plus, t.hBU_minus, t.hW_plus,
                                            t.hW_minus, k);
  b.bar = std::max(b.value_plus, b.value_minus);
  return b;
}

std::pair<ParityClassification, ParityClassification> alpha_minus_classify(
    double lambda, const SupportTriple& t) {
  if (lambda >= 0) throw Error(ErrorCode::NonNegativeEigenvalue, "alpha_minus_classify: lambda >= 0");
  const double al = -lambda;
  auto classify_dir = [&](double hX, double hBU_opp, double hBU_same, double hW_opp,
                          double hW_same) {
    ParityClassification c;
    const double odd_rhs =
        (al * hBU_opp + hBU_same) * hW_same / (al * hW_opp + al * al * hW_same);
    const double even_rhs =
        (al * hW_opp + hW_same) * hBU_opp / (al * al * hW_opp + al * hW_same);
    c.odd = classify_one(hX, odd_rhs);
    c.even = classify_one(hX, even_rhs);
    return c;
  };
  return {classify_dir(t.hX_plus, t.hBU_minus, t.hBU_plus, t.hW_minus, t.hW_plus),
          classify_dir(t.hX_minus, t.hBU_plus, t.hBU_minus, t.hW_plus, t.hW_minus)};
}

InfimumResult alpha_minus_inf(double lambda, const SupportTriple& t, std::int64_t fallback_kmax) {
  if (lambda >= 0) throw Error(ErrorCode::NonNegativeEigenvalue, "alpha_minus_inf: lambda >= 0");
  require_positive_supports(t);
  const double al = -lambda;
  const auto [cp, cm] = alpha_minus_classify(lambda, t);
  InfimumResult r;
  r.hypothesis_ok =
      cp.odd == Classification::Decreasing && cp.even == Classification::Decreasing &&
      cm.odd == Classification::Decreasing && cm.even == Classification::Decreasing;
  if (r.hypothesis_ok) {
    const MinusLimits lp = alpha_minus_limits_one_direction(al, t.hX_plus, t.hBU_minus, t.hBU_plus,
                                                            t.hW_minus, t.hW_plus);
    const MinusLimits lm = alpha_minus_limits_one_direction(al, t.hX_minus, t.hBU_plus, t.hBU_minus,
                                                            t.hW_plus, t.hW_minus);
    r.value = std::min(std::max(lp.odd, lm.odd), std::max(lp.even, lm.even));
    r.justification = InfJustification::LimitFormula;
  } else {
    double best = std::numeric_limits<double>::infinity();
    std::int64_t best_k = 1;
    for (std::int64_t k = 1; k <= fallback_kmax; ++k) {
      const double v = alpha_minus_k(lambda, t, k).bar;
      if (v < best) {
        best = v;
        best_k = k;
      }
    }
    r.value = best;
    r.justification = InfJustification::MinOverComputed;
    r.k_at = best_k;
  }
  return r;
}

ComplexBound alpha_c_k(const JordanBlock& block, const ConvexSet& X, const ConvexSet& negBU,
                       const ConvexSet& Wbar, std::int64_t k) {
  if (block.kind != BlockKind::ComplexPair)
    throw Error(ErrorCode::WrongBlockKind, "alpha_c_k: complex block required");
  if (!block.angle_rational || !block.period)
    throw Error(ErrorCode::IrrationalAngle, "alpha_c_k: rational eigenvalue angle required");
  if (block.rho <= 0) throw Error(ErrorCode::InvalidArgument, "alpha_c_k: rho must be positive");
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "alpha_c_k: k >= 1 required");
  const std::int64_t M = *block.period;
  ComplexBound best;
  best.bar = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 2; ++j) {
    for (std::int64_t l0 = 0; l0 < M; ++l0) {
      const double vp = alpha_c_direction_value(block, X, negBU, Wbar, j, l0, +1, k);
      const double vm = alpha_c_direction_value(block, X, negBU, Wbar, j, l0, -1, k);
      const double bar = std::max(vp, vm);
      if (bar < best.bar) {
        best.bar = bar;
        best.j = j;
        best.l0 = l0;
        best.value_plus = vp;
        best.value_minus = vm;
      }
    }
  }
  return best;
}

InfimumResult alpha_c_inf(const JordanBlock& block, const ConvexSet& X, const ConvexSet& negBU,
                          const ConvexSet& Wbar) {
  if (block.kind != BlockKind::ComplexPair)
    throw Error(ErrorCode::WrongBlockKind, "alpha_c_inf: complex block required");
  if (!block.angle_rational || !block.period)
    throw Error(ErrorCode::IrrationalAngle, "alpha_c_inf: rational eigenvalue angle required");
  const std::int64_t M = *block.period;
  const double rho = block.rho;

  bool hypothesis = true;
  for (int j = 1; j <= 2 && hypothesis; ++j) {
    for (int sign = -1; sign <= 1 && hypothesis; sign += 2) {
      double min_hX = std::numeric_limits<double>::infinity();
      double max_hBU = -std::numeric_limits<double>::infinity();
      for (std::int64_t l = 0; l < M; ++l) {
        const Vec psi = static_cast<double>(sign) * rotating_direction(block, j, l);
        min_hX = std::min(min_hX, X.support(psi));
        max_hBU = std::max(max_hBU, negBU.support(psi));
      }
      if (!(rho * min_hX > max_hBU)) hypothesis = false;
    }
  }

  InfimumResult r;
  r.hypothesis_ok = hypothesis;
  if (!hypothesis) {
    double best = std::numeric_limits<double>::infinity();
    std::int64_t best_k = 1;
    for (std::int64_t k = 1; k <= 10 * M; ++k) {
      const double v = alpha_c_k(block, X, negBU, Wbar, k).bar;
      if (v < best) {
        best = v;
        best_k = k;
      }
    }
    r.value = best;
    r.justification = InfJustification::MinOverComputed;
    r.k_at = best_k;
    return r;
  }

  auto limit_value = [&](int j, std::int64_t l0, std::int64_t l, int sign) {
    const Vec psi0 = static_cast<double>(sign) * rotating_direction(block, j, l0);
    const double hW = Wbar.support(psi0);
    if (hW <= kDirTol)
      throw Error(ErrorCode::DegenerateProjection, "alpha_c_inf: h_Wbar vanishes");
    if (rho >= 1.0) return (1.0 / rho) * negBU.support(psi0) / hW;
    const Vec psil = static_cast<double>(sign) * rotating_direction(block, j, l);
    return (1.0 - rho) * X.support(psil) / hW + negBU.support(psi0) / hW;
  };
  double best = std::numeric_limits<double>::infinity();
  for (int j = 1; j <= 2; ++j)
    for (std::int64_t l0 = 0; l0 < M; ++l0)
      for (std::int64_t l = 0; l < M; ++l)
        best = std::min(best,
                        std::max(limit_value(j, l0, l, +1), limit_value(j, l0, l, -1)));
  r.value = best;
  r.justification = InfJustification::LimitFormula;
  return r;
}

BoundTable best_bound(const LinearSystem& system, const SpectralDecomposition& eig,
                      std::int64_t k_max) {
  if (k_max < 1) throw Error(ErrorCode::InvalidArgument, "best_bound: k_max >= 1 required");
  BoundTable table;
  const ConvexSet& X = system.X();
  const ConvexSet& negBU = system.neg_bu();
  const ConvexSet& W = system.Wbar();
  const bool w_symmetric = W.is_symmetric();

  struct Candidate {
    double value;
    std::optional<std::int64_t> k_star;
    int block;
    Theorem theorem;
    InfJustification justification;
    std::string direction;
  };
  std::vector<Candidate> candidates;

  auto add_sequence = [&](int bi, Theorem th, const std::vector<BoundRow>& rows,
                          std::optional<InfimumResult> inf, const std::string& dir) {
    BoundSequence seq;
    seq.block = bi;
    seq.theorem = th;
    for (const BoundRow& r : rows) seq.per_k.emplace_back(r.k, r.bar);
    seq.classification = classify_sequence(seq.per_k);
    std::int64_t argmin = seq.per_k.front().first;
    double minv = seq.per_k.front().second;
    for (const auto& [k, v] : seq.per_k) {
      if (v < minv) {
        minv = v;
        argmin = k;
      }
    }
    if (inf) {
      seq.infimum = inf->value;
      seq.justification = inf->justification;
      candidates.push_back({inf->value, inf->k_at, bi, th, inf->justification, dir});
    }
    candidates.push_back({minv, argmin, bi, th, InfJustification::MinOverComputed, dir});
    table.sequences.push_back(std::move(seq));
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  };

  for (int bi = 0; bi < static_cast<int>(eig.blocks.size()); ++bi) {
    const JordanBlock& blk = eig.blocks[bi];
    const std::string tag = std::to_string(bi + 1);
    try {
      if (blk.kind == BlockKind::RealPositive) {
        const SupportTriple t = support_triple(X, negBU, W, blk.phi[0]);
        std::vector<BoundRow> rows;
        for (std::int64_t k = 1; k <= k_max; ++k) {
          const DirectionalBound b = alpha_plus_k(blk.lambda, t, k);
          rows.push_back({k, bi, Theorem::T1, b.value_plus, b.value_minus, b.bar});
        }
        add_sequence(bi, Theorem::T1, rows, alpha_plus_inf(blk.lambda, t), "phi[" + tag + ",1]");
        if (blk.size >= 2 && w_symmetric) {
          BetaSupports s;
          const Vec& p1 = blk.phi[0];
          const Vec& p2 = blk.phi[1];
          s.hX2_plus = X.support(p2);
          s.hX2_minus = X.support(Vec(-p2));
          s.hBU2_plus = negBU.support(p2);
          s.hBU2_minus = negBU.support(Vec(-p2));
          s.hBU1_plus = negBU.support(p1);
          s.hBU1_minus = negBU.support(Vec(-p1));
          s.hW2_plus = W.support(p2);
          s.hW2_minus = W.support(Vec(-p2));
          s.hW1_plus = W.support(p1);
          s.hW1_minus = W.support(Vec(-p1));
          std::vector<BoundRow> rows3;
          for (std::int64_t k = 1; k <= k_max; ++k) {
            const DirectionalBound b = beta_plus_k(blk.lambda, s, k);
            rows3.push_back({k, bi, Theorem::T3, b.value_plus, b.value_minus, b.bar});
          }
          add_sequence(bi, Theorem::T3, rows3, std::nullopt, "phi[" + tag + ",2]");
        }
      } else if (blk.kind == BlockKind::RealNegative) {
        const SupportTriple t = support_triple(X, negBU, W, blk.phi[0]);
        std::vector<BoundRow> rows;
        for (std::int64_t k = 1; k <= k_max; ++k) {
          const DirectionalBound b = alpha_minus_k(blk.lambda, t, k);
          rows.push_back({k, bi, Theorem::T4, b.value_plus, b.value_minus, b.bar});
        }
        add_sequence(bi, Theorem::T4, rows, alpha_minus_inf(blk.lambda, t, std::max<std::int64_t>(k_max, 200)),
                     "phi[" + tag + ",1]");
      } else {
        std::vector<BoundRow> rows;
        ComplexBound last;
        for (std::int64_t k = 1; k <= k_max; ++k) {
          last = alpha_c_k(blk, X, negBU, W, k);
          rows.push_back({k, bi, Theorem::T6, last.value_plus, last.value_minus, last.bar});
        }
        add_sequence(bi, Theorem::T6, rows, alpha_c_inf(blk, X, negBU, W),
                     "psi[" + tag + "," + std::to_string(last.j) + "] l0=" +
                         std::to_string(last.l0));
      }
    } catch (const Error& e) {
      // block not usable for bounds (irrational angle, degenerate direction)
      if (e.code() != ErrorCode::IrrationalAngle && e.code() != ErrorCode::DegenerateProjection &&
          e.code() != ErrorCode::AsymmetricW)
        throw;
    }
  }

  if (candidates.empty())
    throw Error(ErrorCode::NoApplicableBlock, "best_bound: no block admits a bound");
  const Candidate* best = &candidates.front();
  for (const Candidate& c : candidates)
    if (c.value < best->value) best = &c;
  table.certificate.alpha = best->value;
  table.certificate.k_star = best->k_star;
  table.certificate.block = best->block;
  table.certificate.theorem = best->theorem;
  table.certificate.justification = best->justification;
  table.certificate.direction = best->direction;
  return table;
}

}  // namespace critscale
