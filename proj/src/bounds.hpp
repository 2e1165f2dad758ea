#ifndef CRITSCALE_BOUNDS_HPP
#define CRITSCALE_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectral.hpp"
#include "system.hpp"

namespace critscale {

// Supports of X, -BU and Wbar in the directions +z and -z for a fixed z.
struct SupportTriple {
  double hX_plus = 0, hX_minus = 0;
  double hBU_plus = 0, hBU_minus = 0;
  double hW_plus = 0, hW_minus = 0;
};

SupportTriple support_triple(const ConvexSet& X, const ConvexSet& negBU, const ConvexSet& Wbar,
                             const Vec& z);

enum class Classification { Decreasing, Increasing, Constant, NonMonotone, Unknown };
enum class Theorem { T1, T3, T4, T6 };
enum class InfJustification { LimitFormula, K1Value, MinOverComputed };

inline int theorem_number(Theorem t) {
  switch (t) {
    case Theorem::T1: return 1;
    case Theorem::T3: return 3;
    case Theorem::T4: return 4;
    case Theorem::T6: return 6;
  }
  return 0;
}

struct DirectionalBound {
  double value_plus = 0;
  double value_minus = 0;
  double bar = 0;  // max of the two
};

// Critical scaling above which the S_k support certificate holds at step k,
// evaluated at z = +phi and z = -phi for a real positive eigenvalue.
DirectionalBound alpha_plus_k(double lambda, const SupportTriple& t, std::int64_t k);

// Monotonicity of {alpha^+_k(z)} per direction: compares lambda*h_X(z) with
// h_{-BU}(z), tie tolerance 1e-12.
std::pair<Classification, Classification> alpha_plus_classify(double lambda,
                                                              const SupportTriple& t);

struct InfimumResult {
  double value = 0;
  InfJustification justification = InfJustification::LimitFormula;
  bool hypothesis_ok = true;
  std::optional<std::int64_t> k_at;  // attained k for the non-limit justifications
};

// inf_k of the k-step bound. Limit formula when the decrease hypothesis holds
// in both directions; otherwise the k = 1 value (a valid certificate).
InfimumResult alpha_plus_inf(double lambda, const SupportTriple& t);

// max_i { h_Y(z_i) - sum_{j != i} h_{-Y}(z_j) }, the support lower bound.
double support_sum_lower_bound(const std::vector<std::pair<double, double>>& values);

// f(l) = lambda^l hW(phi2) - l lambda^{l-1} hW(phi1) and its sign-change point
// l* = lambda hW(phi2)/hW(phi1).
struct Crossover {
  double l_star = 0;
  double lambda = 0, hW_phi2 = 0, hW_phi1 = 0;
  double f(double l) const;
};
Crossover f_crossover(double lambda, double hW_phi2, double hW_phi1);

// Supports entering the generalized-eigenvector bound: X and -BU at +-phi2,
// -BU at +-phi1, Wbar at +-phi2 and +-phi1 (Wbar must be symmetric).
struct BetaSupports {
  double hX2_plus = 0, hX2_minus = 0;
  double hBU2_plus = 0, hBU2_minus = 0;
  double hBU1_plus = 0, hBU1_minus = 0;
  double hW2_plus = 0, hW2_minus = 0;
  double hW1_plus = 0, hW1_minus = 0;
};

// Four-case piecewise bound at the first generalized eigenvector. Evaluates
// both the closed form and the direct series summation and cross-checks them
// to relative 1e-9.
DirectionalBound beta_plus_k(double lambda, const BetaSupports& s, std::int64_t k);

DirectionalBound alpha_minus_k(double lambda, const SupportTriple& t, std::int64_t k);

struct ParityClassification {
  Classification odd = Classification::Unknown;
  Classification even = Classification::Unknown;
};
std::pair<ParityClassification, ParityClassification> alpha_minus_classify(
    double lambda, const SupportTriple& t);

InfimumResult alpha_minus_inf(double lambda, const SupportTriple& t,
                              std::int64_t fallback_kmax = 200);

struct ComplexBound {
  double bar = 0;
  int j = 1;             // argmin eigenvector index
  std::int64_t l0 = 0;   // argmin initial direction
  double value_plus = 0, value_minus = 0;
};

ComplexBound alpha_c_k(const JordanBlock& block, const ConvexSet& X, const ConvexSet& negBU,
                       const ConvexSet& Wbar, std::int64_t k);

InfimumResult alpha_c_inf(const JordanBlock& block, const ConvexSet& X, const ConvexSet& negBU,
                          const ConvexSet& Wbar);

// ---- aggregation ----

struct BoundRow {
  std::int64_t k = 0;
  int block = 0;  // 0-based index into the decomposition
  Theorem theorem = Theorem::T1;
  double value_plus = 0, value_minus = 0, bar = 0;
};

struct BoundSequence {
  int block = 0;
  Theorem theorem = Theorem::T1;
  std::vector<std::pair<std::int64_t, double>> per_k;  // (k, bar)
  Classification classification = Classification::Unknown;
  std::optional<double> infimum;
  InfJustification justification = InfJustification::MinOverComputed;
};

struct AlphaCertificate {
  double alpha = 0;
  std::optional<std::int64_t> k_star;  // nullopt: holds only in the limit
  int block = 0;
  Theorem theorem = Theorem::T1;
  InfJustification justification = InfJustification::LimitFormula;
  std::string direction;
};

struct BoundTable {
  std::vector<BoundRow> rows;
  std::vector<BoundSequence> sequences;
  AlphaCertificate certificate;
};

// Per-k bounds for every applicable (block, theorem) pair plus the overall
// smallest certified scaling.
BoundTable best_bound(const LinearSystem& system, const SpectralDecomposition& eig,
                      std::int64_t k_max);

}  // namespace critscale

#endif
