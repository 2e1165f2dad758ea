#ifndef CRITSCALE_REACH_HPP
#define CRITSCALE_REACH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spectral.hpp"
#include "system.hpp"

namespace critscale {

struct ReachResult {
  std::vector<ConvexSet> sets;  // C_0 = X, C_1, ... up to the last nonempty
  std::optional<std::int64_t> first_empty;
  double alpha = 0;
};

// One step of C_{k+1} = A^{-1}([C_k erode alpha*Wbar] + (-BU)) intersect X.
// 2-D only. The returned set may be empty.
ConvexSet c_step(const LinearSystem& system, const ConvexSet& current, double alpha);

ReachResult c_sequence(const LinearSystem& system, double alpha, std::int64_t k_max);

// T_{k+1} = (T_k erode A^k alpha*Wbar) + A^k(-BU), T_0 = X. Stops early once
// empty; returns T_0..T_kmax (or up to the first empty iterate, inclusive).
std::vector<ConvexSet> t_sequence(const LinearSystem& system, double alpha, std::int64_t k_max);

struct SupportEmptiness {
  double rhs_plus = 0;   // upper bound on h_{S_k}(+z)
  double rhs_minus = 0;  // upper bound on h_{S_k}(-z)
  bool certified_empty = false;
};

// Upper bound on the S_k support in directions +-z via the term-wise support
// sums; certificate when both are strictly negative.
SupportEmptiness s_emptiness(const LinearSystem& system, const Vec& z, double alpha,
                             std::int64_t k);

// Explicit 2-D construction of S_k (H-representation; may be empty).
ConvexSet s_set_2d(const LinearSystem& system, double alpha, std::int64_t k);

// Bisection for alpha*_k = inf{alpha : C_k = empty} to width tol. alpha_hi
// must already empty C at or before k. Emptiness monotonicity in alpha is
// spot-verified on nested pairs.
double critical_alpha(const LinearSystem& system, std::int64_t k, double tol, double alpha_hi);

// U = {0} closed form: C_k equals the intersection of A^{-l}(X erode R_{l-1});
// supports compared in 64 probe directions within 1e-7.
bool autonomous_equality_check(const LinearSystem& system, double alpha, std::int64_t k);

// Estimate of alpha*_infinity: alpha*_k computed for k up to k_max (default 30),
// stopping early once the sequence plateaus (|alpha*_k - alpha*_{k-1}| < tol
// for 3 consecutive k).
double critical_alpha_infinity(const LinearSystem& system, double tol, double alpha_hi,
                               std::int64_t k_max = 30);

}  // namespace critscale

#endif
