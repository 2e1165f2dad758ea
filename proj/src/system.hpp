#ifndef CRITSCALE_SYSTEM_HPP
#define CRITSCALE_SYSTEM_HPP

#include "geometry.hpp"

namespace critscale {

/// Constrained system x+ = Ax + Bu + w with x in X, u in U, w in alpha*Wbar.
///
/// X must be a PC-set. U and Wbar must contain the origin; whether the origin
/// is strictly interior is recorded in the pc flags (segment-shaped Wbar = BU
/// and the autonomous case U = {0} are admitted this way).
class LinearSystem {
 public:
  LinearSystem(Mat A, Mat B, ConvexSet X, ConvexSet U, ConvexSet Wbar);

  int n() const { return static_cast<int>(A_.rows()); }
  int m() const { return static_cast<int>(B_.cols()); }
  const Mat& A() const { return A_; }
  const Mat& B() const { return B_; }
  const ConvexSet& X() const { return X_; }
  const ConvexSet& U() const { return U_; }
  const ConvexSet& Wbar() const { return Wbar_; }
  bool wbar_is_pc() const { return wbar_pc_; }
  bool u_is_pc() const { return u_pc_; }

  // -BU as an explicit vertex polytope.
  const ConvexSet& neg_bu() const { return neg_bu_; }

 private:
  Mat A_, B_;
  ConvexSet X_, U_, Wbar_;
  ConvexSet neg_bu_;
  bool wbar_pc_ = false;
  bool u_pc_ = false;
};

}  // namespace critscale

#endif
