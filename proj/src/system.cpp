#include "system.hpp"

#include <Eigen/SVD>

namespace critscale {

namespace {

ConvexSet make_neg_bu(const Mat& B, const ConvexSet& U) {
  std::vector<Vec> verts;
  for (const Vec& u : U.vertex_list()) verts.push_back(-B * u);
  return ConvexSet::vpolytope(std::move(verts));
}

}  // namespace

LinearSystem::LinearSystem(Mat A, Mat B, ConvexSet X, ConvexSet U, ConvexSet Wbar)
    : A_(std::move(A)),
      B_(std::move(B)),
      X_(std::move(X)),
      U_(std::move(U)),
      Wbar_(std::move(Wbar)),
      neg_bu_(make_neg_bu(B_, U_)) {
  const int n = this->n();
  if (A_.cols() != n) throw Error(ErrorCode::DimensionMismatch, "system: A not square");
  if (B_.rows() != n) throw Error(ErrorCode::DimensionMismatch, "system: B row count != n");
  if (X_.dim() != n) throw Error(ErrorCode::DimensionMismatch, "system: X dimension != n");
  if (U_.dim() != m()) throw Error(ErrorCode::DimensionMismatch, "system: U dimension != m");
  if (Wbar_.dim() != n) throw Error(ErrorCode::DimensionMismatch, "system: Wbar dimension != n");

  // reachability of (A, B): rank [B AB ... A^{n-1}B] = n within 1e-8
  Mat K(n, n * m());
  Mat Ap = Mat::Identity(n, n);
  for (int i = 0; i < n; ++i) {
    K.middleCols(i * m(), m()) = Ap * B_;
    Ap = A_ * Ap;
  }
  Eigen::JacobiSVD<Mat> svd(K);
  if (svd.singularValues()(n - 1) < 1e-8)
    throw Error(ErrorCode::InvalidArgument, "system: (A, B) is not reachable");

  if (!X_.origin_interior())
    throw Error(ErrorCode::InvalidArgument, "system: X must contain the origin in its interior");
  if (!U_.contains_origin())
    throw Error(ErrorCode::InvalidArgument, "system: U must contain the origin");
  if (!Wbar_.contains_origin())
    throw Error(ErrorCode::InvalidArgument, "system: Wbar must contain the origin");
  u_pc_ = U_.origin_interior();
  wbar_pc_ = Wbar_.origin_interior();
}

}  // namespace critscale
