#ifndef CRITSCALE_GEOMETRY_HPP
#define CRITSCALE_GEOMETRY_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "errors.hpp"

namespace critscale {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Tolerances shared by the set calculus. Inputs are assumed O(1)-O(10) scaled,
// so absolute tolerances are used throughout.
inline constexpr double kFeasTol = 1e-9;    // constraint slack for emptiness/membership
inline constexpr double kDedupTol = 1e-12;  // vertex deduplication

enum class SetKind { Box, VPolytope, HPolytope };

/// A compact convex set in one of three exact representations.
///
/// Box and VPolytope work in any dimension; HPolytope support queries and
/// vertex enumeration are exact in 1-D/2-D and rejected above that. Values
/// are immutable after construction; all operations are pure.
class ConvexSet {
 public:
  static ConvexSet box(const Vec& lower, const Vec& upper);
  static ConvexSet vpolytope(std::vector<Vec> vertices);
  static ConvexSet hpolytope(const Mat& F, const Vec& g);

  SetKind kind() const { return kind_; }
  int dim() const { return dim_; }

  // sup { z.v : v in set }
  double support(const Vec& z) const;

  bool is_empty() const;
  bool contains(const Vec& x, double tol = kFeasTol) const;

  // Explicit vertex list: Box corners, stored V-list, or 1-D/2-D H enumeration.
  std::vector<Vec> vertex_list() const;

  // H-representation access (HPolytope only). Rows are unit-normalized.
  const Mat& F() const;
  const Vec& g() const;

  ConvexSet to_hpolytope() const;  // 1-D/2-D only for V/Box inputs

  // True when support(z) == support(-z) on every probe direction (tol 1e-9).
  bool is_symmetric(int probes = 32, unsigned seed = 7u) const;

  // Origin strictly interior / contained (PC-set / C-set checks).
  bool origin_interior(double margin = kFeasTol) const;
  bool contains_origin(double tol = kFeasTol) const;

  const Vec& lower() const;
  const Vec& upper() const;

 private:
  ConvexSet() = default;
  SetKind kind_ = SetKind::Box;
  int dim_ = 0;
  Vec lower_, upper_;        // Box
  std::vector<Vec> verts_;   // VPolytope
  Mat F_;                    // HPolytope (unit rows)
  Vec g_;
  bool trivially_infeasible_ = false;  // zero-row with negative offset was dropped
};

// ---- operations of the set calculus ----

// support(s, M^T z) without materializing the image M*s.
double support_of_image(const ConvexSet& s, const Mat& M, const Vec& z);

// {x : Fx <= g - h_w(F_i)}; exact erosion of an H-polytope. May be empty.
ConvexSet minkowski_diff(const ConvexSet& p, const ConvexSet& w);

// Convex hull of pairwise vertex sums; 2-D only.
ConvexSet minkowski_sum_2d(const ConvexSet& p, const ConvexSet& q);

// {x : (F A) x <= g}; A must be square and invertible (|det| >= 1e-12).
ConvexSet preimage(const Mat& A, const ConvexSet& p);

// Concatenated rows; redundant rows pruned via vertex enumeration in 2-D.
ConvexSet intersect(const ConvexSet& p, const ConvexSet& q);

// Sufficient emptiness certificate: both upper bounds strictly negative.
bool support_pair_negativity(double h_plus, double h_minus);
using SupportFn = std::function<double(const Vec&)>;
bool support_pair_negativity(const SupportFn& h, const Vec& z);

// 2-D convex hull (Andrew monotone chain), CCW; collinear inputs collapse
// to their extreme points.
std::vector<Vec> convex_hull_2d(std::vector<Vec> pts);

}  // namespace critscale

#endif
