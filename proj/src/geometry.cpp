#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace critscale {

namespace {

constexpr double kZeroRow = 1e-14;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct NormalizedRows {
  Mat F;
  Vec g;
  bool infeasible = false;  // a 0 <= g row with g < -kFeasTol
};

NormalizedRows normalize_rows(const Mat& F, const Vec& g) {
  NormalizedRows out;
  std::vector<int> keep;
  Vec norms(F.rows());
  for (int i = 0; i < F.rows(); ++i) {
    norms(i) = F.row(i).norm();
    if (norms(i) < kZeroRow) {
      if (g(i) < -kFeasTol) out.infeasible = true;
    } else {
      keep.push_back(i);
    }
  }
  out.F.resize(static_cast<int>(keep.size()), F.cols());
  out.g.resize(static_cast<int>(keep.size()));
  for (int r = 0; r < static_cast<int>(keep.size()); ++r) {
    out.F.row(r) = F.row(keep[r]) / norms(keep[r]);
    out.g(r) = g(keep[r]) / norms(keep[r]);
  }
  return out;
}

struct Interval1d {
  double lo = -kInf;
  double hi = kInf;
  bool feasible = true;
};

// Fourier-Motzkin projection of {F x <= g} (2-D, unit rows) onto the x1 axis.
Interval1d fm_project_x1(const Mat& F, const Vec& g) {
  Interval1d iv;
  struct Row {
    double a, b, g;
  };
  std::vector<Row> pos, neg;
  for (int i = 0; i < F.rows(); ++i) {
    const double a = F(i, 0), b = F(i, 1), gi = g(i);
    if (std::abs(b) < kZeroRow) {
      if (a > kZeroRow) {
        iv.hi = std::min(iv.hi, gi / a);
      } else if (a < -kZeroRow) {
        iv.lo = std::max(iv.lo, gi / a);
      } else if (gi < -kFeasTol) {
        iv.feasible = false;
        return iv;
      }
    } else if (b > 0) {
      pos.push_back({a, b, gi});
    } else {
      neg.push_back({a, b, gi});
    }
  }
  for (const Row& ri : pos) {
    for (const Row& rj : neg) {
      // require L_j(x1) <= U_i(x1): (a_i b_j - a_j b_i) x1 >= b_j g_i - b_i g_j
      const double c = ri.a * rj.b - rj.a * ri.b;
      const double d = rj.b * ri.g - ri.b * rj.g;
      if (std::abs(c) < kZeroRow) {
        if (d > kFeasTol) {
          iv.feasible = false;
          return iv;
        }
      } else if (c > 0) {
        iv.lo = std::max(iv.lo, d / c);
      } else {
        iv.hi = std::min(iv.hi, d / c);
      }
    }
  }
  iv.feasible = iv.lo <= iv.hi + kFeasTol;
  return iv;
}

Interval1d project_interval_1d(const Mat& F, const Vec& g) {
  Interval1d iv;
  for (int i = 0; i < F.rows(); ++i) {
    const double a = F(i, 0);
    if (a > kZeroRow) {
      iv.hi = std::min(iv.hi, g(i) / a);
    } else if (a < -kZeroRow) {
      iv.lo = std::max(iv.lo, g(i) / a);
    } else if (g(i) < -kFeasTol) {
      iv.feasible = false;
      return iv;
    }
  }
  iv.feasible = iv.lo <= iv.hi + kFeasTol;
  return iv;
}

void dedup_points(std::vector<Vec>& pts, double tol) {
  std::vector<Vec> out;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : out) {
      if ((p - q).lpNorm<Eigen::Infinity>() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(p);
  }
  pts.swap(out);
}

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

}  // namespace

std::vector<Vec> convex_hull_2d(std::vector<Vec> pts) {
  dedup_points(pts, kDedupTol);
  if (pts.size() <= 2) return pts;
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  std::vector<Vec> hull;
  auto build = [&](auto begin, auto end) {
    const size_t base = hull.size();
    for (auto it = begin; it != end; ++it) {
      while (hull.size() >= base + 2 &&
             cross2(hull[hull.size() - 2], hull[hull.size() - 1], *it) <= 1e-18) {
        hull.pop_back();
      }
      hull.push_back(*it);
    }
    hull.pop_back();
  };
  build(pts.begin(), pts.end());
  build(pts.rbegin(), pts.rend());
  if (hull.empty()) {  // all collinear; keep the two extreme points
    return {pts.front(), pts.back()};
  }
  return hull;
}

// ---------------- ConvexSet ----------------

ConvexSet ConvexSet::box(const Vec& lower, const Vec& upper) {
  if (lower.size() != upper.size() || lower.size() == 0)
    throw Error(ErrorCode::DimensionMismatch, "box: lower/upper size mismatch");
  for (int i = 0; i < lower.size(); ++i)
    if (lower(i) > upper(i) + kDedupTol)
      throw Error(ErrorCode::InvalidArgument, "box: lower > upper");
  ConvexSet s;
  s.kind_ = SetKind::Box;
  s.dim_ = static_cast<int>(lower.size());
  s.lower_ = lower;
  s.upper_ = upper;
  return s;
}

ConvexSet ConvexSet::vpolytope(std::vector<Vec> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "vpolytope: empty vertex list");
  const int n = static_cast<int>(vertices.front().size());
  for (const Vec& v : vertices)
    if (v.size() != n) throw Error(ErrorCode::DimensionMismatch, "vpolytope: mixed dimensions");
  dedup_points(vertices, kDedupTol);
  ConvexSet s;
  s.kind_ = SetKind::VPolytope;
  s.dim_ = n;
  s.verts_ = std::move(vertices);
  return s;
}

ConvexSet ConvexSet::hpolytope(const Mat& F, const Vec& g) {
  if (F.rows() != g.size()) throw Error(ErrorCode::DimensionMismatch, "hpolytope: F/g row mismatch");
  if (F.cols() == 0) throw Error(ErrorCode::InvalidArgument, "hpolytope: zero-dimensional");
  NormalizedRows nr = normalize_rows(F, g);
  ConvexSet s;
  s.kind_ = SetKind::HPolytope;
  s.dim_ = static_cast<int>(F.cols());
  s.F_ = std::move(nr.F);
  s.g_ = std::move(nr.g);
  s.trivially_infeasible_ = nr.infeasible;
  return s;
}

const Mat& ConvexSet::F() const {
  if (kind_ != SetKind::HPolytope) throw Error(ErrorCode::InvalidArgument, "F(): not an HPolytope");
  return F_;
}

const Vec& ConvexSet::g() const {
  if (kind_ != SetKind::HPolytope) throw Error(ErrorCode::InvalidArgument, "g(): not an HPolytope");
  return g_;
}

const Vec& ConvexSet::lower() const {
  if (kind_ != SetKind::Box) throw Error(ErrorCode::InvalidArgument, "lower(): not a Box");
  return lower_;
}

const Vec& ConvexSet::upper() const {
  if (kind_ != SetKind::Box) throw Error(ErrorCode::InvalidArgument, "upper(): not a Box");
  return upper_;
}

double ConvexSet::support(const Vec& z) const {
  if (z.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "support: direction dimension");
  if (!z.allFinite()) throw Error(ErrorCode::InvalidArgument, "support: non-finite direction");
  switch (kind_) {
    case SetKind::Box: {
      double h = 0;
      for (int i = 0; i < dim_; ++i) h += std::max(z(i) * lower_(i), z(i) * upper_(i));
      return h;
    }
    case SetKind::VPolytope: {
      double h = -kInf;
      for (const Vec& v : verts_) h = std::max(h, z.dot(v));
      return h;
    }
    case SetKind::HPolytope: {
      if (is_empty()) throw Error(ErrorCode::InvalidArgument, "support: empty set");
      const double nz = z.norm();
      if (nz < kZeroRow) return 0.0;
      if (dim_ == 1) {
        Interval1d iv = project_interval_1d(F_, g_);
        const double h = z(0) > 0 ? z(0) * iv.hi : z(0) * iv.lo;
        if (!std::isfinite(h)) throw Error(ErrorCode::UnboundedSet, "support: unbounded direction");
        return h;
      }
      if (dim_ != 2)
        throw Error(ErrorCode::DimensionUnsupported,
                    "support: HPolytope supported only in dimension <= 2");
      // rotate so that z/|z| becomes e1, then project onto x1
      Mat Q(2, 2);
      Q << z(0) / nz, z(1) / nz, -z(1) / nz, z(0) / nz;
      Interval1d iv = fm_project_x1(F_ * Q.transpose(), g_);
      if (!std::isfinite(iv.hi)) throw Error(ErrorCode::UnboundedSet, "support: unbounded direction");
      return nz * iv.hi;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "support: bad kind");
}

bool ConvexSet::is_empty() const {
  switch (kind_) {
    case SetKind::Box:
    case SetKind::VPolytope:
      return false;  // construction guarantees non-emptiness
    case SetKind::HPolytope: {
      if (trivially_infeasible_) return true;
      if (F_.rows() == 0) return false;  // whole space
      if (dim_ == 1) return !project_interval_1d(F_, g_).feasible;
      if (dim_ != 2)
        throw Error(ErrorCode::DimensionUnsupported,
                    "is_empty: HPolytope supported only in dimension <= 2");
      return !fm_project_x1(F_, g_).feasible;
    }
  }
  return false;
}

bool ConvexSet::contains(const Vec& x, double tol) const {
  if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "contains: point dimension");
  switch (kind_) {
    case SetKind::Box:
      for (int i = 0; i < dim_; ++i)
        if (x(i) < lower_(i) - tol || x(i) > upper_(i) + tol) return false;
      return true;
    case SetKind::HPolytope:
      if (trivially_infeasible_) return false;
      return ((F_ * x - g_).array() <= tol).all();
    case SetKind::VPolytope: {
      if (dim_ == 1) {
        double lo = kInf, hi = -kInf;
        for (const Vec& v : verts_) {
          lo = std::min(lo, v(0));
          hi = std::max(hi, v(0));
        }
        return x(0) >= lo - tol && x(0) <= hi + tol;
      }
      if (dim_ == 2) {
        ConvexSet h = to_hpolytope();
        return h.contains(x, tol);
      }
      throw Error(ErrorCode::DimensionUnsupported, "contains: VPolytope dimension > 2");
    }
  }
  return false;
}

std::vector<Vec> ConvexSet::vertex_list() const {
  switch (kind_) {
    case SetKind::Box: {
      if (dim_ > 16) throw Error(ErrorCode::UnsupportedSize, "vertex_list: box dimension too large");
      std::vector<Vec> out;
      out.reserve(size_t{1} << dim_);
      for (size_t m = 0; m < (size_t{1} << dim_); ++m) {
        Vec v(dim_);
        for (int i = 0; i < dim_; ++i) v(i) = (m >> i) & 1 ? upper_(i) : lower_(i);
        out.push_back(v);
      }
      dedup_points(out, kDedupTol);
      return out;
    }
    case SetKind::VPolytope:
      return verts_;
    case SetKind::HPolytope: {
      if (is_empty()) return {};
      if (dim_ == 1) {
        Interval1d iv = project_interval_1d(F_, g_);
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
          throw Error(ErrorCode::UnboundedSet, "vertex_list: unbounded interval");
        Vec a(1), b(1);
        a << iv.lo;
        b << iv.hi;
        std::vector<Vec> out{a, b};
        dedup_points(out, kDedupTol);
        return out;
      }
      if (dim_ != 2)
        throw Error(ErrorCode::DimensionUnsupported, "vertex_list: HPolytope dimension > 2");
      std::vector<Vec> out;
      const int p = static_cast<int>(F_.rows());
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
          const double det = F_(i, 0) * F_(j, 1) - F_(i, 1) * F_(j, 0);
          if (std::abs(det) < 1e-12) continue;
          Vec x(2);
          x(0) = (g_(i) * F_(j, 1) - g_(j) * F_(i, 1)) / det;
          x(1) = (F_(i, 0) * g_(j) - F_(j, 0) * g_(i)) / det;
          if (((F_ * x - g_).array() <= kFeasTol).all()) out.push_back(x);
        }
      }
      dedup_points(out, 1e-9);
      return out;
    }
  }
  return {};
}

ConvexSet ConvexSet::to_hpolytope() const {
  switch (kind_) {
    case SetKind::HPolytope:
      return *this;
    case SetKind::Box: {
      Mat F(2 * dim_, dim_);
      Vec g(2 * dim_);
      F.topRows(dim_) = Mat::Identity(dim_, dim_);
      F.bottomRows(dim_) = -Mat::Identity(dim_, dim_);
      g.head(dim_) = upper_;
      g.tail(dim_) = -lower_;
      return hpolytope(F, g);
    }
    case SetKind::VPolytope: {
      if (dim_ == 1) {
        double lo = kInf, hi = -kInf;
        for (const Vec& v : verts_) {
          lo = std::min(lo, v(0));
          hi = std::max(hi, v(0));
        }
        Mat F(2, 1);
        F << 1, -1;
        Vec g(2);
        g << hi, -lo;
        return hpolytope(F, g);
      }
      if (dim_ != 2)
        throw Error(ErrorCode::DimensionUnsupported, "to_hpolytope: VPolytope dimension > 2");
      std::vector<Vec> hull = convex_hull_2d(verts_);
      if (hull.size() == 1) {
        const Vec& p = hull[0];
        Mat F(4, 2);
        F << 1, 0, -1, 0, 0, 1, 0, -1;
        Vec g(4);
        g << p(0), -p(0), p(1), -p(1);
        return hpolytope(F, g);
      }
      if (hull.size() == 2) {
        Vec d = hull[1] - hull[0];
        d /= d.norm();
        Vec n(2);
        n << d(1), -d(0);
        Mat F(4, 2);
        F.row(0) = n.transpose();
        F.row(1) = -n.transpose();
        F.row(2) = d.transpose();
        F.row(3) = -d.transpose();
        Vec g(4);
        g << n.dot(hull[0]), -n.dot(hull[0]), d.dot(hull[1]), -d.dot(hull[0]);
        return hpolytope(F, g);
      }
      const int m = static_cast<int>(hull.size());
      Mat F(m, 2);
      Vec g(m);
      for (int i = 0; i < m; ++i) {
        const Vec& a = hull[i];
        const Vec& b = hull[(i + 1) % m];
        Vec n(2);
        n << b(1) - a(1), a(0) - b(0);  // outward for a CCW hull
        n /= n.norm();
        F.row(i) = n.transpose();
        g(i) = n.dot(a);
      }
      return hpolytope(F, g);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "to_hpolytope: bad kind");
}

bool ConvexSet::is_symmetric(int probes, unsigned seed) const {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < probes; ++t) {
    Vec z(dim_);
    for (int i = 0; i < dim_; ++i) z(i) = gauss(rng);
    if (z.norm() < 1e-6) continue;
    if (std::abs(support(z) - support(Vec(-z))) > 1e-9) return false;
  }
  return true;
}

bool ConvexSet::origin_interior(double margin) const {
  switch (kind_) {
    case SetKind::Box:
      return (lower_.array() < -margin).all() && (upper_.array() > margin).all();
    case SetKind::HPolytope:
      if (is_empty()) return false;
      return (g_.array() > margin).all();  // unit rows: offset is the distance
    case SetKind::VPolytope: {
      if (dim_ <= 2) return to_hpolytope().origin_interior(margin);
      // above 2-D only the bounding-box relaxation is checked
      Vec lo = verts_.front(), hi = verts_.front();
      for (const Vec& v : verts_) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
      }
      return (lo.array() < -margin).all() && (hi.array() > margin).all();
    }
  }
  return false;
}

bool ConvexSet::contains_origin(double tol) const { return contains(Vec::Zero(dim_), tol); }

// ---------------- free operations ----------------

double support_of_image(const ConvexSet& s, const Mat& M, const Vec& z) {
  if (M.rows() != z.size() || M.cols() != s.dim())
    throw Error(ErrorCode::DimensionMismatch, "support_of_image: incompatible dimensions");
  return s.support(M.transpose() * z);
}

ConvexSet minkowski_diff(const ConvexSet& p, const ConvexSet& w) {
  const ConvexSet ph = p.kind() == SetKind::HPolytope ? p : p.to_hpolytope();
  if (ph.dim() != w.dim())
    throw Error(ErrorCode::DimensionMismatch, "minkowski_diff: dimension mismatch");
  Vec g2(ph.g().size());
  for (int i = 0; i < ph.F().rows(); ++i) g2(i) = ph.g()(i) - w.support(ph.F().row(i).transpose());
  return ConvexSet::hpolytope(ph.F(), g2);
}

ConvexSet minkowski_sum_2d(const ConvexSet& p, const ConvexSet& q) {
  if (p.dim() != 2 || q.dim() != 2)
    throw Error(ErrorCode::DimensionMismatch, "minkowski_sum_2d: operands must be 2-D");
  std::vector<Vec> sums;
  const auto vp = p.vertex_list();
  const auto vq = q.vertex_list();
  if (vp.empty() || vq.empty())
    throw Error(ErrorCode::InvalidArgument, "minkowski_sum_2d: empty operand");
  sums.reserve(vp.size() * vq.size());
  for (const Vec& a : vp)
    for (const Vec& b : vq) sums.push_back(a + b);
  return ConvexSet::vpolytope(convex_hull_2d(std::move(sums)));
}

ConvexSet preimage(const Mat& A, const ConvexSet& p) {
  if (A.rows() != A.cols() || A.rows() != p.dim())
    throw Error(ErrorCode::DimensionMismatch, "preimage: A must be square of the set dimension");
  if (std::abs(A.determinant()) < 1e-12)
    throw Error(ErrorCode::SingularMatrix, "preimage: |det A| < 1e-12");
  const ConvexSet ph = p.kind() == SetKind::HPolytope ? p : p.to_hpolytope();
  return ConvexSet::hpolytope(ph.F() * A, ph.g());
}

ConvexSet intersect(const ConvexSet& p, const ConvexSet& q) {
  if (p.dim() != q.dim()) throw Error(ErrorCode::DimensionMismatch, "intersect: dimension mismatch");
  const ConvexSet ph = p.kind() == SetKind::HPolytope ? p : p.to_hpolytope();
  const ConvexSet qh = q.kind() == SetKind::HPolytope ? q : q.to_hpolytope();
  Mat F(ph.F().rows() + qh.F().rows(), ph.dim());
  Vec g(F.rows());
  F.topRows(ph.F().rows()) = ph.F();
  F.bottomRows(qh.F().rows()) = qh.F();
  g.head(ph.g().size()) = ph.g();
  g.tail(qh.g().size()) = qh.g();
  ConvexSet raw = ConvexSet::hpolytope(F, g);
  if (raw.dim() != 2 || raw.is_empty()) return raw;
  // prune rows inactive at every vertex, and duplicate rows
  const auto vs = raw.vertex_list();
  if (vs.empty()) return raw;
  std::vector<int> keep;
  for (int i = 0; i < raw.F().rows(); ++i) {
    bool dup = false;
    for (int j : keep) {
      if ((raw.F().row(i) - raw.F().row(j)).norm() <= kDedupTol &&
          std::abs(raw.g()(i) - raw.g()(j)) <= kDedupTol) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    for (const Vec& v : vs) {
      if (std::abs(raw.F().row(i).dot(v) - raw.g()(i)) <= 1e-7) {
        keep.push_back(i);
        break;
      }
    }
  }
  Mat Fk(static_cast<int>(keep.size()), 2);
  Vec gk(static_cast<int>(keep.size()));
  for (size_t r = 0; r < keep.size(); ++r) {
    Fk.row(static_cast<int>(r)) = raw.F().row(keep[r]);
    gk(static_cast<int>(r)) = raw.g()(keep[r]);
  }
  return ConvexSet::hpolytope(Fk, gk);
}

bool support_pair_negativity(double h_plus, double h_minus) {
  return h_plus < 0.0 && h_minus < 0.0;
}

bool support_pair_negativity(const SupportFn& h, const Vec& z) {
  return support_pair_negativity(h(z), h(Vec(-z)));
}

}  // namespace critscale
