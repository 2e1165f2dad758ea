#include "reach.hpp"

#include <cmath>

namespace critscale {

namespace {

constexpr int kVertexCap = 512;

void require_2d(const LinearSystem& system, const char* who) {
  if (system.n() != 2)
    throw Error(ErrorCode::DimensionUnsupported, std::string(who) + ": oracle is 2-D only");
}

ConvexSet scale_set(const ConvexSet& s, double alpha) {
  std::vector<Vec> vs;
  for (const Vec& v : s.vertex_list()) vs.push_back(alpha * v);
  return ConvexSet::vpolytope(std::move(vs));
}

}  // namespace

ConvexSet c_step(const LinearSystem& system, const ConvexSet& current, double alpha) {
  require_2d(system, "c_step");
  if (std::abs(system.A().determinant()) < 1e-12)
    throw Error(ErrorCode::SingularMatrix, "c_step: A is singular");
  const ConvexSet cur_h = current.kind() == SetKind::HPolytope ? current : current.to_hpolytope();
  // erode by alpha*Wbar (exact on the H-representation)
  Vec g2(cur_h.g().size());
  for (int i = 0; i < cur_h.F().rows(); ++i)
    g2(i) = cur_h.g()(i) - alpha * system.Wbar().support(cur_h.F().row(i).transpose());
  ConvexSet eroded = ConvexSet::hpolytope(cur_h.F(), g2);
  if (eroded.is_empty()) return eroded;
  const auto verts = eroded.vertex_list();
  if (verts.empty())
    throw Error(ErrorCode::NumericalFailure, "c_step: nonempty iterate without vertices");
  if (static_cast<int>(verts.size()) > kVertexCap)
    throw Error(ErrorCode::ComplexityCap, "c_step: iterate vertex count exceeds 512");
  const ConvexSet summed = minkowski_sum_2d(ConvexSet::vpolytope(verts), system.neg_bu());
  const ConvexSet pre = preimage(system.A(), summed.to_hpolytope());
  return intersect(pre, system.X());
}

ReachResult c_sequence(const LinearSystem& system, double alpha, std::int64_t k_max) {
  require_2d(system, "c_sequence");
  ReachResult out;
  out.alpha = alpha;
  out.sets.push_back(system.X().to_hpolytope());
  for (std::int64_t k = 1; k <= k_max; ++k) {
    ConvexSet next = c_step(system, out.sets.back(), alpha);
    if (next.is_empty()) {
      out.first_empty = k;
      return out;
    }
    out.sets.push_back(std::move(next));
  }
  return out;
}

std::vector<ConvexSet> t_sequence(const LinearSystem& system, double alpha, std::int64_t k_max) {
  require_2d(system, "t_sequence");
  std::vector<ConvexSet> out;
  out.push_back(system.X().to_hpolytope());
  Mat Ak = Mat::Identity(2, 2);
  for (std::int64_t k = 0; k < k_max; ++k) {
    const ConvexSet& T = out.back();
    if (T.kind() == SetKind::HPolytope && T.is_empty()) break;
    const ConvexSet Th = T.kind() == SetKind::HPolytope ? T : T.to_hpolytope();
    // erode by A^k (alpha Wbar): h_{A^k W}(F_i) = alpha h_W((A^k)^T F_i)
    Vec g2(Th.g().size());
    for (int i = 0; i < Th.F().rows(); ++i)
      g2(i) = Th.g()(i) - alpha * system.Wbar().support(Ak.transpose() * Th.F().row(i).transpose());
    ConvexSet eroded = ConvexSet::hpolytope(Th.F(), g2);
    if (eroded.is_empty()) {
      out.push_back(std::move(eroded));
      break;
    }
    const auto verts = eroded.vertex_list();
    if (static_cast<int>(verts.size()) > kVertexCap)
      throw Error(ErrorCode::ComplexityCap, "t_sequence: iterate vertex count exceeds 512");
    // add A^k(-BU)
    std::vector<Vec> shift_verts;
    for (const Vec& v : system.neg_bu().vertex_list()) shift_verts.push_back(Ak * v);
    ConvexSet next =
        minkowski_sum_2d(ConvexSet::vpolytope(verts), ConvexSet::vpolytope(shift_verts))
            .to_hpolytope();
    out.push_back(std::move(next));
    Ak = system.A() * Ak;
  }
  return out;
}

SupportEmptiness s_emptiness(const LinearSystem& system, const Vec& z, double alpha,
                             std::int64_t k) {
  SupportEmptiness out;
  auto rhs = [&](const Vec& dir) {
    double acc = system.X().support(dir);
    Vec zl = dir;
    for (std::int64_t l = 0; l <= k - 1; ++l) {
      if (l <= k - 2) acc += system.neg_bu().support(zl);
      acc -= alpha * system.Wbar().support(zl);
      zl = system.A().transpose() * zl;
    }
    return acc;
  };
  out.rhs_plus = rhs(z);
  out.rhs_minus = rhs(Vec(-z));
  out.certified_empty = support_pair_negativity(out.rhs_plus, out.rhs_minus);
  return out;
}

ConvexSet s_set_2d(const LinearSystem& system, double alpha, std::int64_t k) {
  require_2d(system, "s_set_2d");
  // X + sum_{l<=k-2} A^l(-BU), then erode by sum_{l<=k-1} A^l(alpha Wbar)
  ConvexSet acc = ConvexSet::vpolytope(system.X().vertex_list());
  Mat Al = Mat::Identity(2, 2);
  for (std::int64_t l = 0; l <= k - 2; ++l) {
    std::vector<Vec> vs;
    for (const Vec& v : system.neg_bu().vertex_list()) vs.push_back(Al * v);
    acc = minkowski_sum_2d(acc, ConvexSet::vpolytope(vs));
    Al = system.A() * Al;
  }
  ConvexSet acc_h = acc.to_hpolytope();
  Vec g2 = acc_h.g();
  Al = Mat::Identity(2, 2);
  for (std::int64_t l = 0; l <= k - 1; ++l) {
    for (int i = 0; i < acc_h.F().rows(); ++i)
      g2(i) -= alpha * system.Wbar().support(Al.transpose() * acc_h.F().row(i).transpose());
    Al = system.A() * Al;
  }
  return ConvexSet::hpolytope(acc_h.F(), g2);
}

double critical_alpha(const LinearSystem& system, std::int64_t k, double tol, double alpha_hi) {
  require_2d(system, "critical_alpha");
  if (tol <= 0) throw Error(ErrorCode::InvalidArgument, "critical_alpha: tol must be positive");
  auto empty_by_k = [&](double a) {
    const ReachResult r = c_sequence(system, a, k);
    return r.first_empty.has_value() && *r.first_empty <= k;
  };
  if (!empty_by_k(alpha_hi))
    throw Error(ErrorCode::UpperBoundNotEmpty, "critical_alpha: alpha_hi does not empty C_k");
  double lo = 0.0, hi = alpha_hi;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (empty_by_k(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // spot-verify emptiness monotonicity in alpha on nested pairs
  const double star = 0.5 * (lo + hi);
  for (int i = 1; i <= 10; ++i) {
    const double a_low = star * i / 12.0;
    const double a_high = a_low + (alpha_hi - a_low) * 0.5;
    if (empty_by_k(a_low) && !empty_by_k(a_high))
      throw Error(ErrorCode::MonotonicityViolation,
                  "critical_alpha: emptiness is not monotone in alpha");
  }
  return star;
}

double critical_alpha_infinity(const LinearSystem& system, double tol, double alpha_hi,
                               std::int64_t k_max) {
  double prev = critical_alpha(system, 2, tol, alpha_hi);
  int flat = 0;
  for (std::int64_t k = 3; k <= k_max; ++k) {
    const double cur = critical_alpha(system, k, tol, alpha_hi);
    flat = std::abs(cur - prev) < tol ? flat + 1 : 0;
    prev = cur;
    if (flat >= 3) break;
  }
  return prev;
}

bool autonomous_equality_check(const LinearSystem& system, double alpha, std::int64_t k) {
  require_2d(system, "autonomous_equality_check");
  for (const Vec& u : system.U().vertex_list())
    if (u.norm() > 1e-12)
      throw Error(ErrorCode::InvalidArgument, "autonomous_equality_check: U must be {0}");
  const ReachResult r = c_sequence(system, alpha, k);

  // right-hand side: intersection over l of A^{-l}(X erode R_{l-1}),
  // R_{l-1} = sum_{j=0}^{l-1} A^j (alpha Wbar)
  const ConvexSet Xh = system.X().to_hpolytope();
  const int p = static_cast<int>(Xh.F().rows());
  Mat F(static_cast<int>((k + 1) * p), 2);
  Vec g(F.rows());
  Mat Al = Mat::Identity(2, 2);
  std::vector<double> erosion(p, 0.0);
  Mat Aj = Mat::Identity(2, 2);
  std::int64_t filled = 0;
  for (std::int64_t l = 0; l <= k; ++l) {
    for (int i = 0; i < p; ++i) {
      F.row(static_cast<int>(filled)) = Xh.F().row(i) * Al;
      g(static_cast<int>(filled)) = Xh.g()(i) - erosion[static_cast<size_t>(i)];
      ++filled;
    }
    // extend the erosion to R_l for the next round
    for (int i = 0; i < p; ++i)
      erosion[static_cast<size_t>(i)] +=
          alpha * system.Wbar().support(Aj.transpose() * Xh.F().row(i).transpose());
    Aj = system.A() * Aj;
    Al = system.A() * Al;
  }
  const ConvexSet rhs = ConvexSet::hpolytope(F, g);

  const bool lhs_empty = r.first_empty.has_value() && *r.first_empty <= k;
  const bool rhs_empty = rhs.is_empty();
  if (lhs_empty || rhs_empty) return lhs_empty == rhs_empty;

  const ConvexSet& Ck = r.sets.back();
  for (int d = 0; d < 64; ++d) {
    const double t = 2.0 * M_PI * d / 64.0;
    Vec z(2);
    z << std::cos(t), std::sin(t);
    if (std::abs(Ck.support(z) - rhs.support(z)) > 1e-7) return false;
  }
  return true;
}

}  // namespace critscale
