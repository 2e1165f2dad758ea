#include "attack.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace critscale {

namespace {

bool inside(const Interval& iv, double v) { return v >= iv.lo && v <= iv.hi; }

// Point of U attaining the extreme of phi.B u (the projected worst case).
Vec defender_worst_case_input(const LinearSystem& system, const Vec& phi, double xi) {
  const Vec c = system.B().transpose() * phi;  // upsilon = c.u
  double best = xi >= 0 ? std::numeric_limits<double>::infinity()
                        : -std::numeric_limits<double>::infinity();
  Vec arg = Vec::Zero(system.m());
  for (const Vec& u : system.U().vertex_list()) {
    const double v = c.dot(u);
    if ((xi >= 0 && v < best) || (xi < 0 && v > best)) {
      best = v;
      arg = u;
    }
  }
  return arg;
}

// Clamp a raw feedback input into U (componentwise for boxes, ray scaling
// otherwise).
Vec clamp_into_u(const ConvexSet& U, Vec u) {
  if (U.kind() == SetKind::Box) {
    for (int i = 0; i < u.size(); ++i) u(i) = std::min(std::max(u(i), U.lower()(i)), U.upper()(i));
    return u;
  }
  if (U.contains(u)) return u;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (U.contains(Vec(mid * u))) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo * u;
}

}  // namespace

ProjectedSystem project(const LinearSystem& system, const SpectralDecomposition& eig,
                        int block_index, double alpha) {
  if (block_index < 0 || block_index >= static_cast<int>(eig.blocks.size()))
    throw Error(ErrorCode::IndexOutOfRange, "project: block index");
  const JordanBlock& blk = eig.blocks[static_cast<size_t>(block_index)];
  if (blk.kind == BlockKind::ComplexPair)
    throw Error(ErrorCode::WrongBlockKind, "project: real eigenvalue block required");
  ProjectedSystem p;
  p.lambda = blk.lambda;
  p.phi = blk.phi[0];
  p.alpha = alpha;
  const ConvexSet& X = system.X();
  const ConvexSet& W = system.Wbar();
  std::vector<Vec> bu;
  for (const Vec& u : system.U().vertex_list()) bu.push_back(system.B() * u);
  const ConvexSet BU = ConvexSet::vpolytope(std::move(bu));
  p.Xi = {-X.support(Vec(-p.phi)), X.support(p.phi)};
  p.Upsilon = {-BU.support(Vec(-p.phi)), BU.support(p.phi)};
  p.Omega = {-W.support(Vec(-p.phi)), W.support(p.phi)};
  if (p.Omega.hi - p.Omega.lo < 1e-12)
    throw Error(ErrorCode::DegenerateProjection, "project: Wbar projects to a single point");
  return p;
}

GreedyStep greedy_step(const ProjectedSystem& p, double xi) {
  GreedyStep s;
  if (xi >= 0) {  // xi = 0 resolves to the positive branch
    s.omega = p.alpha * p.Omega.hi;
    s.upsilon = p.Upsilon.lo;
  } else {
    s.omega = p.alpha * p.Omega.lo;
    s.upsilon = p.Upsilon.hi;
  }
  s.xi_next = p.lambda * xi + s.upsilon + s.omega;
  return s;
}

std::int64_t default_max_steps(const ProjectedSystem& p, double xi0) {
  if (p.lambda > 1.0) {
    const double d = p.alpha * p.Omega.hi + p.Upsilon.lo;  // positive-branch drift
    if (d > 0) {
      const double fix = d / (1.0 - p.lambda);  // negative fixed point
      const double num = p.Xi.hi - fix;
      const double den = std::max(xi0, 0.0) - fix;
      if (den > 0 && num > den) {
        const double est = std::log(num / den) / std::log(p.lambda);
        return 10 * static_cast<std::int64_t>(std::ceil(est));
      }
      return 10;
    }
  }
  return 500;
}

AttackTrace simulate_scalar(const ProjectedSystem& p, double xi0, std::int64_t max_steps) {
  if (!inside(p.Xi, xi0))
    throw Error(ErrorCode::InvalidArgument, "simulate_scalar: xi0 outside Xi");
  AttackTrace tr;
  tr.mode = AttackTrace::Mode::Scalar;
  double xi = xi0;
  AttackTrace::Step s0;
  s0.k = 0;
  s0.xi = xi;
  tr.steps.push_back(s0);
  for (std::int64_t k = 1; k <= max_steps; ++k) {
    const GreedyStep g = greedy_step(p, xi);
    xi = g.xi_next;
    AttackTrace::Step st;
    st.k = k;
    st.xi = xi;
    st.omega = g.omega;
    st.upsilon = g.upsilon;
    tr.steps.push_back(st);
    if (!inside(p.Xi, xi)) {
      tr.exit_step = k;
      break;
    }
  }
  return tr;
}

Vec lift_disturbance(const LinearSystem& system, const Vec& phi, double omega, double alpha) {
  if (omega == 0.0) return Vec::Zero(system.n());
  const ConvexSet& W = system.Wbar();
  const Vec dir = omega > 0 ? phi : Vec(-phi);
  const double h = W.support(dir);
  if (std::abs(omega) > alpha * h + 1e-9)
    throw Error(ErrorCode::InfeasibleOmega, "lift_disturbance: |omega| exceeds alpha*h_Wbar");
  if (h <= 1e-12)
    throw Error(ErrorCode::InfeasibleOmega, "lift_disturbance: Wbar support vanishes");
  // support-maximizing vertex, scaled back for interior omega
  const auto verts = W.vertex_list();
  const Vec* best = &verts.front();
  for (const Vec& v : verts)
    if (dir.dot(v) > dir.dot(*best)) best = &v;
  return (std::abs(omega) / h) * (*best);
}

AttackTrace simulate_fullstate(const LinearSystem& system, const SpectralDecomposition& eig,
                               int block_index, double alpha, const Vec& x0,
                               std::int64_t max_steps, Defender defender,
                               const DefenderHook* custom) {
  const ProjectedSystem p = project(system, eig, block_index, alpha);
  if (!system.X().contains(x0))
    throw Error(ErrorCode::InvalidArgument, "simulate_fullstate: x0 outside X");
  if (defender == Defender::Custom && custom == nullptr)
    throw Error(ErrorCode::InvalidArgument, "simulate_fullstate: custom defender hook missing");

  Mat K;  // saturating feedback gain: one-step least-squares pullback
  if (defender == Defender::SaturatingFeedback) {
    K = -(system.B().transpose() * system.B()).ldlt().solve(system.B().transpose() * system.A());
  }

  AttackTrace tr;
  tr.mode = AttackTrace::Mode::FullState;
  Vec x = x0;
  AttackTrace::Step s0;
  s0.k = 0;
  s0.x = x;
  s0.xi = p.phi.dot(x);
  s0.u = Vec::Zero(system.m());
  s0.w = Vec::Zero(system.n());
  s0.in_X = true;
  tr.steps.push_back(s0);
  for (std::int64_t k = 1; k <= max_steps; ++k) {
    const double xi = p.phi.dot(x);
    Vec u;
    switch (defender) {
      case Defender::ProjectedWorstCase:
        u = defender_worst_case_input(system, p.phi, xi);
        break;
      case Defender::ZeroInput:
        u = Vec::Zero(system.m());
        break;
      case Defender::SaturatingFeedback:
        u = clamp_into_u(system.U(), Vec(K * x));
        break;
      case Defender::Custom:
        u = (*custom)(x, k);
        if (!system.U().contains(u))
          throw Error(ErrorCode::InvalidArgument, "simulate_fullstate: custom defender left U");
        break;
    }
    const double omega = xi >= 0 ? p.alpha * p.Omega.hi : p.alpha * p.Omega.lo;
    const Vec w = lift_disturbance(system, p.phi, omega, alpha);
    x = system.A() * x + system.B() * u + w;
    AttackTrace::Step st;
    st.k = k;
    st.x = x;
    st.xi = p.phi.dot(x);
    st.u = u;
    st.upsilon = p.phi.dot(system.B() * u);
    st.w = w;
    st.omega = omega;
    st.in_X = system.X().contains(x);
    if (!st.in_X && !tr.first_out_of_X) tr.first_out_of_X = k;
    tr.steps.push_back(st);
    if (!inside(p.Xi, st.xi)) {
      tr.exit_step = k;
      break;
    }
  }
  return tr;
}

bool dos_feasible(const LinearSystem& system, double alpha) {
  if (alpha < 0) return false;
  for (const Vec& u : system.U().vertex_list()) {
    const Vec w = -system.B() * u;
    // w in alpha*Wbar <=> w/alpha in Wbar (alpha = 0: only w = 0 qualifies)
    if (alpha == 0.0) {
      if (w.norm() > 1e-9) return false;
    } else if (!system.Wbar().contains(Vec(w / alpha), 1e-9)) {
      return false;
    }
  }
  return true;
}

}  // namespace critscale
