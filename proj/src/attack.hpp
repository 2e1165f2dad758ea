#ifndef CRITSCALE_ATTACK_HPP
#define CRITSCALE_ATTACK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spectral.hpp"
#include "system.hpp"

namespace critscale {

struct Interval {
  double lo = 0, hi = 0;
};

// Scalar shadow of the dynamics along a real left eigenvector phi:
// xi_{k+1} = lambda xi_k + upsilon_k + omega_k with xi = phi.x.
struct ProjectedSystem {
  double lambda = 0;
  Vec phi;
  Interval Xi;       // phi.X
  Interval Upsilon;  // phi.BU
  Interval Omega;    // phi.Wbar (unscaled)
  double alpha = 0;
};

ProjectedSystem project(const LinearSystem& system, const SpectralDecomposition& eig,
                        int block_index, double alpha);

struct GreedyStep {
  double omega = 0;
  double upsilon = 0;
  double xi_next = 0;
};

// Greedy attacker (extreme disturbance aligned with sign(xi)) against the
// worst-case defender (extreme input pushing back). xi = 0 takes the
// positive branch.
GreedyStep greedy_step(const ProjectedSystem& p, double xi);

struct AttackTrace {
  enum class Mode { Scalar, FullState };
  struct Step {
    std::int64_t k = 0;
    double xi = 0, omega = 0, upsilon = 0;
    Vec x, u, w;       // full-state mode only
    bool in_X = true;  // full-state mode only
  };
  Mode mode = Mode::Scalar;
  std::vector<Step> steps;                      // step 0 is the initial state
  std::optional<std::int64_t> exit_step;        // first k with |xi| outside Xi
  std::optional<std::int64_t> first_out_of_X;   // full-state mode: first k with x not in X
};

AttackTrace simulate_scalar(const ProjectedSystem& p, double xi0, std::int64_t max_steps);

// Realizes a scalar omega as w in alpha*Wbar with phi.w = omega, on the ray
// through the support-maximizing vertex.
Vec lift_disturbance(const LinearSystem& system, const Vec& phi, double omega, double alpha);

// Defender policy u_k(x_k, k) returning a point of U.
using DefenderHook = std::function<Vec(const Vec&, std::int64_t)>;

enum class Defender { ProjectedWorstCase, ZeroInput, SaturatingFeedback, Custom };

AttackTrace simulate_fullstate(const LinearSystem& system, const SpectralDecomposition& eig,
                               int block_index, double alpha, const Vec& x0,
                               std::int64_t max_steps, Defender defender,
                               const DefenderHook* custom = nullptr);

// Default step budget: 10x the analytic exit estimate when lambda > 1 and the
// greedy drift is positive, otherwise 500.
std::int64_t default_max_steps(const ProjectedSystem& p, double xi0);

// True iff -BU is contained in alpha*Wbar, so w = -Bu(x) is always admissible.
bool dos_feasible(const LinearSystem& system, double alpha);

}  // namespace critscale

#endif
