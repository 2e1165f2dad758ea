#ifndef CRITSCALE_SPECTRAL_HPP
#define CRITSCALE_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "geometry.hpp"

namespace critscale {

enum class BlockKind { RealPositive, RealNegative, ComplexPair };

struct RationalAngle {
  std::int64_t a = 0;  // theta = (a/b) * pi, reduced
  std::int64_t b = 1;
};

// One real Jordan block of A^T. Real kinds carry the eigenvector chain
// phi[0..size-1]; the complex kind carries the leading pair phi[0], phi[1]
// satisfying (A^l)^T [phi1 phi2] = rho^l [phi1 phi2] R(l*theta).
struct JordanBlock {
  BlockKind kind = BlockKind::RealPositive;
  double lambda = 0.0;  // real kinds
  double rho = 0.0;     // complex kind
  double theta = 0.0;   // complex kind, in (0, pi)
  int size = 1;         // chain length n_i (complex kind: 1 leading pair)
  std::vector<Vec> phi;
  std::optional<RationalAngle> angle_rational;
  std::optional<std::int64_t> period;  // M_i = 2b / gcd(a, 2b)
};

struct SpectralDecomposition {
  std::vector<JordanBlock> blocks;
  Mat A;
};

struct DeclaredBlock {
  double eig = 0.0;
  int size = 1;
};

// Real Jordan structure of A^T for n <= 8. Repeated eigenvalues require a
// declared structure; the chain equations are then solved by least squares
// and validated against residual 1e-8.
SpectralDecomposition decompose(const Mat& A,
                                const std::vector<DeclaredBlock>* declared = nullptr);

// (A^l)^T phi_{i,j} in closed form (real kinds), j is 1-based.
Vec power_direction(const JordanBlock& block, int j, std::int64_t l);

// Rotating direction psi^l_{i,j} of a complex block, j in {1,2}. l is
// reduced mod the period when the rational angle is known, making the
// periodicity exact.
Vec rotating_direction(const JordanBlock& block, int j, std::int64_t l);

// Continued-fraction detection of theta = (a/b)*pi with b <= max_denominator
// and |theta - (a/b)pi| < 1e-9.
std::optional<RationalAngle> detect_rational_angle(double theta, int max_denominator = 64);

std::int64_t period_from_angle(const RationalAngle& r);

}  // namespace critscale

#endif
