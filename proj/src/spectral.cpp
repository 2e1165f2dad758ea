#include "spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace critscale {

namespace {

constexpr double kClusterTol = 1e-7;   // eigenvalues closer than this count as repeated
constexpr double kResidualTol = 1e-8;  // chain / rotation equation residuals
constexpr double kZeroEig = 1e-12;

Mat rotation2(double t) {
  Mat R(2, 2);
  R << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return R;
}

// Unit-norm kernel basis of (A^T - lambda I), smallest singular directions first.
std::vector<Vec> null_space(const Mat& M, int count) {
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  std::vector<Vec> out;
  const int n = static_cast<int>(M.cols());
  for (int i = 0; i < count; ++i) out.push_back(svd.matrixV().col(n - 1 - i));
  return out;
}

void fix_sign(Vec& v) {
  int imax = 0;
  for (int i = 1; i < v.size(); ++i)
    if (std::abs(v(i)) > std::abs(v(imax))) imax = i;
  if (v(imax) < 0) v = -v;
}

JordanBlock make_real_chain(const Mat& At, double lambda, int size, const Vec& start) {
  JordanBlock b;
  b.kind = lambda > 0 ? BlockKind::RealPositive : BlockKind::RealNegative;
  b.lambda = lambda;
  b.size = size;
  Vec phi1 = start;
  phi1 /= phi1.norm();
  fix_sign(phi1);
  const Mat S = At - lambda * Mat::Identity(At.rows(), At.cols());
  if ((S * phi1).norm() > kResidualTol)
    throw Error(ErrorCode::ResidualTooLarge, "eigenvector equation residual exceeds 1e-8");
  b.phi.push_back(phi1);
  for (int j = 2; j <= size; ++j) {
    // minimal-norm least-squares solution of S phi_j = phi_{j-1}
    Vec phij = S.completeOrthogonalDecomposition().solve(b.phi.back());
    if ((S * phij - b.phi.back()).norm() > kResidualTol)
      throw Error(ErrorCode::ResidualTooLarge, "generalized eigenvector residual exceeds 1e-8");
    b.phi.push_back(phij);
  }
  return b;
}

JordanBlock make_complex_pair(const Mat& At, std::complex<double> lambda, const Eigen::VectorXcd& v) {
  JordanBlock b;
  b.kind = BlockKind::ComplexPair;
  b.rho = std::abs(lambda);
  b.theta = std::atan2(std::abs(lambda.imag()), lambda.real());
  if (b.rho < kZeroEig)
    throw Error(ErrorCode::ZeroEigenvalueUnsupported, "zero-magnitude complex eigenvalue");
  Vec phi1 = v.real();
  Vec phi2 = -v.imag();
  if (lambda.imag() < 0) phi2 = -phi2;  // use the Im > 0 representative
  // Rotate within the eigenplane so both vectors share a norm, then scale to
  // unit length; such rotations preserve the pair relation.
  const double P = phi1.squaredNorm() - phi2.squaredNorm();
  const double Q = 2.0 * phi1.dot(phi2);
  const double delta = 0.5 * std::atan2(P, Q);
  const double c = std::cos(delta), s = std::sin(delta);
  Vec p1 = c * phi1 - s * phi2;
  Vec p2 = c * phi2 + s * phi1;
  const double nrm = p1.norm();
  if (nrm < 1e-12 || p2.norm() < 1e-12)
    throw Error(ErrorCode::NumericalFailure, "degenerate complex eigenplane");
  p1 /= nrm;
  p2 /= p2.norm();
  int imax = 0;
  for (int i = 1; i < p1.size(); ++i)
    if (std::abs(p1(i)) > std::abs(p1(imax))) imax = i;
  if (p1(imax) < 0) {
    p1 = -p1;
    p2 = -p2;
  }
  b.phi = {p1, p2};
  // validate the rotation relation for l = 1..3
  Mat pair(At.rows(), 2);
  pair.col(0) = p1;
  pair.col(1) = p2;
  Mat Al = Mat::Identity(At.rows(), At.cols());
  for (int l = 1; l <= 3; ++l) {
    Al = At * Al;
    const double scale = std::max(1.0, std::pow(b.rho, l));
    if ((Al * pair - std::pow(b.rho, l) * pair * rotation2(l * b.theta)).norm() >
        kResidualTol * scale)
      throw Error(ErrorCode::ResidualTooLarge, "complex pair rotation residual exceeds 1e-8");
  }
  b.angle_rational = detect_rational_angle(b.theta);
  if (b.angle_rational) b.period = period_from_angle(*b.angle_rational);
  return b;
}

}  // namespace

std::optional<RationalAngle> detect_rational_angle(double theta, int max_denominator) {
  if (!(theta > 0.0 && theta < M_PI)) return std::nullopt;
  const double x = theta / M_PI;  // in (0,1)
  // continued-fraction convergents of x
  double frac = x;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(frac);
    const std::int64_t ai = static_cast<std::int64_t>(a);
    const std::int64_t p2 = ai * p1 + p0;
    const std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    if (q1 >= 1 && std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-9 / M_PI) {
      const std::int64_t g = std::gcd(p1, q1);
      return RationalAngle{p1 / g, q1 / g};
    }
    const double rem = frac - a;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  return std::nullopt;
}

std::int64_t period_from_angle(const RationalAngle& r) {
  return 2 * r.b / std::gcd(r.a, 2 * r.b);
}

SpectralDecomposition decompose(const Mat& A, const std::vector<DeclaredBlock>* declared) {
  const int n = static_cast<int>(A.rows());
  if (A.cols() != n) throw Error(ErrorCode::DimensionMismatch, "decompose: A not square");
  if (n < 1 || n > 8) throw Error(ErrorCode::UnsupportedSize, "decompose: n must be in [1,8]");
  const Mat At = A.transpose();
  Eigen::EigenSolver<Mat> es(At);
  if (es.info() != Eigen::Success)
    throw Error(ErrorCode::NumericalFailure, "decompose: eigensolver failed");

  struct Item {
    std::complex<double> lambda;
    int col;
    bool used = false;
  };
  std::vector<Item> items;
  for (int i = 0; i < n; ++i) items.push_back({es.eigenvalues()(i), i});

  // cluster within tolerance; conjugates of a complex pair are one cluster
  struct Cluster {
    std::complex<double> lambda;  // representative, Im >= 0
    std::vector<int> cols;
    bool complex_pair = false;
  };
  std::vector<Cluster> clusters;
  for (auto& it : items) {
    if (it.used) continue;
    Cluster c;
    const bool is_complex = std::abs(it.lambda.imag()) > 1e-9;
    c.complex_pair = is_complex;
    c.lambda = is_complex && it.lambda.imag() < 0 ? std::conj(it.lambda) : it.lambda;
    for (auto& other : items) {
      if (other.used) continue;
      const std::complex<double> rep =
          is_complex && other.lambda.imag() < 0 ? std::conj(other.lambda) : other.lambda;
      if (std::abs(rep - c.lambda) < kClusterTol &&
          (std::abs(other.lambda.imag()) > 1e-9) == is_complex) {
        other.used = true;
        c.cols.push_back(other.col);
      }
    }
    clusters.push_back(std::move(c));
  }
  std::sort(clusters.begin(), clusters.end(), [](const Cluster& a, const Cluster& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() > b.lambda.real();
    return std::abs(a.lambda.imag()) < std::abs(b.lambda.imag());
  });

  SpectralDecomposition out;
  out.A = A;
  int dim_sum = 0;
  for (const Cluster& c : clusters) {
    if (c.complex_pair) {
      if (c.cols.size() != 2)
        throw Error(ErrorCode::StructureRequired,
                    "repeated complex eigenvalues are not supported");
      out.blocks.push_back(make_complex_pair(At, c.lambda, es.eigenvectors().col(c.cols[0])));
      dim_sum += 2;
      continue;
    }
    const double lambda = c.lambda.real();
    if (std::abs(lambda) < kZeroEig)
      throw Error(ErrorCode::ZeroEigenvalueUnsupported, "zero eigenvalue is not supported");
    const int mult = static_cast<int>(c.cols.size());
    if (mult == 1) {
      const Mat S = At - lambda * Mat::Identity(n, n);
      out.blocks.push_back(make_real_chain(At, lambda, 1, null_space(S, 1)[0]));
      dim_sum += 1;
      continue;
    }
    if (!declared)
      throw Error(ErrorCode::StructureRequired,
                  "repeated eigenvalue: declared (eigenvalue, size) structure required");
    std::vector<const DeclaredBlock*> mine;
    int declared_sum = 0;
    for (const DeclaredBlock& d : *declared) {
      if (std::abs(d.eig - lambda) < kClusterTol) {
        mine.push_back(&d);
        declared_sum += d.size;
      }
    }
    if (declared_sum != mult)
      throw Error(ErrorCode::StructureRequired,
                  "declared block sizes do not match the eigenvalue multiplicity");
    const Mat S = At - lambda * Mat::Identity(n, n);
    auto starts = null_space(S, static_cast<int>(mine.size()));
    for (size_t bi = 0; bi < mine.size(); ++bi) {
      out.blocks.push_back(make_real_chain(At, lambda, mine[bi]->size, starts[bi]));
      dim_sum += mine[bi]->size;
    }
  }
  if (dim_sum != n)
    throw Error(ErrorCode::NumericalFailure, "decompose: block sizes do not sum to n");
  return out;
}

Vec power_direction(const JordanBlock& block, int j, std::int64_t l) {
  if (block.kind == BlockKind::ComplexPair)
    throw Error(ErrorCode::WrongBlockKind, "power_direction: real block required");
  if (j < 1 || j > block.size) throw Error(ErrorCode::IndexOutOfRange, "power_direction: j");
  if (l < 0) throw Error(ErrorCode::IndexOutOfRange, "power_direction: l must be >= 0");
  Vec out = Vec::Zero(block.phi[0].size());
  for (int p = 0; p <= j - 1; ++p) {
    if (p > l) break;  // binom(l, p) = 0
    double binom = 1.0;
    for (int q = 1; q <= p; ++q) binom *= static_cast<double>(l - q + 1) / q;
    out += binom * std::pow(block.lambda, static_cast<double>(l - p)) * block.phi[j - 1 - p];
  }
  return out;
}

Vec rotating_direction(const JordanBlock& block, int j, std::int64_t l) {
  if (block.kind != BlockKind::ComplexPair)
    throw Error(ErrorCode::WrongBlockKind, "rotating_direction: complex block required");
  if (j != 1 && j != 2) throw Error(ErrorCode::IndexOutOfRange, "rotating_direction: j");
  if (block.period) l = ((l % *block.period) + *block.period) % *block.period;
  const double c = std::cos(l * block.theta);
  const double s = std::sin(l * block.theta);
  if (j == 1) return c * block.phi[0] - s * block.phi[1];
  return c * block.phi[1] + s * block.phi[0];
}

}  // namespace critscale
