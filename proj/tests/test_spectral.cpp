#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spectral.hpp"

using namespace critscale;

namespace {

Mat m2(double a, double b, double c, double d) {
  Mat M(2, 2);
  M << a, b, c, d;
  return M;
}

Vec v2(double a, double b) {
  Vec v(2);
  v << a, b;
  return v;
}

Mat rotation(double t) { return m2(std::cos(t), -std::sin(t), std::sin(t), std::cos(t)); }

}  // namespace

TEST_CASE("decompose: distinct real eigenvalues (worked example)") {
  SpectralDecomposition sd = decompose(m2(1.2, 1.0, 0.0, -1.5));
  REQUIRE(sd.blocks.size() == 2);
  CHECK(sd.blocks[0].kind == BlockKind::RealPositive);
  CHECK(sd.blocks[0].lambda == doctest::Approx(1.2));
  CHECK(sd.blocks[0].phi[0](0) == doctest::Approx(0.938).epsilon(1e-3));
  CHECK(sd.blocks[0].phi[0](1) == doctest::Approx(0.347).epsilon(1e-3));
  CHECK(sd.blocks[1].kind == BlockKind::RealNegative);
  CHECK(sd.blocks[1].lambda == doctest::Approx(-1.5));
  CHECK(sd.blocks[1].phi[0](0) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(sd.blocks[1].phi[0](1) == doctest::Approx(1.0));
}

TEST_CASE("decompose: declared double-integrator chain") {
  const Mat A = m2(1.0, 1.0, 0.0, 1.0);
  CHECK_THROWS_AS(decompose(A), Error);  // StructureRequired without a declaration
  try {
    decompose(A);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StructureRequired);
  }
  std::vector<DeclaredBlock> decl{{1.0, 2}};
  SpectralDecomposition sd = decompose(A, &decl);
  REQUIRE(sd.blocks.size() == 1);
  const JordanBlock& b = sd.blocks[0];
  CHECK(b.size == 2);
  CHECK(b.phi[0](0) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(b.phi[0](1) == doctest::Approx(1.0));
  CHECK(b.phi[1](0) == doctest::Approx(1.0));
  CHECK(b.phi[1](1) == doctest::Approx(0.0).epsilon(1e-10));
  // chain equations
  CHECK((A.transpose() * b.phi[0] - b.lambda * b.phi[0]).norm() < 1e-8);
  CHECK((A.transpose() * b.phi[1] - b.lambda * b.phi[1] - b.phi[0]).norm() < 1e-8);
}

TEST_CASE("decompose: rotation gives a complex pair with period 4") {
  SpectralDecomposition sd = decompose(rotation(M_PI / 2));
  REQUIRE(sd.blocks.size() == 1);
  const JordanBlock& b = sd.blocks[0];
  CHECK(b.kind == BlockKind::ComplexPair);
  CHECK(b.rho == doctest::Approx(1.0));
  CHECK(b.theta == doctest::Approx(M_PI / 2));
  REQUIRE(b.angle_rational.has_value());
  CHECK(b.angle_rational->a == 1);
  CHECK(b.angle_rational->b == 2);
  REQUIRE(b.period.has_value());
  CHECK(*b.period == 4);
}

TEST_CASE("decompose: errors") {
  CHECK_THROWS_AS(decompose(Mat(Mat::Identity(9, 9))), Error);  // UnsupportedSize
  CHECK_THROWS_AS(decompose(m2(0.0, 1.0, 0.0, 0.5)), Error);    // zero eigenvalue
  std::vector<DeclaredBlock> wrong{{2.0, 2}};
  CHECK_THROWS_AS(decompose(m2(1.0, 1.0, 0.0, 1.0), &wrong), Error);
}

TEST_CASE("chain residual invariants on produced blocks") {
  for (const Mat& A : {m2(1.2, 1.0, 0.0, -1.5), m2(0.7, 0.2, -0.1, 0.9)}) {
    SpectralDecomposition sd = decompose(A);
    for (const JordanBlock& b : sd.blocks) {
      if (b.kind == BlockKind::ComplexPair) continue;
      CHECK((A.transpose() * b.phi[0] - b.lambda * b.phi[0]).norm() < 1e-8);
      for (int j = 1; j < b.size; ++j)
        CHECK((A.transpose() * b.phi[j] - b.lambda * b.phi[j] - b.phi[j - 1]).norm() < 1e-8);
    }
  }
}

TEST_CASE("power_direction closed form") {
  std::vector<DeclaredBlock> decl{{1.0, 2}};
  SpectralDecomposition di = decompose(m2(1.0, 1.0, 0.0, 1.0), &decl);
  const JordanBlock& b = di.blocks[0];

  CHECK((power_direction(b, 1, 0) - b.phi[0]).norm() < 1e-12);

  SpectralDecomposition un = decompose(m2(1.2, 1.0, 0.0, -1.5));
  const JordanBlock& pos = un.blocks[0];
  CHECK((power_direction(pos, 1, 3) - std::pow(1.2, 3) * pos.phi[0]).norm() < 1e-9);

  // j=2, l=4, lambda=1: phi2 + 4 phi1
  CHECK((power_direction(b, 2, 4) - (b.phi[1] + 4.0 * b.phi[0])).norm() < 1e-9);

  // equals l-fold multiplication by A^T for l <= 20 on both worked examples
  for (const Mat& A : {m2(1.2, 1.0, 0.0, -1.5), m2(1.0, 1.0, 0.0, 1.0)}) {
    std::vector<DeclaredBlock> d{{1.0, 2}};
    SpectralDecomposition sd = decompose(A, A(1, 1) == 1.0 ? &d : nullptr);
    for (const JordanBlock& blk : sd.blocks) {
      for (int j = 1; j <= blk.size; ++j) {
        Vec iter = blk.phi[j - 1];
        for (std::int64_t l = 0; l <= 20; ++l) {
          CHECK((power_direction(blk, j, l) - iter).norm() < 1e-8 * std::max(1.0, iter.norm()));
          iter = A.transpose() * iter;
        }
      }
    }
  }

  CHECK_THROWS_AS(power_direction(b, 3, 1), Error);  // IndexOutOfRange
}

TEST_CASE("rotating_direction: quarter turn and periodicity") {
  SpectralDecomposition sd = decompose(rotation(M_PI / 2));
  const JordanBlock& b = sd.blocks[0];
  CHECK((rotating_direction(b, 1, 0) - b.phi[0]).norm() < 1e-12);
  CHECK((rotating_direction(b, 1, 1) + b.phi[1]).norm() < 1e-12);  // cos -> 0, -sin -> -1
  CHECK((rotating_direction(b, 1, 4) - b.phi[0]).norm() < 1e-10);  // period M = 4
  for (int j = 1; j <= 2; ++j)
    for (std::int64_t l = 0; l < 8; ++l)
      CHECK((rotating_direction(b, j, l + 4) - rotating_direction(b, j, l)).norm() < 1e-10);

  // support relation: (A^l)^T psi^{l0+l} = rho^l psi^{l0}
  const Mat A = 1.3 * rotation(M_PI / 3);
  SpectralDecomposition sd2 = decompose(A);
  const JordanBlock& c = sd2.blocks[0];
  for (int j = 1; j <= 2; ++j) {
    for (std::int64_t l0 = 0; l0 < *c.period; ++l0) {
      Mat Al = Mat::Identity(2, 2);
      for (std::int64_t l = 0; l <= 3; ++l) {
        const Vec lhs = Al.transpose() * rotating_direction(c, j, l0 + l);
        const Vec rhs = std::pow(c.rho, static_cast<double>(l)) * rotating_direction(c, j, l0);
        CHECK((lhs - rhs).norm() < 1e-8 * std::max(1.0, rhs.norm()));
        Al = A * Al;
      }
    }
  }

  SpectralDecomposition real = decompose(m2(1.2, 1.0, 0.0, -1.5));
  CHECK_THROWS_AS(rotating_direction(real.blocks[0], 1, 0), Error);  // WrongBlockKind
}

TEST_CASE("detect_rational_angle") {
  auto r1 = detect_rational_angle(M_PI / 2);
  REQUIRE(r1.has_value());
  CHECK(r1->a == 1);
  CHECK(r1->b == 2);

  auto r2 = detect_rational_angle(2 * M_PI / 3);
  REQUIRE(r2.has_value());
  CHECK(r2->a == 2);
  CHECK(r2->b == 3);
  CHECK(period_from_angle(*r2) == 3);  // R(2pi/3)^3 = I

  CHECK_FALSE(detect_rational_angle(1.0).has_value());  // 1/pi irrational past b = 64
}

TEST_CASE("reassembly: left-eigenvector coordinates scale by lambda^l") {
  const Mat A = m2(0.8, 0.3, 0.1, 1.1);
  SpectralDecomposition sd = decompose(A);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> d(-2, 2);
  for (const JordanBlock& b : sd.blocks) {
    for (int rep = 0; rep < 20; ++rep) {
      Vec x = v2(d(rng), d(rng));
      Vec xl = x;
      for (int l = 0; l <= 10; ++l) {
        CHECK(b.phi[0].dot(xl) ==
              doctest::Approx(std::pow(b.lambda, l) * b.phi[0].dot(x)).epsilon(1e-7));
        xl = A * xl;
      }
    }
  }
}

TEST_CASE("size-3 chain: declared structure and the binomial power formula") {
  Mat A(3, 3);
  A << 0.9, 1.0, 0.0, 0.0, 0.9, 1.0, 0.0, 0.0, 0.9;
  std::vector<DeclaredBlock> decl{{0.9, 3}};
  SpectralDecomposition sd = decompose(A, &decl);
  REQUIRE(sd.blocks.size() == 1);
  const JordanBlock& b = sd.blocks[0];
  REQUIRE(b.size == 3);
  CHECK((A.transpose() * b.phi[0] - 0.9 * b.phi[0]).norm() < 1e-8);
  CHECK((A.transpose() * b.phi[1] - 0.9 * b.phi[1] - b.phi[0]).norm() < 1e-8);
  CHECK((A.transpose() * b.phi[2] - 0.9 * b.phi[2] - b.phi[1]).norm() < 1e-8);
  for (int j = 1; j <= 3; ++j) {
    Vec iter = b.phi[j - 1];
    for (std::int64_t l = 0; l <= 15; ++l) {
      CHECK((power_direction(b, j, l) - iter).norm() < 1e-8 * std::max(1.0, iter.norm()));
      iter = A.transpose() * iter;
    }
  }
}

TEST_CASE("complex pair: joint normalization keeps unit norms and the relation") {
  const Mat A = 0.9 * rotation(2 * M_PI / 3);
  SpectralDecomposition sd = decompose(A);
  const JordanBlock& b = sd.blocks[0];
  CHECK(b.phi[0].norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.phi[1].norm() == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(b.period.has_value());
  CHECK(*b.period == 3);
}
