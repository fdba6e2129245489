#include <gtest/gtest.h>

#include <random>

#include "elliptikit/lattice.hpp"
#include "oracles.hpp"

using namespace elliptikit;

namespace {

const Complex kI(0.0, 1.0);
const Complex kTwoPiI = 2.0 * oracle::pi * kI;

std::vector<Complex> sample_points(Complex tau, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) out.push_back(u(rng) + u(rng) * tau);
  return out;
}

}  // namespace

TEST(Lattice, ContextInvariants) {
  LatticeContext ctx(kI);
  EXPECT_LT(std::abs(ctx.q()), 1.0);
  EXPECT_LT(std::pow(std::abs(ctx.q()), ctx.series_truncation()), 1e-16);
  EXPECT_THROW(LatticeContext(Complex(0.3, -0.1)), Error);
}

TEST(Lattice, ReduceRecoversShift) {
  LatticeContext ctx(Complex(0.3, 1.2));
  Complex z = Complex(2.7, -3.1);
  LatticePoint p = ctx.reduce(z);
  EXPECT_NEAR(std::abs(p.reduced + static_cast<double>(p.m) + static_cast<double>(p.n) * ctx.tau() - z), 0.0, 1e-13);
  double y = p.reduced.imag() / ctx.tau().imag();
  double x = p.reduced.real() - y * ctx.tau().real();
  EXPECT_GE(x, 0.0);
  EXPECT_LT(x, 1.0);
  EXPECT_GE(y, 0.0);
  EXPECT_LT(y, 1.0);
}

TEST(Lattice, OddSeriesVanish) {
  LatticeContext ctx(kI);
  EXPECT_EQ(ctx.eisenstein_series(3), Complex(0.0));
  EXPECT_EQ(ctx.eisenstein_series(5), Complex(0.0));
  EXPECT_THROW(ctx.eisenstein_series(0), Error);
}

TEST(Lattice, SeriesMatchDoubleSumOracle) {
  LatticeContext ctx(kI);
  EXPECT_NEAR(std::abs(ctx.eisenstein_series(2) - oracle_eisenstein_series(kI, 2, 2000, 2000)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(ctx.eisenstein_series(4) - oracle_eisenstein_series(kI, 4, 400, 400)), 0.0, 1e-10);
}

TEST(Lattice, SquareLatticeClosedForms) {
  LatticeContext ctx(kI);
  EXPECT_NEAR(std::abs(ctx.eisenstein_series(2) - oracle::pi), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ctx.eisenstein_series(4) - oracle::e4_square_lattice()), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ctx.eisenstein_series(6)), 0.0, 1e-12);
}

TEST(Lattice, HexagonalLatticeHasVanishingG2) {
  LatticeContext ctx(std::exp(2.0 * oracle::pi * kI / 3.0));
  EXPECT_NEAR(std::abs(ctx.g2()), 0.0, 1e-11);
}

TEST(Lattice, FunctionMatchesOracleAtSpecPoint) {
  LatticeContext ctx(kI);
  Complex z(0.3, 0.1);
  EXPECT_NEAR(std::abs(ctx.eisenstein_function(2, z) - oracle_eisenstein_function(kI, 2, z, 2000, 2000)), 0.0, 1e-8);
}

TEST(Lattice, E1AgreesWithThetaLogDerivative) {
  for (Complex tau : {kI, Complex(0.5, 1.5)}) {
    LatticeContext ctx(tau);
    for (Complex z : sample_points(tau, 10, 3)) {
      const double h = 1e-3;
      auto lt = [&](double k) { return std::log(oracle::theta1(z + k * h, tau)); };
      Complex dlog = (-lt(2.0) + 8.0 * lt(1.0) - 8.0 * lt(-1.0) + lt(-2.0)) / (12.0 * h);
      Complex theta_ratio = oracle::g_from_theta(1, z, tau);
      EXPECT_NEAR(std::abs(ctx.eisenstein_function(1, z) - theta_ratio), 0.0, 1e-10) << z;
      EXPECT_NEAR(std::abs(ctx.eisenstein_function(1, z) - dlog), 0.0, 1e-6) << z;
    }
  }
}

TEST(Lattice, QuasiPeriodicityOfE1) {
  LatticeContext ctx(kI);
  for (Complex z : sample_points(kI, 20, 7)) {
    Complex e = ctx.eisenstein_function(1, z);
    EXPECT_NEAR(std::abs(ctx.eisenstein_function(1, z + 1.0) - e), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(ctx.eisenstein_function(1, z - ctx.tau()) - e - kTwoPiI), 0.0, 1e-8);
  }
}

TEST(Lattice, HigherFunctionsAreElliptic) {
  LatticeContext ctx(Complex(0.5, 1.5));
  for (Complex z : sample_points(ctx.tau(), 10, 11)) {
    for (int r = 2; r <= 6; ++r) {
      Complex e = ctx.eisenstein_function(r, z);
      double scale = std::max(1.0, std::abs(e));
      EXPECT_NEAR(std::abs(ctx.eisenstein_function(r, z + 1.0) - e) / scale, 0.0, 1e-8);
      EXPECT_NEAR(std::abs(ctx.eisenstein_function(r, z + ctx.tau()) - e) / scale, 0.0, 1e-8);
    }
  }
}

TEST(Lattice, ParitySymmetries) {
  LatticeContext ctx(kI);
  Complex z(0.23, 0.41);
  EXPECT_NEAR(std::abs(ctx.eisenstein_function(2, -z) - ctx.eisenstein_function(2, z)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ctx.eisenstein_function(3, -z) + ctx.eisenstein_function(3, z)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(ctx.eisenstein_function(1, -z) + ctx.eisenstein_function(1, z)), 0.0, 1e-12);
}

TEST(Lattice, DerivativeRecursion) {
  LatticeContext ctx(Complex(0.5, 1.5));
  const double h = 1e-3;
  for (Complex z : sample_points(ctx.tau(), 10, 5)) {
    for (int r = 1; r <= 6; ++r) {
      auto f = [&](Complex w) { return ctx.eisenstein_function(r, w); };
      Complex fd = (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
      Complex expected = -static_cast<double>(r) * ctx.eisenstein_function(r + 1, z);
      EXPECT_NEAR(std::abs(fd - expected) / std::max(1.0, std::abs(expected)), 0.0, 1e-6) << "r=" << r;
    }
  }
}

TEST(Lattice, WeierstrassDefinitions) {
  LatticeContext ctx(kI);
  Complex z(0.31, 0.17);
  EXPECT_EQ(ctx.weierstrass_p(z), ctx.eisenstein_function(2, z) - ctx.eisenstein_series(2));
  EXPECT_EQ(ctx.weierstrass_p_prime(z), -2.0 * ctx.eisenstein_function(3, z));
}

TEST(Lattice, WeierstrassCubic) {
  for (Complex tau : {kI, Complex(0.5, 1.5), Complex(-0.2, 0.9)}) {
    LatticeContext ctx(tau);
    Complex e1 = ctx.weierstrass_p(0.5), e2 = ctx.weierstrass_p(tau / 2.0), e3 = ctx.weierstrass_p((1.0 + tau) / 2.0);
    EXPECT_NEAR(std::abs(e1 + e2 + e3), 0.0, 1e-10);
    for (Complex z : sample_points(tau, 5, 13)) {
      Complex p = ctx.weierstrass_p(z), dp = ctx.weierstrass_p_prime(z);
      Complex lhs = dp * dp;
      Complex rhs = 4.0 * (p - e1) * (p - e2) * (p - e3);
      EXPECT_NEAR(std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)), 0.0, 1e-8);
      Complex weierstrass = 4.0 * p * p * p - ctx.g2() * p - ctx.g3();
      EXPECT_NEAR(std::abs(lhs - weierstrass) / std::max(1.0, std::abs(lhs)), 0.0, 1e-8);
    }
  }
}

TEST(Lattice, SingularityCarriesNearestPoint) {
  LatticeContext ctx(kI);
  Complex lattice_point = Complex(2.0, 1.0);
  try {
    ctx.eisenstein_function(2, lattice_point + 1e-9);
    FAIL() << "expected a singularity error";
  } catch (const SingularityError& e) {
    EXPECT_NEAR(std::abs(e.nearest() - lattice_point), 0.0, 1e-12);
    EXPECT_EQ(e.code(), ErrorCode::singularity);
  }
}

TEST(Oracle, TruncationConvergence) {
  Complex z(0.37, 0.21);
  Complex a = oracle_eisenstein_function(kI, 4, z, 200, 200);
  Complex b = oracle_eisenstein_function(kI, 4, z, 400, 400);
  EXPECT_LT(std::abs(a - b), 1e-8);
}

TEST(Oracle, RealOnSymmetricAxis) {
  Complex v = oracle_eisenstein_function(kI, 1, 0.5, 400, 400);
  EXPECT_NEAR(v.imag(), 0.0, 1e-8);
  Complex w = oracle_eisenstein_function(kI, 1, 0.5, 800, 800);
  EXPECT_NEAR(std::abs(v - w), 0.0, 1e-6);
}

TEST(Oracle, OddSymmetry) {
  Complex z(0.28, 0.33);
  EXPECT_NEAR(std::abs(oracle_eisenstein_function(kI, 3, z, 100, 100) + oracle_eisenstein_function(kI, 3, -z, 100, 100)),
              0.0, 1e-12);
}

TEST(Oracle, FastEvaluatorAgreesOnGrid) {
  for (Complex tau : {kI, Complex(0.5, 1.5)}) {
    LatticeContext ctx(tau);
    for (Complex z : sample_points(tau, 4, 17)) {
      for (int r = 1; r <= 6; ++r) {
        int n = r <= 2 ? 2000 : 400;
        Complex o = oracle_eisenstein_function(tau, r, z, n, n);
        Complex f = ctx.eisenstein_function(r, z);
        EXPECT_NEAR(std::abs(o - f) / std::max(1.0, std::abs(f)), 0.0, 1e-8) << "r=" << r << " z=" << z;
      }
    }
  }
}
