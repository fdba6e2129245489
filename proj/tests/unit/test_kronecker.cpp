#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "elliptikit/kronecker.hpp"
#include "oracles.hpp"

using namespace elliptikit;

namespace {

const Complex kI(0.0, 1.0);
const Complex kTwoPiI = 2.0 * oracle::pi * kI;

// Points of the centred cell kept at distance >= 0.3 from the lattice, so the theta contour stays valid.
std::vector<Complex> theta_points(Complex tau, int count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  LatticeContext ctx(tau);
  std::vector<Complex> out;
  while (static_cast<int>(out.size()) < count) {
    Complex z = u(rng) + u(rng) * tau;
    if (ctx.distance_to_lattice(z) >= 0.3) out.push_back(z);
  }
  return out;
}

double rel(Complex d, Complex scale) { return std::abs(d) / std::max(1.0, std::abs(scale)); }

}  // namespace

TEST(Kronecker, LowOrderValues) {
  LatticeContext ctx(kI);
  KroneckerTable table(ctx, 8);
  Complex z(0.3, 0.1);
  EXPECT_EQ(table.g(0, z), Complex(1.0));
  EXPECT_NEAR(std::abs(table.g(1, z) - ctx.eisenstein_function(1, z)), 0.0, 1e-12);
  Complex g1 = table.g(1, z);
  Complex g2 = (g1 * g1 - ctx.eisenstein_function(2, z) + ctx.eisenstein_series(2)) / 2.0;
  EXPECT_NEAR(std::abs(table.g(2, z) - g2), 0.0, 1e-10);
}

TEST(Kronecker, AgreesWithThetaGeneratingFunction) {
  for (Complex tau : {kI, Complex(0.5, 1.5), Complex(0.2, 0.8)}) {
    LatticeContext ctx(tau);
    KroneckerTable table(ctx, 6);
    for (Complex z : theta_points(tau, 6, 19)) {
      for (int n = 0; n <= 6; ++n) {
        Complex expected = oracle::g_from_theta(n, z, tau);
        EXPECT_NEAR(rel(table.g(n, z) - expected, expected), 0.0, 1e-9) << "tau=" << tau << " n=" << n << " z=" << z;
      }
    }
  }
}

TEST(Kronecker, ThetaOracleQuasiPeriodicity) {
  // The oracle itself obeys F(z + tau, alpha) = exp(-2 pi i alpha) F(z, alpha).
  Complex tau(0.5, 1.5);
  Complex z(0.2, 0.3), alpha(0.07, 0.04);
  Complex lhs = oracle::kronecker_F(z + tau, alpha, tau);
  Complex rhs = std::exp(-kTwoPiI * alpha) * oracle::kronecker_F(z, alpha, tau);
  EXPECT_NEAR(std::abs(lhs - rhs) / std::abs(rhs), 0.0, 1e-12);
}

TEST(Kronecker, QuasiPeriodicity) {
  for (Complex tau : {kI, Complex(0.5, 1.5)}) {
    LatticeContext ctx(tau);
    KroneckerTable table(ctx, 6);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(0.1, 0.9);
    for (int trial = 0; trial < 20; ++trial) {
      Complex z = u(rng) + u(rng) * tau;
      auto g = table.g_all(z);
      for (int n = 1; n <= 6; ++n) {
        Complex expected = 0.0;
        double f = 1.0;
        for (int k = n - 1; k >= 0; --k) {
          f *= n - k;
          expected += std::pow(kTwoPiI, n - k) / f * g[static_cast<std::size_t>(k)];
        }
        Complex shifted = table.g(n, z - tau) - g[static_cast<std::size_t>(n)];
        EXPECT_NEAR(rel(shifted - expected, expected), 0.0, 1e-8) << "n=" << n;
        EXPECT_NEAR(rel(table.g(n, z + 1.0) - g[static_cast<std::size_t>(n)], g[static_cast<std::size_t>(n)]), 0.0,
                    1e-8);
      }
    }
  }
}

TEST(Kronecker, DerivativeIdentity) {
  LatticeContext ctx(Complex(0.5, 1.5));
  KroneckerTable table(ctx, 6);
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(0.15, 0.85);
  const double h = 1e-3;
  for (int trial = 0; trial < 10; ++trial) {
    Complex z = u(rng) + u(rng) * ctx.tau();
    auto E = ctx.eisenstein_functions(8, z);
    for (int n = 1; n <= 6; ++n) {
      auto f = [&](Complex w) { return table.g(n, w); };
      Complex fd = (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
      Complex expected = 0.0;
      for (int k = 0; k < n; ++k) {
        expected += ((n - k) % 2 == 0 ? 1.0 : -1.0) * E[static_cast<std::size_t>(n - k + 1)] * table.g(k, z);
      }
      EXPECT_NEAR(rel(fd - expected, expected), 0.0, 1e-6) << "n=" << n;
    }
  }
}

TEST(Kronecker, RegularAtOriginForHigherOrders) {
  LatticeContext ctx(kI);
  KroneckerTable table(ctx, 4);
  EXPECT_THROW(table.g(1, 1e-9), SingularityError);
  Complex g2_at_zero = table.g(2, 0.0);
  EXPECT_TRUE(std::isfinite(g2_at_zero.real()));
  EXPECT_NEAR(std::abs(table.g(2, 1e-4) - g2_at_zero), 0.0, 1e-3);
}

TEST(Kronecker, MemoIsConsistentUnderConcurrency) {
  LatticeContext ctx(kI);
  KroneckerTable table(ctx, 6);
  std::vector<Complex> points;
  for (int k = 0; k < 50; ++k) points.emplace_back(0.1 + 0.015 * k, 0.3 + 0.01 * k);
  std::vector<Complex> serial;
  for (Complex z : points) serial.push_back(table.g(5, z));
  table.clear_memo();
  std::vector<std::vector<Complex>> results(4, std::vector<Complex>(points.size()));
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t k = 0; k < points.size(); ++k) results[static_cast<std::size_t>(t)][k] = table.g(5, points[k]);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) EXPECT_EQ(r, serial);
  EXPECT_EQ(table.memo_size(), points.size());
}

TEST(SymbolicG, LowOrders) {
  EXPECT_EQ(g_symbolic(0), FreeSymbolicG::constant(1));
  EXPECT_EQ(g_symbolic(1), FreeSymbolicG::x());
  FreeSymbolicG g2 = FreeSymbolicG::x() * FreeSymbolicG::x();
  g2 *= Rational(1, 2);
  FreeSymbolicG e = FreeSymbolicG::ebar(2);
  e *= Rational(-1, 2);
  g2 += e;
  EXPECT_EQ(g_symbolic(2), g2);
}

TEST(SymbolicG, WeightBoundAndEvaluation) {
  LatticeContext ctx(Complex(0.5, 1.5));
  KroneckerTable table(ctx, 8);
  Complex z(0.41, 0.66);
  for (int n = 0; n <= 8; ++n) {
    FreeSymbolicG g = g_symbolic(n);
    EXPECT_LE(g.max_weight(), n);
    Complex v = table.g(n, z);
    EXPECT_NEAR(rel(g.evaluate(ctx, z) - v, v), 0.0, 1e-10) << "n=" << n;
  }
}

TEST(SymbolicG, GradedSymbolFormula) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(graded_symbol_of_g(n), GradedSymbol::kronecker_formula(n)) << "n=" << n;
  }
  GradedSymbol g5 = graded_symbol_of_g(5);
  // (X - Y)^4 (X + 4Y) / 120 expanded by hand.
  const Rational expected[6] = {Rational(1, 30), Rational(-1, 8), Rational(1, 6),
                                Rational(-1, 12), Rational(0), Rational(1, 120)};
  for (int i = 0; i <= 5; ++i) EXPECT_EQ(g5.coeff(i), Scalar(expected[i])) << "X^" << i;
}

TEST(SymbolicG, GradedSymbolsPairwiseDistinct) {
  for (int a = 0; a <= 12; ++a) {
    for (int b = a + 1; b <= 12; ++b) EXPECT_NE(graded_symbol_of_g(a), graded_symbol_of_g(b));
  }
}
