#include <gtest/gtest.h>

#include <random>

#include "elliptikit/uniformize.hpp"
#include "oracles.hpp"

using namespace elliptikit;

namespace {

const Complex kI(0.0, 1.0);

double lambda_orbit_distance(Complex lambda, Complex target) {
  const Complex orbit[6] = {lambda, 1.0 - lambda, 1.0 / lambda, 1.0 / (1.0 - lambda), lambda / (lambda - 1.0),
                            (lambda - 1.0) / lambda};
  double best = 1e300;
  for (Complex l : orbit) best = std::min(best, std::abs(l - target));
  return best;
}

BranchTriple random_triple(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  while (true) {
    BranchTriple t{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}};
    if (std::abs(t.a1 - t.a2) > 0.2 && std::abs(t.a2 - t.a3) > 0.2 && std::abs(t.a1 - t.a3) > 0.2) return t;
  }
}

}  // namespace

TEST(Uniformize, SquareLattice) {
  UniformizationResult u = uniformize({1.0, 0.0, -1.0});
  LatticeContext ctx(u.tau);
  EXPECT_NEAR(std::abs(j_invariant(ctx) - 1728.0), 0.0, 1e-6);
  EXPECT_LT(lambda_orbit_distance(u.lambda_value, 0.5), 1e-10);
  for (double r : u.residuals) EXPECT_LT(r, 1e-8);
}

TEST(Uniformize, KnownJInvariants) {
  EXPECT_NEAR(std::abs(j_invariant(LatticeContext(kI)) - 1728.0), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(j_invariant(LatticeContext(std::exp(2.0 * oracle::pi * kI / 3.0)))), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(j_from_lambda(0.5) - 1728.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(j_from_lambda(-1.0) - 1728.0), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(j_from_lambda(std::exp(oracle::pi * kI / 3.0))), 0.0, 1e-9);
}

TEST(Uniformize, LambdaMatchesThetaQuotient) {
  // lambda = (theta_2 / theta_3)^4 for the classical lambda; the orbit absorbs the convention.
  for (Complex tau : {Complex(0.1, 1.1), Complex(-0.3, 0.9), Complex(0.4, 1.7)}) {
    Complex qh = std::exp(oracle::pi * kI * tau);
    Complex t2 = 0.0, t3 = 1.0;
    for (int n = 0; n < 30; ++n) t2 += 2.0 * std::exp(oracle::pi * kI * tau * (n + 0.5) * (n + 0.5));
    for (int n = 1; n < 30; ++n) t3 += 2.0 * std::pow(qh, n * n);
    Complex classical = std::pow(t2 / t3, 4);
    EXPECT_LT(lambda_orbit_distance(lambda_of_tau(tau), classical), 1e-10);
    EXPECT_NEAR(std::abs(j_from_lambda(lambda_of_tau(tau)) - j_invariant(LatticeContext(tau))) /
                    std::abs(j_invariant(LatticeContext(tau))),
                0.0, 1e-9);
  }
}

TEST(Uniformize, RandomTriples) {
  std::mt19937 rng(113);
  for (int trial = 0; trial < 5; ++trial) {
    BranchTriple t = random_triple(rng);
    UniformizationResult u = uniformize(t);
    EXPECT_GT(u.tau.imag(), 0.0);
    for (double r : u.residuals) EXPECT_LT(r, 1e-8);
    LatticeContext ctx(u.tau);
    for (Complex z : {Complex(0.13, 0.0) + 0.21 * u.tau, Complex(0.6, 0.0) + 0.37 * u.tau}) {
      EXPECT_LT(curve_residual(t, iso_point(u, ctx, z)), 1e-8);
    }
  }
}

TEST(IsoPoint, HalfPeriodsAndInvolution) {
  BranchTriple t{Complex(1.0, 0.5), Complex(-0.3, 0.2), Complex(0.1, -1.0)};
  UniformizationResult u = uniformize(t);
  LatticeContext ctx(u.tau);
  const Complex halves[3] = {0.5, u.tau / 2.0, (1.0 + u.tau) / 2.0};
  const Complex roots[3] = {t.a1, t.a2, t.a3};
  for (int k = 0; k < 3; ++k) {
    ProjectivePoint p = iso_point(u, ctx, halves[k]);
    EXPECT_NEAR(std::abs(p.X / p.T - roots[k]), 0.0, 1e-8);
    EXPECT_NEAR(std::abs(p.Y / p.T), 0.0, 1e-6);
  }
  Complex z(0.23, 0.0);
  z += 0.31 * u.tau;
  ProjectivePoint a = iso_point(u, ctx, z), b = iso_point(u, ctx, -z);
  EXPECT_NEAR(std::abs(a.X - b.X), 0.0, 1e-9 * std::abs(a.X));
  EXPECT_NEAR(std::abs(a.Y + b.Y), 0.0, 1e-9 * std::abs(a.Y));
  ProjectivePoint origin = iso_point(u, ctx, 1.0 + u.tau);
  EXPECT_EQ(origin.X, Complex(0.0));
  EXPECT_EQ(origin.T, Complex(0.0));
  EXPECT_NE(origin.Y, Complex(0.0));
}

TEST(Uniformize, RejectsCoincidentBranchPoints) {
  EXPECT_THROW(uniformize({1.0, 1.0, 0.0}), Error);
}
