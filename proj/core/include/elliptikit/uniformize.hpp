#pragma once

#include <array>
#include <string>

#include "elliptikit/lattice.hpp"

namespace elliptikit {

struct BranchTriple {
  Complex a1;
  Complex a2;
  Complex a3;
};

struct UniformizeOptions {
  int grid = 64;              // seed grid is grid x grid over the half-nome disk
  double grid_radius = 0.0663;  // just above exp(-pi sqrt(3) / 2)
  int max_iterations = 60;
  double lambda_tolerance = 1e-13;
  LatticeOptions lattice;
};

struct UniformizationResult {
  Complex tau;
  Complex a;
  Complex b;
  Complex a_three_halves;  // exp(3/2 Log a)
  Complex lambda_target;
  Complex lambda_value;
  // |a wp(h_k) + b - a_k| for h = 1/2, tau/2, (1 + tau)/2.
  std::array<double, 3> residuals{};
  int newton_iterations = 0;
};

struct ProjectivePoint {
  Complex X;
  Complex Y;
  Complex T;
};

// (wp(tau/2) - wp(1/2)) / (wp((1 + tau)/2) - wp(1/2)).
Complex lambda_of_tau(Complex tau, const LatticeOptions& options = {});
Complex j_from_lambda(Complex lambda);
// 1728 g2^3 / (g2^3 - 27 g3^2).
Complex j_invariant(const LatticeContext& ctx);

UniformizationResult uniformize(const BranchTriple& t, const UniformizeOptions& options = {});

// [a wp(z) + b : a^(3/2) wp'(z) / 2 : 1], or [0 : 1 : 0] on the lattice.
ProjectivePoint iso_point(const UniformizationResult& u, const LatticeContext& ctx, Complex z);
// |Y^2 T - (X - a1 T)(X - a2 T)(X - a3 T)| for a point scaled to unit max-norm.
double curve_residual(const BranchTriple& t, const ProjectivePoint& p);

}  // namespace elliptikit
