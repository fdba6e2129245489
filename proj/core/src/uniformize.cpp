#include "elliptikit/uniformize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <optional>

namespace elliptikit {

namespace {

constexpr Complex I(0.0, 1.0);

struct Mobius {
  double a, b, c, d;
  Complex operator()(Complex t) const { return (a * t + b) / (c * t + d); }
};

// Coset representatives of Gamma(2) in SL2(Z): I, T, S, TS, ST, TST.
constexpr std::array<Mobius, 6> coset_reps{{
    {1, 0, 0, 1},
    {1, 1, 0, 1},
    {0, -1, 1, 0},
    {1, -1, 1, 0},
    {0, -1, 1, 1},
    {1, 0, 1, 1},
}};

std::array<Complex, 6> s3_orbit(Complex l) {
  return {l, 1.0 - l, 1.0 / l, 1.0 / (1.0 - l), l / (l - 1.0), (l - 1.0) / l};
}

LatticeOptions light(LatticeOptions o) {
  o.r_max = std::min(o.r_max, 6);
  return o;
}

Complex tau_of_half_nome(Complex q) { return -I * std::log(q) / std::numbers::pi; }

bool in_fundamental_domain(Complex tau, double tol) {
  return std::abs(tau.real()) <= 0.5 + tol && std::abs(tau) >= 1.0 - tol;
}

struct NewtonOutcome {
  Complex x;
  Complex fx;
  int iterations = 0;
  bool converged = false;
};

template <class F>
NewtonOutcome damped_newton(F f, Complex x, double tol, int max_iter, double max_modulus) {
  NewtonOutcome out{x, f(x)};
  for (int it = 0; it < max_iter; ++it) {
    out.iterations = it + 1;
    if (std::abs(out.fx) < tol) {
      out.converged = true;
      return out;
    }
    double h = 1e-6 * std::max(std::abs(out.x), 1e-3);
    Complex df = (f(out.x + h) - f(out.x - h)) / (2.0 * h);
    if (df == Complex(0.0, 0.0) || !std::isfinite(std::abs(df))) return out;
    Complex step = out.fx / df;
    double damping = 1.0;
    bool improved = false;
    for (int k = 0; k < 30; ++k, damping /= 2.0) {
      Complex trial = out.x - damping * step;
      if (std::abs(trial) >= max_modulus || trial == Complex(0.0, 0.0)) continue;
      Complex ft = f(trial);
      if (std::isfinite(std::abs(ft)) && std::abs(ft) < std::abs(out.fx)) {
        out.x = trial;
        out.fx = ft;
        improved = true;
        break;
      }
    }
    if (!improved) {
      out.converged = std::abs(out.fx) < 1e3 * tol;
      return out;
    }
  }
  out.converged = std::abs(out.fx) < tol;
  return out;
}

}  // namespace

Complex lambda_of_tau(Complex tau, const LatticeOptions& options) {
  if (!(tau.imag() > 0.0)) throw Error(ErrorCode::invalid_argument, "tau must lie in the upper half plane");
  LatticeContext ctx(tau, light(options));
  Complex e1 = ctx.weierstrass_p(0.5);
  Complex e2 = ctx.weierstrass_p(tau / 2.0);
  Complex e3 = ctx.weierstrass_p((1.0 + tau) / 2.0);
  return (e2 - e1) / (e3 - e1);
}

Complex j_from_lambda(Complex l) {
  Complex num = 1.0 - l + l * l;
  return 256.0 * num * num * num / (l * l * (1.0 - l) * (1.0 - l));
}

Complex j_invariant(const LatticeContext& ctx) {
  Complex g2 = ctx.g2(), g3 = ctx.g3();
  Complex g2c = g2 * g2 * g2;
  return 1728.0 * g2c / (g2c - 27.0 * g3 * g3);
}

UniformizationResult uniformize(const BranchTriple& t, const UniformizeOptions& options) {
  double scale = std::max({std::abs(t.a1), std::abs(t.a2), std::abs(t.a3), 1e-300});
  double sep = std::min({std::abs(t.a1 - t.a2), std::abs(t.a1 - t.a3), std::abs(t.a2 - t.a3)});
  if (!(sep > 1e-14 * scale)) throw Error(ErrorCode::invalid_argument, "branch points must be pairwise distinct");
  const Complex target = (t.a2 - t.a1) / (t.a3 - t.a1);
  const LatticeOptions lat = light(options.lattice);
  const double tol = options.lambda_tolerance * std::max(1.0, std::abs(target));

  auto lambda_q = [&](Complex q) { return lambda_of_tau(tau_of_half_nome(q), lat); };

  std::vector<std::pair<Complex, Complex>> grid;
  const int n = std::max(options.grid, 2);
  for (int ix = 0; ix < n; ++ix) {
    for (int iy = 0; iy < n; ++iy) {
      Complex q(options.grid_radius * (2.0 * (ix + 0.5) / n - 1.0), options.grid_radius * (2.0 * (iy + 0.5) / n - 1.0));
      if (std::abs(q) > options.grid_radius) continue;
      grid.emplace_back(q, lambda_q(q));
    }
  }

  std::array<Complex, 6> orbit = s3_orbit(target);
  std::array<int, 6> order{0, 1, 2, 3, 4, 5};
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return std::abs(orbit[x] - 1.0) < std::abs(orbit[y] - 1.0); });

  std::optional<UniformizationResult> best;
  for (int idx : order) {
    const Complex mu = orbit[static_cast<std::size_t>(idx)];
    auto seed = std::min_element(grid.begin(), grid.end(), [&](const auto& x, const auto& y) {
      return std::abs(x.second - mu) < std::abs(y.second - mu);
    });
    NewtonOutcome nq = damped_newton([&](Complex q) { return lambda_q(q) - mu; }, seed->first,
                                     options.lambda_tolerance * std::max(1.0, std::abs(mu)), options.max_iterations, 0.5);
    if (!nq.converged) continue;
    Complex base = tau_of_half_nome(nq.x);
    if (!in_fundamental_domain(base, 1e-6)) continue;
    for (const Mobius& g : coset_reps) {
      Complex tau = g(base);
      if (std::abs(lambda_of_tau(tau, lat) - target) > 1e-6 * std::max(1.0, std::abs(target))) continue;
      NewtonOutcome nt = damped_newton([&](Complex x) { return lambda_of_tau(x, lat) - target; }, tau, tol, 8,
                                       std::numeric_limits<double>::infinity());
      UniformizationResult r;
      r.tau = nt.x;
      r.lambda_target = target;
      r.lambda_value = nt.fx + target;
      r.newton_iterations = nq.iterations + nt.iterations;
      LatticeContext ctx(r.tau, options.lattice);
      Complex e1 = ctx.weierstrass_p(0.5);
      Complex e2 = ctx.weierstrass_p(r.tau / 2.0);
      Complex e3 = ctx.weierstrass_p((1.0 + r.tau) / 2.0);
      r.a = (t.a1 - t.a3) / (e1 - e3);
      r.b = t.a1 - r.a * e1;
      r.a_three_halves = std::exp(1.5 * std::log(r.a));
      r.residuals = {std::abs(r.a * e1 + r.b - t.a1), std::abs(r.a * e2 + r.b - t.a2), std::abs(r.a * e3 + r.b - t.a3)};
      if (!best || std::abs(r.lambda_value - target) < std::abs(best->lambda_value - target)) best = r;
      break;
    }
    if (best && std::abs(best->lambda_value - target) < 1e3 * tol) break;
  }
  if (!best) {
    throw Error(ErrorCode::no_convergence,
                "lambda inversion failed for lambda = " + std::to_string(target.real()) + (target.imag() < 0 ? "" : "+") +
                    std::to_string(target.imag()) + "i");
  }
  return *best;
}

ProjectivePoint iso_point(const UniformizationResult& u, const LatticeContext& ctx, Complex z) {
  if (std::abs(ctx.tau() - u.tau) > 1e-12 * std::abs(u.tau)) {
    throw Error(ErrorCode::configuration, "lattice context does not match the uniformization tau");
  }
  if (ctx.distance_to_lattice(z) < ctx.eps_sing()) return {0.0, 1.0, 0.0};
  return {u.a * ctx.weierstrass_p(z) + u.b, 0.5 * u.a_three_halves * ctx.weierstrass_p_prime(z), 1.0};
}

double curve_residual(const BranchTriple& t, const ProjectivePoint& p) {
  double m = std::max({std::abs(p.X), std::abs(p.Y), std::abs(p.T)});
  if (m == 0.0) throw Error(ErrorCode::invalid_argument, "[0:0:0] is not a projective point");
  Complex X = p.X / m, Y = p.Y / m, T = p.T / m;
  return std::abs(Y * Y * T - (X - t.a1 * T) * (X - t.a2 * T) * (X - t.a3 * T));
}

}  // namespace elliptikit
