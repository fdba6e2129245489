#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <tuple>

#include "elliptikit/diffalg.hpp"
#include "elliptikit/hyperlog.hpp"
#include "elliptikit/literals.hpp"
#include "elliptikit/uniformize.hpp"
#include "sampling.hpp"

namespace elliptikit::app {

namespace {

using Element = ShuffleElement<GaussRational>;
using Tensor = std::map<std::pair<Word, Word>, GaussRational>;

const Complex two_pi_i(0.0, 2.0 * std::numbers::pi);

// Largest residual seen so far and where it occurred; NaN sticks.
struct Worst {
  double value = 0.0;
  std::string where;

  void update(double r, const std::string& w) {
    if (std::isnan(value)) return;
    if (std::isnan(r) || r > value) {
      value = r;
      where = w;
    }
  }
};

double rel(Complex diff, double scale) { return std::abs(diff) / std::max(1.0, scale); }

std::string at(Complex z) { return "z = " + format_complex(z); }

RunConfig single_puncture(const RunConfig& cfg) {
  RunConfig c = cfg;
  c.punctures = {Complex(0.0, 0.0)};
  c.labels.clear();
  return c;
}

// A point whose straight segment from the tangential start delta/2 keeps `clearance` from every puncture.
Complex reachable_point(Sampler& rng, const Session& s, double margin, double clearance) {
  const Complex start(0.5 * s.gamma().delta(), 0.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Complex z = rng.point(s.punctures(), margin);
    if (s.punctures().segment_distance(start, z, 0.0, 0.45 * s.gamma().delta()) >= clearance) return z;
  }
  throw Error(ErrorCode::configuration, "no sample point is reachable from the tangential base point");
}

std::vector<Letter> regularization_alphabet(const RunConfig& cfg) {
  std::vector<Letter> alphabet{{0, 0.0}, {1, 0.0}, {2, 0.0}};
  for (std::size_t k = 1; k < cfg.punctures.size(); ++k) {
    alphabet.push_back({1, cfg.punctures[k]});
    alphabet.push_back({2, cfg.punctures[k]});
  }
  return alphabet;
}

void add_to(Tensor& t, const Word& a, const Word& b, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(std::make_pair(a, b), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor tensor_shuffle(const Tensor& x, const Tensor& y) {
  Tensor out;
  for (const auto& [ab, c1] : x) {
    for (const auto& [cd, c2] : y) {
      GaussRational c = c1 * c2;
      for (const auto& [w1, m1] : shuffle_words(ab.first, cd.first)) {
        for (const auto& [w2, m2] : shuffle_words(ab.second, cd.second)) add_to(out, w1, w2, c * GaussRational(m1 * m2));
      }
    }
  }
  return out;
}

using Triple = std::map<std::tuple<Word, Word, Word>, GaussRational>;

void add_to(Triple& t, std::tuple<Word, Word, Word> key, const GaussRational& c) {
  auto [it, inserted] = t.emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string describe(const Word& w) { return to_string(w); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "functional-equations", "oracle",     "graded-symbol", "regularization", "derivative",   "sect56",
      "reduction",            "multipoint", "shuffle",       "uniformization", "independence",
  };
  return names;
}

VerificationReport suite_functional_equations(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "functional-equations";
  rep.seed = cfg.seed;
  Session s(single_puncture(cfg), 8);
  const LatticeContext& ctx = s.ctx();
  const KroneckerTable& table = s.table();
  const Complex tau = ctx.tau();
  Sampler rng(cfg.seed);
  constexpr int n_max = 6;
  constexpr double h = 1e-3;

  Worst e1_one, e1_tau;
  std::vector<Worst> e_ell(8), e_der(8), g_one(n_max + 1), g_tau(n_max + 1), g_der(n_max + 1);
  for (int k = 0; k < 20; ++k) {
    Complex z = rng.point(s.punctures(), 0.2);
    auto e = ctx.eisenstein_functions(7, z);
    auto e_1 = ctx.eisenstein_functions(7, z - 1.0);
    auto e_t = ctx.eisenstein_functions(7, z - tau);
    e1_one.update(rel(e_1[1] - e[1], std::abs(e[1])), at(z));
    e1_tau.update(rel(e_t[1] - e[1] - two_pi_i, std::abs(e[1])), at(z));
    for (int r = 2; r <= 7; ++r) {
      double res = std::max(std::abs(e_1[r] - e[r]), std::abs(e_t[r] - e[r])) / std::max(1.0, std::abs(e[r]));
      e_ell[r].update(res, at(z));
    }
    for (int r = 1; r <= 6; ++r) {
      Complex d = five_point_derivative([&](Complex w) { return ctx.eisenstein_function(r, w); }, z, h);
      Complex rhs = -static_cast<double>(r) * e[r + 1];
      e_der[r].update(rel(d - rhs, std::abs(rhs)), at(z));
    }
    auto g = table.g_all(z);
    auto g_1 = table.g_all(z - 1.0);
    auto g_t = table.g_all(z - tau);
    for (int n = 1; n <= n_max; ++n) {
      g_one[n].update(rel(g_1[n] - g[n], std::abs(g[n])), at(z));
      Complex shift = 0.0;
      double fact = 1.0;
      for (int k2 = n - 1; k2 >= 0; --k2) {
        fact *= n - k2;
        shift += std::pow(two_pi_i, n - k2) / fact * g[k2];
      }
      g_tau[n].update(rel(g_t[n] - g[n] - shift, std::max(std::abs(shift), std::abs(g[n]))), at(z));
      Complex d = five_point_derivative([&](Complex w) { return table.g(n, w); }, z, h);
      Complex rhs = 0.0;
      for (int k2 = 0; k2 < n; ++k2) rhs += ((n - k2) % 2 == 0 ? 1.0 : -1.0) * e[n - k2 + 1] * g[k2];
      g_der[n].update(rel(d - rhs, std::abs(rhs)), at(z));
    }
  }
  // The same identities with every Eisenstein value taken from the brute-force lattice sum at the shifted point.
  Worst s1_one, s1_tau, s2_ell, s3_ell;
  std::vector<Worst> sg_tau(n_max + 1);
  std::vector<EllipticPoly> g_poly;
  for (int n = 0; n <= n_max; ++n) g_poly.push_back(g_as_elliptic_poly(n));
  const CurveConstants k = curve_constants(ctx);
  Sampler again(cfg.seed);
  const int N = cfg.oracle_high_n, M = cfg.oracle_high_m;
  for (int j = 0; j < 20; ++j) {
    Complex z = again.point(s.punctures(), 0.2);
    Complex o[4][3];
    const Complex shifts[3] = {0.0, 1.0, tau};
    for (int r = 1; r <= 3; ++r) {
      for (int a = 0; a < 3; ++a) o[r][a] = oracle_eisenstein_function(tau, r, z - shifts[a], N, M);
    }
    s1_one.update(rel(o[1][1] - o[1][0], std::abs(o[1][0])), at(z));
    s1_tau.update(rel(o[1][2] - o[1][0] - two_pi_i, std::abs(o[1][0])), at(z));
    s2_ell.update(std::max(rel(o[2][1] - o[2][0], std::abs(o[2][0])), rel(o[2][2] - o[2][0], std::abs(o[2][0]))), at(z));
    s3_ell.update(std::max(rel(o[3][1] - o[3][0], std::abs(o[3][0])), rel(o[3][2] - o[3][0], std::abs(o[3][0]))), at(z));
    Complex p = ctx.weierstrass_p(z), pp = ctx.weierstrass_p_prime(z);
    std::vector<Complex> g(n_max + 1), g_t(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
      g[n] = g_poly[n].evaluate(k, p, pp, o[1][0]);
      g_t[n] = g_poly[n].evaluate(k, p, pp, o[1][2]);
    }
    for (int n = 1; n <= n_max; ++n) {
      Complex shift = 0.0;
      double fact = 1.0;
      for (int k2 = n - 1; k2 >= 0; --k2) {
        fact *= n - k2;
        shift += std::pow(two_pi_i, n - k2) / fact * g[k2];
      }
      sg_tau[n].update(rel(g_t[n] - g[n] - shift, std::max(std::abs(shift), std::abs(g[n]))), at(z));
    }
  }

  const double tol = cfg.tolerance;
  const std::string sum_anchor = "E_1(z - tau) = E_1(z) + 2 pi i";
  rep.add("E1/T_1/lattice-sum", "E_1(z - 1) = E_1(z)", s1_one.value, tol, s1_one.where);
  rep.add("E1/T_tau/lattice-sum", sum_anchor, s1_tau.value, tol, s1_tau.where);
  rep.add("E2/elliptic/lattice-sum", "E_r is elliptic for r >= 2", s2_ell.value, tol, s2_ell.where);
  rep.add("E3/elliptic/lattice-sum", "E_r is elliptic for r >= 2", s3_ell.value, tol, s3_ell.where);
  for (int n = 1; n <= n_max; ++n) {
    rep.add("g" + std::to_string(n) + "/T_tau/lattice-sum", "(T_tau - id) g_n = sum_(k<n) (2 pi i)^(n-k)/(n-k)! g_k",
            sg_tau[n].value, tol, sg_tau[n].where);
  }
  rep.add("E1/T_1", "E_1(z - 1) = E_1(z)", e1_one.value, tol, e1_one.where);
  rep.add("E1/T_tau", "E_1(z - tau) = E_1(z) + 2 pi i", e1_tau.value, tol, e1_tau.where);
  for (int r = 2; r <= 7; ++r) {
    rep.add("E" + std::to_string(r) + "/elliptic", "E_r is elliptic for r >= 2", e_ell[r].value, tol, e_ell[r].where);
  }
  for (int r = 1; r <= 6; ++r) {
    rep.add("E" + std::to_string(r) + "/derivative", "E_r' = -r E_(r+1)", e_der[r].value, 1e-6, e_der[r].where);
  }
  for (int n = 1; n <= n_max; ++n) {
    std::string id = "g" + std::to_string(n);
    rep.add(id + "/T_1", "T_1 g_n = g_n", g_one[n].value, tol, g_one[n].where);
    rep.add(id + "/T_tau", "(T_tau - id) g_n = sum_(k<n) (2 pi i)^(n-k)/(n-k)! g_k", g_tau[n].value, tol,
            g_tau[n].where);
    rep.add(id + "/derivative", "g_n' = sum_(k<n) (-1)^(n-k) E_(n-k+1) g_k", g_der[n].value, 1e-6, g_der[n].where);
  }
  return rep;
}

VerificationReport suite_oracle(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "oracle";
  rep.seed = cfg.seed;
  Session s(single_puncture(cfg), 2);
  const LatticeContext& ctx = s.ctx();
  const Complex tau = ctx.tau();
  Sampler rng(cfg.seed);
  std::vector<Worst> worst(7);
  for (int k = 0; k < 20; ++k) {
    Complex z = rng.point(s.punctures(), 0.2);
    for (int r = 1; r <= 6; ++r) {
      bool low = r <= 2;
      Complex ref = oracle_eisenstein_function(tau, r, z, low ? cfg.oracle_n : cfg.oracle_high_n,
                                               low ? cfg.oracle_m : cfg.oracle_high_m);
      worst[r].update(rel(ctx.eisenstein_function(r, z) - ref, std::abs(ref)), at(z));
    }
  }
  for (int r = 1; r <= 6; ++r) {
    rep.add("E" + std::to_string(r), "E_r(z) = sum over the lattice of (z + lambda)^-r, Eisenstein summation",
            worst[r].value, cfg.tolerance, worst[r].where);
  }
  for (int r = 2; r <= 8; ++r) {
    bool low = r <= 2;
    Complex ref = oracle_eisenstein_series(tau, r, low ? cfg.oracle_n : cfg.oracle_high_n,
                                           low ? cfg.oracle_m : cfg.oracle_high_m);
    rep.add("e" + std::to_string(r), "e_r = sum over nonzero lattice points of lambda^-r",
            rel(ctx.eisenstein_series(r) - ref, std::abs(ref)), cfg.tolerance);
  }
  if (std::abs(tau - Complex(0.0, 1.0)) < 1e-15) {
    rep.add("e2(i)", "e_2 = pi for the square lattice", std::abs(ctx.eisenstein_series(2) - std::numbers::pi),
            cfg.tolerance);
  }
  return rep;
}

VerificationReport suite_graded_symbol(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "graded-symbol";
  rep.seed = cfg.seed;
  constexpr int n_max = 12;
  const std::string anchor = "the degree n polynomial (X-Y)^(n-1) (X+(n-1)Y)/n!";
  long poly_fail = 0, free_fail = 0, degree_fail = 0, admissible_fail = 0, zero_fail = 0;
  std::string poly_detail, free_detail;
  std::vector<GradedSymbol> symbols;
  for (int n = 0; n <= n_max; ++n) {
    GradedSymbol expected = GradedSymbol::kronecker_formula(n);
    EllipticPoly g = g_as_elliptic_poly(n);
    GradedSymbol from_poly = graded_symbol(g);
    if (from_poly != expected) {
      ++poly_fail;
      poly_detail += "n = " + std::to_string(n) + ": " + from_poly.to_string() + "; ";
    }
    GradedSymbol from_free = graded_symbol_of_g(n);
    if (from_free != expected) {
      ++free_fail;
      free_detail += "n = " + std::to_string(n) + ": " + from_free.to_string() + "; ";
    }
    if (filtration_degree(g) != n) ++degree_fail;
    if (!from_poly.in_admissible_subspace()) ++admissible_fail;
    if (from_poly.is_zero()) ++zero_fail;
    symbols.push_back(from_poly);
  }
  rep.add_exact("symbol/weierstrass-model", anchor, poly_fail, poly_detail);
  rep.add_exact("symbol/generating-series", anchor, free_fail, free_detail);
  rep.add_exact("filtration-degree", "g_n lies in F_n and not in F_(n-1)", degree_fail);
  rep.add_exact("admissible-subspace", "gr_n lies in C X^n + Y^2 C[X,Y]_(n-2)", admissible_fail);
  // Nonzero homogeneous symbols of distinct degrees are linearly independent.
  rep.add_exact("independent-symbols", "the symbols of g_0, ..., g_n are linearly independent", zero_fail);

  Session s(single_puncture(cfg), n_max);
  Sampler rng(cfg.seed);
  Worst numeric;
  for (int k = 0; k < 5; ++k) {
    Complex z = rng.point(s.punctures(), 0.2);
    for (int n = 0; n <= n_max; ++n) {
      Complex v = evaluate(g_as_elliptic_poly(n), s.ctx(), z);
      Complex ref = s.table().g(n, z);
      numeric.update(rel(v - ref, std::abs(ref)), at(z) + ", n = " + std::to_string(n));
    }
  }
  rep.add("numeric", "g_n rewritten in wp, wp' and g_1 agrees with the generating series", numeric.value,
          cfg.tolerance, numeric.where);
  return rep;
}

VerificationReport suite_regularization(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "regularization";
  rep.seed = cfg.seed;
  Session s(cfg, 4);
  const GammaEvaluator& gamma = s.gamma();
  Sampler rng(cfg.seed);
  const auto alphabet = regularization_alphabet(cfg);
  TangentialConfig tcfg;
  tcfg.delta = gamma.delta();

  Worst agreement;
  long failures = 0;
  std::string errors;
  for (int k = 0; k < 20; ++k) {
    Word w = rng.word(alphabet, rng.integer(1, 3));
    Complex z = reachable_point(rng, s, 0.1, 0.05);
    Path path = gamma.default_path(z);
    try {
      Complex shuffled = gamma.shuffle(w, path);
      TangentialResult t = gamma.tangential(w, path, tcfg);
      agreement.update(rel(t.value - shuffled, std::abs(shuffled)), describe(w) + " at " + at(z));
    } catch (const Error& e) {
      ++failures;
      errors += describe(w) + ": " + e.what() + "; ";
    }
  }
  rep.add("tangential-vs-shuffle", "One has k_(->0) = k_0^sh", agreement.value, 1e-6, agreement.where);
  rep.add_exact("evaluation-errors", "both regularisations are defined on every word", failures, errors);

  Complex z = reachable_point(rng, s, 0.1, 0.05);
  Path path = gamma.default_path(z);
  TangentialResult log_fit = gamma.tangential(Word{Letter{1, 0.0}}, path, tcfg);
  double slope = log_fit.log_coefficients.size() == 2 ? std::abs(log_fit.log_coefficients[1] + 1.0) : NAN;
  rep.add("slope[(1;0)]", "P(X) = G(z) - X", slope, 1e-6, at(z));
  rep.add("G=Gamma[(1;0)]", "Gamma(1,0;-) = G",
          rel(gamma.G(path) - gamma.shuffle(Word{Letter{1, 0.0}}, path), std::abs(gamma.G(path))), 1e-10, at(z));
  TangentialResult regular = gamma.tangential(Word{Letter{2, 0.0}}, path, tcfg);
  rep.add_exact("degree[(2;0)]", "deg(k(a,z)) <= deg(a)", static_cast<long>(regular.log_coefficients.size()) - 1,
                at(z));
  return rep;
}

VerificationReport suite_derivative(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "derivative";
  rep.seed = cfg.seed;
  Session s(cfg, 4);
  Sampler rng(cfg.seed);
  const auto alphabet = regularization_alphabet(cfg);
  Worst worst;
  for (int k = 0; k < 20; ++k) {
    Word w = rng.word(alphabet, rng.integer(1, 3));
    Complex z = reachable_point(rng, s, 0.1, 0.05);
    double r = s.gamma().derivative_check(w, s.gamma().default_path(z));
    worst.update(r, describe(w) + " at " + at(z));
  }
  rep.add("finite-difference", "d/dz Gamma(n_1..n_r; z) = T_(a_r) g_(n_r)(z) Gamma(n_1..n_(r-1); z)", worst.value,
          1e-6, worst.where);
  return rep;
}

VerificationReport suite_sect56(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "sect56";
  rep.seed = cfg.seed;
  Session s(single_puncture(cfg), 4);
  const GammaEvaluator& gamma = s.gamma();
  Sampler rng(cfg.seed);
  const std::vector<std::pair<Sect56Identity, std::string>> catalog{
      {Sect56Identity::i, "L_(alpha...alpha) = sum_j (-z0)^(n-j)/(n-j)! Gamma(0...0;-)"},
      {Sect56Identity::ii, "L_beta = -g_1 + g_1(z0)"},
      {Sect56Identity::iii, "Gamma(1;-) = -L_(beta alpha) + g_1(z0) L_alpha + Gamma(1;z0)"},
      {Sect56Identity::iv, "g_1^n = sum_k (-1)^k n!/(n-k)! g_1^(n-k)(z0) L_(beta...beta)"},
      {Sect56Identity::v,
       "Gamma(2;-) = L_(beta beta alpha) - g_1(z0) L_(beta alpha) + ((e_2 + g_1^2(z0))/2) L_alpha - L_beta/2 + "
       "Gamma(2;z0)"},
  };
  std::map<Sect56Identity, Worst> worst;
  for (int a = 0; a < 3; ++a) {
    Complex z0 = reachable_point(rng, s, 0.15, 0.05);
    Path to_z0 = gamma.default_path(z0);
    for (int b = 0; b < 10; ++b) {
      Complex z = z0;
      for (int attempt = 0; attempt < 10000; ++attempt) {
        z = rng.point(s.punctures(), 0.15);
        if (std::abs(z - z0) > 1e-3 && s.punctures().segment_distance(z0, z) >= 0.05) break;
      }
      Path z0_to_z = Path::segment(z0, z);
      std::string where = "z0 = " + format_complex(z0) + ", " + at(z);
      for (const auto& [id, anchor] : catalog) {
        int lo = id == Sect56Identity::i ? 0 : id == Sect56Identity::iv ? 1 : 3;
        for (int n = lo; n <= 3; ++n) {
          worst[id].update(verify_sect56(id, to_z0, z0_to_z, gamma, n).residual, where + ", n = " + std::to_string(n));
        }
      }
    }
  }
  for (const auto& [id, anchor] : catalog) {
    double tol = id == Sect56Identity::ii ? 1e-8 : 1e-7;
    rep.add(std::string("identity-") + to_string(id), anchor, worst[id].value, tol, worst[id].where);
  }
  return rep;
}

VerificationReport suite_reduction(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "reduction";
  rep.seed = cfg.seed;
  Session s(single_puncture(cfg), 8);
  const LatticeContext& ctx = s.ctx();
  const CurveConstants k = curve_constants(ctx);
  Sampler rng(cfg.seed);
  const std::string anchor = "direct sum decomposition";

  long example_fail = 0;
  std::string example_detail;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      ++example_fail;
      example_detail += what + "; ";
    }
  };
  {
    ReductionResult r = reduce_mod_derivative(EllipticPoly(1));
    expect(r.c == Scalar(1) && r.lambdas.empty() && r.primitive.is_zero(), "reduce(1)");
    r = reduce_mod_derivative(EllipticPoly::P());
    expect(r.c == -Scalar::e2() && r.lambdas.empty() && r.primitive == -EllipticPoly::X(), "reduce(P)");
    r = reduce_mod_derivative(g_as_elliptic_poly(4));
    expect(r.c.is_zero() && r.lambdas.size() == 1 && r.lambdas.count(4) == 1 && r.lambdas.at(4) == Scalar(1) &&
               r.primitive.is_zero(),
           "reduce(g_4)");
    expect(ep_derive(EllipticPoly::X()) == -EllipticPoly::P() - EllipticPoly(Scalar::e2()), "dX");
    expect(ep_derive(EllipticPoly::P()) == EllipticPoly::Q(), "dP");
    EllipticPoly relation = ep_power(EllipticPoly::Q(), 2) - ep_power(EllipticPoly::P(), 3) * Scalar(4);
    relation += Scalar::g2() * EllipticPoly::P();
    relation += EllipticPoly(Scalar::g3());
    expect(relation.is_zero() && ep_derive(relation).is_zero(), "Q^2 = 4P^3 - g2 P - g3");
  }
  rep.add_exact("examples", "dX = -(P + e_2), dP = Q and the cubic relation", example_fail, example_detail);

  long round_trip = 0, uniqueness = 0, exactness = 0, leibniz = 0, symbol_mult = 0;
  Worst numeric;
  for (int t = 0; t < 50; ++t) {
    EllipticPoly u = rng.poly(6, rng.integer(1, 6));
    ReductionResult r = reduce_mod_derivative(u);
    if (reassemble(r) != u) ++round_trip;
    EllipticPoly w = rng.poly(5, rng.integer(1, 4));
    ReductionResult shifted = reduce_mod_derivative(u + ep_derive(w));
    if (shifted.c != r.c || shifted.lambdas != r.lambdas) ++uniqueness;
    ReductionResult exact = reduce_mod_derivative(ep_derive(w));
    if (!exact.c.is_zero() || !exact.lambdas.empty() || !(exact.primitive - w).is_constant()) ++exactness;

    EllipticPoly v = rng.poly(6, rng.integer(1, 4));
    EllipticPoly uv = ep_multiply(u, v);
    if (ep_derive(uv) != ep_multiply(ep_derive(u), v) + ep_multiply(u, ep_derive(v))) ++leibniz;
    int du = filtration_degree(u), dv = filtration_degree(v), duv = filtration_degree(uv);
    if (duv > du + dv) ++symbol_mult;
    if (!u.is_zero() && !v.is_zero() && duv == du + dv && graded_symbol(uv) != graded_symbol(u) * graded_symbol(v)) {
      ++symbol_mult;
    }

    if (t % 10 == 0) {
      for (int p = 0; p < 5; ++p) {
        Complex z = rng.point(s.punctures(), 0.2);
        Complex lhs = evaluate(u, ctx, z);
        Complex c = r.c.evaluate(k);
        double scale = std::max(std::abs(lhs), std::abs(c));
        Complex rhs = c;
        for (const auto& [n, lambda] : r.lambdas) {
          Complex term = lambda.evaluate(k) * s.table().g(n, z);
          scale = std::max(scale, std::abs(term));
          rhs += term;
        }
        Complex d = cauchy_derivative([&](Complex x) { return evaluate(r.primitive, ctx, x); }, z, 0.07);
        scale = std::max(scale, std::abs(d));
        rhs += d;
        numeric.update(rel(lhs - rhs, scale), at(z));
      }
    }
  }
  rep.add_exact("round-trip", anchor, round_trip);
  rep.add_exact("uniqueness", anchor, uniqueness);
  rep.add_exact("exact-input", "reduce(dv) = (0, 0, v + const)", exactness);
  rep.add_exact("leibniz", "d(uv) = d(u) v + u d(v)", leibniz);
  rep.add_exact("symbol-multiplicative", "gr(uv) = gr(u) gr(v) when degrees add", symbol_mult);
  rep.add("numeric", anchor, numeric.value, cfg.tolerance, numeric.where);
  return rep;
}

VerificationReport suite_multipoint(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "multipoint";
  rep.seed = cfg.seed;
  Session s(cfg, 8);
  const LatticeContext& ctx = s.ctx();
  const PunctureSet& S = s.punctures();
  const CurveConstants k = curve_constants(ctx);
  const int count = static_cast<int>(S.representatives().size());
  Sampler rng(cfg.seed);
  const std::string anchor = "linearly spanned by the image of the family T_s(g_n)";

  long example_fail = 0;
  {
    MultiPointElement m;
    m.components[count - 1] = EllipticPoly(1);
    MultiPointReduction r = reduce_multipoint(m);
    if (r.c != Scalar(1) || !r.lambdas.empty()) ++example_fail;

    MultiPointElement m2;
    m2.components[0] = g_as_elliptic_poly(2);
    m2.components[count - 1] += g_as_elliptic_poly(3);
    r = reduce_multipoint(m2);
    std::map<std::pair<int, int>, Scalar> expected{{{0, 2}, Scalar(1)}, {{count - 1, 3}, Scalar(1)}};
    if (!r.c.is_zero() || r.lambdas != expected) ++example_fail;

    MultiPointElement m3;
    m3.components[0] = ep_derive(EllipticPoly::monomial(1, 1, 2, Scalar(3)));
    r = reduce_multipoint(m3);
    if (!r.c.is_zero() || !r.lambdas.empty()) ++example_fail;
  }
  rep.add_exact("examples", anchor, example_fail);

  long symbolic = 0;
  Worst numeric;
  for (int t = 0; t < 20; ++t) {
    MultiPointElement m;
    for (int idx = 0; idx < count; ++idx) {
      if (rng.integer(0, 2) > 0) m.components[idx] = rng.poly(6, rng.integer(1, 5));
    }
    if (m.components.empty()) m.components[rng.integer(0, count - 1)] = rng.poly(6, 3);
    MultiPointReduction r = reduce_multipoint(m);

    Scalar constants;
    for (const auto& [idx, u] : m.components) {
      EllipticPoly rest = u;
      for (const auto& [key, lambda] : r.lambdas) {
        if (key.first == idx) rest -= lambda * g_as_elliptic_poly(key.second);
      }
      auto it = r.primitive.components.find(idx);
      if (it != r.primitive.components.end()) rest -= ep_derive(it->second);
      if (!rest.is_constant()) ++symbolic;
      constants += rest.constant_term();
    }
    if (constants != r.c) ++symbolic;

    for (int p = 0; p < 5; ++p) {
      Complex z = rng.point(S, 0.2);
      Complex lhs = evaluate(m, S, z);
      Complex c = r.c.evaluate(k);
      double scale = std::max(std::abs(lhs), std::abs(c));
      Complex rhs = c;
      for (const auto& [key, lambda] : r.lambdas) {
        Complex term = lambda.evaluate(k) * s.table().g(key.second, z - S.representatives()[key.first]);
        scale = std::max(scale, std::abs(term));
        rhs += term;
      }
      for (const auto& [idx, h] : r.primitive.components) {
        Complex shift = S.representatives()[static_cast<std::size_t>(idx)];
        Complex d = cauchy_derivative([&](Complex x) { return evaluate(h, ctx, x - shift); }, z, 0.07);
        scale = std::max(scale, std::abs(d));
        rhs += d;
      }
      numeric.update(rel(lhs - rhs, scale), at(z));
    }
  }
  rep.add_exact("symbolic", anchor, symbolic);
  rep.add("numeric", anchor, numeric.value, cfg.tolerance, numeric.where);
  return rep;
}

VerificationReport suite_shuffle(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "shuffle";
  rep.seed = cfg.seed;
  Sampler rng(cfg.seed);
  const Complex s = cfg.punctures.size() > 1 ? cfg.punctures[1] : Complex(0.5, 0.5);
  const std::vector<Letter> alphabet{{0, 0.0}, {1, 0.0}, {2, 0.0}, {1, s}};
  const Element one = Element::unit();

  long commutative = 0, associative = 0, unit = 0, morphism = 0, coassociative = 0, counit_fail = 0;
  long antipode_fail = 0, round_trip = 0, regular = 0, degree_fail = 0;
  for (int t = 0; t < 30; ++t) {
    Element u = rng.element(alphabet, 4, 2);
    Element v = rng.element(alphabet, 4, 2);
    Element uv = shuffle_product(u, v);
    if (uv != shuffle_product(v, u)) ++commutative;
    if (shuffle_product(u, one) != u || shuffle_product(one, u) != u) ++unit;
    if (t < 10) {
      Element a(rng.word(alphabet, rng.integer(0, 4)), rng.small_rational());
      Element b(rng.word(alphabet, rng.integer(0, 4)), rng.small_rational());
      Element c(rng.word(alphabet, rng.integer(0, 4)), rng.small_rational());
      if (shuffle_product(shuffle_product(a, b), c) != shuffle_product(a, shuffle_product(b, c))) ++associative;
    }
    if (coproduct(uv) != tensor_shuffle(coproduct(u), coproduct(v))) ++morphism;

    Word w = rng.word(alphabet, rng.integer(0, 4));
    Element we(w);
    Triple left, right;
    for (const auto& [ab, c] : coproduct(we)) {
      for (const auto& [a12, c2] : coproduct(Element(ab.first))) add_to(left, {a12.first, a12.second, ab.second}, c * c2);
      for (const auto& [b12, c2] : coproduct(Element(ab.second))) add_to(right, {ab.first, b12.first, b12.second}, c * c2);
    }
    if (left != right) ++coassociative;

    Element eps_left, eps_right, s_left, s_right;
    for (const auto& [ab, c] : coproduct(u)) {
      eps_left += Element(ab.second, c * counit(Element(ab.first)));
      eps_right += Element(ab.first, c * counit(Element(ab.second)));
      s_left += shuffle_product(antipode(Element(ab.first, c)), Element(ab.second));
      s_right += shuffle_product(Element(ab.first, c), antipode(Element(ab.second)));
    }
    if (eps_left != u || eps_right != u) ++counit_fail;
    Element expected = one * counit(u);
    if (s_left != expected || s_right != expected) ++antipode_fail;
    if (antipode(uv) != shuffle_product(antipode(u), antipode(v))) ++antipode_fail;

    StarPolynomial<GaussRational> p = star_decompose(u);
    if (reconstruct(p) != u) ++round_trip;
    for (const auto& c : p) {
      if (!is_regular(c)) ++regular;
    }
    StarPolynomial<GaussRational> q;
    for (int d = rng.integer(0, 2); d >= 0; --d) {
      Element c;
      Element raw = rng.element(alphabet, 3, 2);
      for (const auto& [word, coeff] : raw.terms()) {
        if (word.empty() || !word.front().is_log()) c.add(word, coeff);
      }
      q.push_back(c);
    }
    while (!q.empty() && q.back().is_zero()) q.pop_back();
    if (star_decompose(reconstruct(q)) != q) ++round_trip;

    auto du = degree(u), dv = degree(v), duv = degree(uv);
    if (duv && du && dv && *duv > *du + *dv) ++degree_fail;
  }
  rep.add_exact("commutative", "u sh v = v sh u", commutative);
  rep.add_exact("associative", "(u sh v) sh w = u sh (v sh w)", associative);
  rep.add_exact("unit", "1 sh u = u", unit);
  rep.add_exact("coproduct-morphism", "Delta(u sh v) = Delta(u) sh Delta(v)", morphism);
  rep.add_exact("coassociative", "(Delta x id) Delta = (id x Delta) Delta", coassociative);
  rep.add_exact("counit", "(eps x id) Delta = id = (id x eps) Delta", counit_fail);
  rep.add_exact("antipode", "m (S x id) Delta = eps = m (id x S) Delta", antipode_fail);
  rep.add_exact("star-round-trip", "unique algebra isomorphism Sh*(V)[X] -> Sh(V)", round_trip);
  rep.add_exact("star-regular", "star_decompose has coefficients in Sh*(V)", regular);
  rep.add_exact("degree", "deg(u sh v) <= deg(u) + deg(v)", degree_fail);

  Word tail{Letter{2, s}};
  StarPolynomial<GaussRational> split = star_decompose(Element(Word{Letter{1, 0.0}, Letter{2, s}}));
  bool ok = split.size() == 2 && split[1] == Element(tail) && split[0] == Element(Word{Letter{2, s}, Letter{1, 0.0}}, -1);
  rep.add_exact("example[(1;0)|(2;s)]", "[(1;0)|w] = X sh [w] - [w|(1;0)]", ok ? 0 : 1);
  return rep;
}

VerificationReport suite_uniformization(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "uniformization";
  rep.seed = cfg.seed;
  Sampler rng(cfg.seed);
  UniformizeOptions opts;
  opts.lattice = cfg.lattice_options();

  auto orbit_distance = [](Complex l2, Complex l) {
    const Complex orbit[6] = {l, 1.0 - l, 1.0 / l, 1.0 / (1.0 - l), l / (l - 1.0), (l - 1.0) / l};
    double best = INFINITY;
    for (Complex m : orbit) best = std::min(best, rel(l2 - m, std::abs(m)));
    return best;
  };

  Worst matching, curve, half, involution, equivariance, s3, sums;
  long lattice_fail = 0;
  for (int k = 0; k < 20; ++k) {
    BranchTriple t;
    do {
      Complex a1 = rng.box(2.0);
      Complex a2 = rng.box(2.0);
      t = {a1, a2, rng.box(2.0)};
    } while (std::min({std::abs(t.a1 - t.a2), std::abs(t.a1 - t.a3), std::abs(t.a2 - t.a3)}) < 0.1);
    std::string where = "(" + format_complex(t.a1) + ", " + format_complex(t.a2) + ", " + format_complex(t.a3) + ")";
    UniformizationResult u = uniformize(t, opts);
    double scale = std::max({1.0, std::abs(t.a1), std::abs(t.a2), std::abs(t.a3)});
    for (double r : u.residuals) matching.update(r / scale, where);

    LatticeContext ctx(u.tau, opts.lattice);
    PunctureSet lattice(ctx);
    Complex z = rng.point(lattice, 0.05);
    curve.update(curve_residual(t, iso_point(u, ctx, z)), where + ", " + at(z));

    const Complex halves[3] = {0.5, 0.5 * u.tau, 0.5 * (1.0 + u.tau)};
    const Complex roots[3] = {t.a1, t.a2, t.a3};
    Complex total = 0.0;
    for (int h = 0; h < 3; ++h) {
      ProjectivePoint p = iso_point(u, ctx, halves[h]);
      double y_scale = std::abs(u.a_three_halves) * std::max(1.0, std::abs(ctx.weierstrass_p(halves[h])));
      half.update(std::abs(p.X / p.T - roots[h]) / scale + std::abs(p.Y / p.T) / std::max(1.0, y_scale), where);
      total += u.a * ctx.weierstrass_p(halves[h]) + u.b;
    }
    sums.update(rel(total - (t.a1 + t.a2 + t.a3), 3.0 * scale), where);

    ProjectivePoint p = iso_point(u, ctx, z);
    ProjectivePoint m = iso_point(u, ctx, -z);
    double pscale = std::max({1.0, std::abs(p.X), std::abs(p.Y)});
    involution.update((std::abs(m.X - p.X) + std::abs(m.Y + p.Y)) / pscale, where + ", " + at(z));

    for (Complex lp : {Complex(0.0), Complex(1.0), u.tau, 2.0 - u.tau}) {
      ProjectivePoint o = iso_point(u, ctx, lp);
      if (o.X != Complex(0.0) || o.Y != Complex(1.0) || o.T != Complex(0.0)) ++lattice_fail;
    }

    Complex c = std::polar(rng.uniform(0.5, 2.0), rng.uniform(-std::numbers::pi, std::numbers::pi));
    Complex d = rng.box(1.0);
    UniformizationResult v = uniformize({c * t.a1 + d, c * t.a2 + d, c * t.a3 + d}, opts);
    double eq = std::abs(lambda_of_tau(v.tau, opts.lattice) - lambda_of_tau(u.tau, opts.lattice)) /
                std::max(1.0, std::abs(u.lambda_value));
    eq = std::max(eq, rel(v.a - c * u.a, std::abs(c * u.a)));
    eq = std::max(eq, rel(v.b - (c * u.b + d), std::abs(c * u.b + d)));
    equivariance.update(eq, where);

    const BranchTriple perms[5] = {{t.a2, t.a1, t.a3}, {t.a1, t.a3, t.a2}, {t.a3, t.a2, t.a1},
                                   {t.a2, t.a3, t.a1}, {t.a3, t.a1, t.a2}};
    for (const BranchTriple& q : perms) {
      UniformizationResult w = uniformize(q, opts);
      s3.update(orbit_distance(lambda_of_tau(w.tau, opts.lattice), u.lambda_value), where);
    }
  }
  rep.add("matching", "a wp(1/2) + b = a1, a wp(tau/2) + b = a2, a wp((1+tau)/2) + b = a3", matching.value,
          cfg.tolerance, matching.where);
  rep.add("curve", "Y^2 T = (X - a1 T)(X - a2 T)(X - a3 T)", curve.value, cfg.tolerance, curve.where);
  rep.add("half-periods", "the images of the 2-torsion points are respectively [a_k:0:1]", half.value, cfg.tolerance,
          half.where);
  rep.add("involution", "intertwines the involution", involution.value, cfg.tolerance, involution.where);
  rep.add_exact("lattice-points", "pr(0) -> [0:1:0]", lattice_fail);
  rep.add("affine-equivariance", "actions of the group C^x semidirect C", equivariance.value, cfg.tolerance,
          equivariance.where);
  rep.add("s3-orbit", "equipped with an action of S_3", s3.value, cfg.tolerance, s3.where);
  rep.add("root-sum", "a1 + a2 + a3 = sum over half periods of a wp + b", sums.value, cfg.tolerance, sums.where);

  UniformizationResult sq = uniformize({1.0, 0.0, -1.0}, opts);
  LatticeContext ctx(sq.tau, opts.lattice);
  std::ostringstream tau_text;
  tau_text << "tau = " << format_complex(sq.tau);
  rep.add("j(1,0,-1)", "lambda -> 256 (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2)",
          std::abs(j_invariant(ctx) - 1728.0), 1e-6, tau_text.str());
  rep.add("j-from-lambda(1,0,-1)", "lambda -> 256 (1 - lambda + lambda^2)^3 / (lambda^2 (1 - lambda)^2)",
          std::abs(j_from_lambda(sq.lambda_value) - 1728.0), 1e-6, tau_text.str());
  double sq_match = *std::max_element(sq.residuals.begin(), sq.residuals.end());
  rep.add("matching(1,0,-1)", "There exists tau in the upper half plane", sq_match, cfg.tolerance, tau_text.str());
  return rep;
}

VerificationReport suite_independence(const RunConfig& cfg) {
  VerificationReport rep;
  rep.suite = "independence";
  rep.seed = cfg.seed;
  Session s(single_puncture(cfg), 4);
  const KroneckerTable& table = s.table();
  const PunctureSet& S = s.punctures();
  const GammaEvaluator& gamma = s.gamma();
  const LatticeContext& ctx = s.ctx();
  Sampler rng(cfg.seed);
  IndependenceOptions opts;

  // Star-shaped region around 0: leave along the real axis, follow a small arc, then go out radially.
  const std::vector<Letter> alphabet{{0, 0.0}, {1, 0.0}};
  std::vector<Word> words{{}};
  for (const Letter& a : alphabet) words.push_back({a});
  for (const Letter& a : alphabet) {
    for (const Letter& b : alphabet) words.push_back({a, b});
  }
  const double arc = 0.5 * gamma.delta();
  std::vector<Complex> points;
  std::vector<std::vector<Complex>> gammas;
  while (points.size() < 120) {
    double radius = 0.005 * std::pow(3.0 / 0.005, rng.uniform());
    double theta = rng.uniform(-3.0, 3.0);
    Complex z = std::polar(radius, theta);
    std::vector<Complex> via;
    int steps = static_cast<int>(std::ceil(std::abs(theta) / 0.2));
    for (int k = 1; k <= steps; ++k) via.push_back(std::polar(arc, theta * k / steps));
    if (S.segment_distance(via.empty() ? Complex(arc) : via.back(), z, 0.0, 0.9 * arc) < 0.08) continue;
    if (S.distance(z) < 0.004) continue;
    bool distinct = true;
    for (Complex p : points) distinct = distinct && std::abs(p - z) > 1e-6;
    if (!distinct) continue;
    points.push_back(z);
    gammas.push_back(gamma.shuffle(words, gamma.default_path(z, via)));
  }
  std::vector<std::vector<Complex>> family(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    Complex g1 = table.g(1, points[i]);
    family[i] = gammas[i];
    for (Complex v : gammas[i]) family[i].push_back(g1 * v);
  }
  RankReport base = numeric_independence_check(family, points, table, S, opts);
  std::ostringstream detail;
  detail << "rank " << base.rank << "/" << base.columns << " over " << base.samples << " samples";
  rep.add_lower("family", "are O_S-bases", base.smallest_relative, opts.threshold, detail.str());

  // Planted relations: each control lies in the O_S-span of the family.
  const std::vector<std::pair<std::string, std::function<Complex(std::size_t)>>> controls{
      {"Gamma(0)^2", [&](std::size_t i) { return gammas[i][1] * gammas[i][1]; }},
      {"g_1 Gamma(0) + E_2 Gamma(1)",
       [&](std::size_t i) {
         return table.g(1, points[i]) * gammas[i][1] + ctx.eisenstein_function(2, points[i]) * gammas[i][2];
       }},
      {"Gamma(0) Gamma(1)", [&](std::size_t i) { return gammas[i][1] * gammas[i][2]; }},
  };
  for (const auto& [name, f] : controls) {
    auto values = family;
    for (std::size_t i = 0; i < points.size(); ++i) values[i].push_back(f(i));
    RankReport r = numeric_independence_check(values, points, table, S, opts);
    std::ostringstream d;
    d << "rank " << r.rank << "/" << r.columns << ", smallest " << r.smallest_relative;
    rep.add("control/" + name, "a planted O_S-relation is detected", r.smallest_relative, opts.threshold, d.str());
    rep.add_lower("gap/" + name, "singular-value gap between the family and the control",
                  base.smallest_relative / r.smallest_relative, 1e3);
  }

  std::vector<Complex> simple_points;
  for (int k = 0; k < 24; ++k) simple_points.push_back(rng.point(S, 0.1));
  std::vector<Evaluator> transcendental{[](Complex) { return Complex(1.0); },
                                        [&](Complex z) { return table.g(1, z); }};
  RankReport pair = numeric_independence_check(transcendental, simple_points, table, S, opts);
  rep.add_lower("example/{1,g_1}", "g_1 is transcendental over O_S", pair.smallest_relative, opts.threshold);
  auto planted = transcendental;
  planted.push_back([&](Complex z) {
    Complex g = table.g(1, z);
    return g * g - 2.0 * (g * g / 2.0);
  });
  for (int k = 0; k < 12; ++k) simple_points.push_back(rng.point(S, 0.1));
  RankReport zero = numeric_independence_check(planted, simple_points, table, S, opts);
  rep.add("example/{1,g_1,0}", "a planted O_S-relation is detected", zero.smallest_relative, opts.threshold);
  return rep;
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
  static const std::map<std::string, std::function<VerificationReport(const RunConfig&)>> table{
      {"functional-equations", suite_functional_equations},
      {"oracle", suite_oracle},
      {"graded-symbol", suite_graded_symbol},
      {"regularization", suite_regularization},
      {"derivative", suite_derivative},
      {"sect56", suite_sect56},
      {"reduction", suite_reduction},
      {"multipoint", suite_multipoint},
      {"shuffle", suite_shuffle},
      {"uniformization", suite_uniformization},
      {"independence", suite_independence},
  };
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  if (name == "all") {
    rep.suite = "all";
    rep.seed = cfg.seed;
    for (const std::string& n : suite_names()) rep.merge(run_suite(n, cfg));
  } else {
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorCode::configuration, "unknown suite '" + name + "'");
    rep = it->second(cfg);
  }
  if (cfg.timing) {
    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return rep;
}

}  // namespace elliptikit::app
