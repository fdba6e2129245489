#include <gtest/gtest.h>

#include <random>

#include "elliptikit/hyperlog.hpp"
#include "oracles.hpp"

using namespace elliptikit;

namespace {

const Complex kI(0.0, 1.0);

struct Fixture : ::testing::Test {
  LatticeContext ctx{kI};
  KroneckerTable table{ctx, 8};
  PunctureSet punctures{ctx};
  IteratedIntegrator integrator{table, punctures};
  GammaEvaluator gamma{integrator};
};

}  // namespace

using Hyperlog = Fixture;

TEST_F(Hyperlog, ParseWord) {
  std::map<std::string, Complex> labels{{"s", Complex(0.5, 0.5)}};
  HLWord w = parse_hl_word("*, 0 | s", labels);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_TRUE(w[0].star);
  EXPECT_FALSE(w[1].star);
  EXPECT_EQ(w[1].s, Complex(0.0));
  EXPECT_EQ(w[2].s, Complex(0.5, 0.5));
  EXPECT_THROW(parse_hl_word("*, t", labels), ParseError);
}

TEST_F(Hyperlog, StarWords) {
  Complex z0(0.2, 0.0), z(0.5, 0.0);
  EXPECT_NEAR(std::abs(hl_eval({HLLetter::star_letter()}, Path::segment(z0, z), integrator) - 0.3), 0.0, 1e-14);
  Complex w0(0.15, 0.1), w(0.4, 0.35);
  double f = 1.0;
  for (int n = 1; n <= 4; ++n) {
    f *= n;
    HLWord word(static_cast<std::size_t>(n), HLLetter::star_letter());
    EXPECT_NEAR(std::abs(hl_eval(word, Path::segment(w0, w), integrator) - std::pow(w - w0, n) / f), 0.0, 1e-13);
  }
}

TEST_F(Hyperlog, ZeroLetterIsE2Form) {
  Complex z0(0.15, 0.1), z(0.4, 0.35);
  Complex v = hl_eval({HLLetter::puncture(0.0)}, Path::segment(z0, z), integrator);
  EXPECT_NEAR(std::abs(v - (table.g(1, z0) - table.g(1, z))), 0.0, 1e-10);
}

TEST_F(Hyperlog, Catalogue) {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> u(0.15, 0.4);
  for (int trial = 0; trial < 4; ++trial) {
    Complex z0(u(rng), u(rng)), z(u(rng), u(rng));
    Path to_z0 = gamma.default_path(z0);
    Path rest = Path::segment(z0, z);
    for (Sect56Identity id : {Sect56Identity::i, Sect56Identity::ii, Sect56Identity::iii, Sect56Identity::iv,
                              Sect56Identity::v}) {
      double tol = id == Sect56Identity::ii ? 1e-8 : 1e-7;
      EXPECT_LT(verify_sect56(id, to_z0, rest, gamma).residual, tol) << to_string(id);
    }
  }
}

TEST_F(Hyperlog, CatalogueOrders) {
  Complex z0(0.2, 0.2), z(0.3, 0.35);
  Path to_z0 = gamma.default_path(z0);
  Path rest = Path::segment(z0, z);
  IdentityResidual zero = verify_sect56(Sect56Identity::i, to_z0, rest, gamma, 0);
  EXPECT_EQ(zero.lhs, Complex(1.0));
  EXPECT_EQ(zero.rhs, Complex(1.0));
  for (int n = 1; n <= 4; ++n) {
    EXPECT_LT(verify_sect56(Sect56Identity::iv, to_z0, rest, gamma, n).residual, 1e-7);
  }
  EXPECT_THROW(verify_sect56(Sect56Identity::i, to_z0, rest, gamma, -1), Error);
}

TEST_F(Hyperlog, CatalogueNeedsSinglePuncture) {
  PunctureSet two(ctx, {0.0, Complex(0.5, 0.5)});
  IteratedIntegrator i2(table, two);
  GammaEvaluator g2(i2);
  Path to_z0 = g2.default_path(Complex(0.2, 0.2));
  EXPECT_THROW(verify_sect56(Sect56Identity::ii, to_z0, Path::segment(Complex(0.2, 0.2), 0.3), g2), Error);
  EXPECT_EQ(parse_sect56_identity("iv"), Sect56Identity::iv);
  EXPECT_THROW(parse_sect56_identity("vi"), Error);
}

TEST_F(Hyperlog, IndependenceVerdicts) {
  std::vector<Complex> pts;
  std::mt19937 rng(79);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  while (pts.size() < 40) {
    Complex z(u(rng), u(rng));
    if (punctures.distance(z) > 0.1) pts.push_back(z);
  }
  std::vector<Evaluator> base{[](Complex) { return Complex(1.0); }, [&](Complex z) { return table.g(1, z); }};
  RankReport ok = numeric_independence_check(base, pts, table, punctures);
  EXPECT_TRUE(ok.independent);
  EXPECT_EQ(ok.rank, ok.columns);

  std::vector<Evaluator> planted = base;
  planted.push_back([&](Complex z) {
    Complex g = table.g(1, z);
    return g * g - 2.0 * (g * g / 2.0);
  });
  RankReport bad = numeric_independence_check(planted, pts, table, punctures);
  EXPECT_FALSE(bad.independent);
  EXPECT_LT(bad.smallest_relative, 1e-12);

  std::vector<Evaluator> hidden = base;
  // g_2 = (g_1^2 - E_2 + e_2)/2 lies in the span of 1, g_1^2 and E_2; with g_1^2 present the family is dependent.
  hidden.push_back([&](Complex z) { return table.g(1, z) * table.g(1, z); });
  hidden.push_back([&](Complex z) { return table.g(2, z); });
  RankReport hid = numeric_independence_check(hidden, pts, table, punctures);
  EXPECT_FALSE(hid.independent);
}

TEST_F(Hyperlog, SpanningValues) {
  PunctureSet two(ctx, {0.0, Complex(0.5, 0.5)});
  Complex z(0.3, 0.2);
  auto v = os_spanning_values(table, two, 3, z);
  // 1, E_2, E_3 at both punctures, and (T_s - id) g_1.
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0], Complex(1.0));
  EXPECT_NEAR(std::abs(v[1] - ctx.eisenstein_function(2, z)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(v[5] - (table.g(1, z - Complex(0.5, 0.5)) - table.g(1, z))), 0.0, 1e-12);
}

TEST(ContourResidue, SimplePole) {
  auto f = [](Complex z) { return 3.0 / (z - Complex(0.2, 0.1)) + z * z; };
  EXPECT_NEAR(std::abs(contour_residue(f, Complex(0.2, 0.1), 0.05) - 3.0), 0.0, 1e-12);
}
