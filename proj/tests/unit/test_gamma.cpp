#include <gtest/gtest.h>

#include <random>

#include "elliptikit/gamma.hpp"
#include "oracles.hpp"

using namespace elliptikit;

namespace {

const Complex kI(0.0, 1.0);
const Complex kS(0.5, 0.45);
const Letter kLog{1, 0.0};
const Letter kDz{0, 0.0};
const Letter kTwo{2, 0.0};
const Letter kLogS{1, kS};
const Letter kTwoS{2, kS};

struct Fixture : ::testing::Test {
  LatticeContext ctx{kI};
  KroneckerTable table{ctx, 8};
  PunctureSet punctures{ctx, {0.0, kS}};
  IteratedIntegrator integrator{table, punctures};
  GammaEvaluator gamma{integrator};
};

// log(theta_1(z) / theta_1'(0)) continued from 0+ along 0 -> delta/2 -> z.
Complex G_from_theta(Complex z, Complex tau, double delta) {
  Complex start = delta / 2.0;
  Complex value = std::log(oracle::theta1(start, tau) / oracle::theta1_prime0(tau));
  const int steps = 200;
  Complex prev = oracle::theta1(start, tau);
  for (int k = 1; k <= steps; ++k) {
    Complex next = oracle::theta1(start + (z - start) * (static_cast<double>(k) / steps), tau);
    value += std::log(next / prev);
    prev = next;
  }
  return value;
}

Word random_word(std::mt19937& rng, int max_length) {
  const std::vector<Letter> alphabet{kDz, kLog, kTwo, kLogS, kTwoS};
  std::uniform_int_distribution<int> len(1, max_length), pick(0, 4);
  Word w;
  for (int k = len(rng); k > 0; --k) w.push_back(alphabet[static_cast<std::size_t>(pick(rng))]);
  return w;
}

}  // namespace

using Gamma = Fixture;

TEST_F(Gamma, EmptyWord) {
  EXPECT_EQ(gamma.shuffle(Word{}, gamma.default_path(Complex(0.3, 0.2))), Complex(1.0));
}

TEST_F(Gamma, PowersOfDz) {
  Complex z(0.31, 0.22);
  Path p = gamma.default_path(z);
  double f = 1.0;
  for (int n = 1; n <= 4; ++n) {
    f *= n;
    EXPECT_NEAR(std::abs(gamma.shuffle(Word(static_cast<std::size_t>(n), kDz), p) - std::pow(z, n) / f), 0.0, 1e-12);
  }
}

TEST_F(Gamma, LogLetterIsG) {
  for (Complex z : {Complex(0.31, 0.22), Complex(0.2, -0.3), Complex(-0.25, 0.1)}) {
    Path p = gamma.default_path(z, {Complex(0.0, 0.05 * (z.imag() > 0 ? 1 : -1))});
    Complex g = gamma.G(p);
    EXPECT_NEAR(std::abs(gamma.shuffle(Word{kLog}, p) - g), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(g - G_from_theta(z, kI, gamma.delta())), 0.0, 1e-9) << z;
  }
}

TEST_F(Gamma, GDerivativeIsG1) {
  Complex z(0.33, 0.27);
  const double h = 1e-3;
  auto G = [&](Complex w) { return gamma.G(gamma.default_path(w)); };
  Complex fd = (-G(z + 2.0 * h) + 8.0 * G(z + h) - 8.0 * G(z - h) + G(z - 2.0 * h)) / (12.0 * h);
  EXPECT_NEAR(std::abs(fd - table.g(1, z)), 0.0, 1e-6);
}

TEST_F(Gamma, TangentialAgreesWithShuffle) {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    Word w = random_word(rng, 3);
    Path p = gamma.default_path(Complex(0.28, 0.19));
    TangentialResult t = gamma.tangential(w, p);
    Complex s = gamma.shuffle(w, p);
    EXPECT_NEAR(std::abs(t.value - s) / std::max(1.0, std::abs(s)), 0.0, 1e-6) << to_string(w);
  }
}

TEST_F(Gamma, TangentialReportsLogCoefficients) {
  Path p = gamma.default_path(Complex(0.28, 0.19));
  TangentialResult t = gamma.tangential(Word{kLog, kLog}, p);
  ASSERT_EQ(t.log_coefficients.size(), 3u);
  // k(a, z)(t) = (G(z) - log t)^2 / 2, so the log^2 t coefficient is 1/2.
  EXPECT_NEAR(std::abs(t.log_coefficients[2] - 0.5), 0.0, 1e-6);
  EXPECT_NEAR(std::abs(t.value - gamma.G(p) * gamma.G(p) / 2.0), 0.0, 1e-6);
}

TEST_F(Gamma, DerivativeIdentity) {
  std::mt19937 rng(67);
  EXPECT_LT(gamma.derivative_check(Word{kDz}, gamma.default_path(Complex(0.3, 0.2))), 1e-6);
  for (int trial = 0; trial < 6; ++trial) {
    Word w = random_word(rng, 3);
    EXPECT_LT(gamma.derivative_check(w, gamma.default_path(Complex(0.27, 0.21))), 1e-6) << to_string(w);
  }
}

TEST_F(Gamma, AlgebraMorphism) {
  std::mt19937 rng(71);
  Path p = gamma.default_path(Complex(0.26, 0.24));
  for (int trial = 0; trial < 8; ++trial) {
    Word u = random_word(rng, 2), v = random_word(rng, 2);
    Complex product = gamma.shuffle(u, p) * gamma.shuffle(v, p);
    Complex shuffled = gamma.shuffle(shuffle_product(ShuffleElement<GaussRational>(u), ShuffleElement<GaussRational>(v)), p);
    EXPECT_NEAR(std::abs(product - shuffled) / std::max(1.0, std::abs(product)), 0.0, 1e-8);
  }
}

TEST_F(Gamma, BasepointTransport) {
  Complex z0(0.2, 0.15), z(0.35, 0.3);
  Path to_z0 = gamma.default_path(z0);
  Path rest = Path::segment(z0, z);
  EXPECT_NEAR(std::abs(gamma.basepoint_transport(Word{kDz}, to_z0, rest) - z), 0.0, 1e-13);
  Word w{kTwo, kDz};
  Complex direct = gamma.shuffle(w, to_z0.then(rest));
  EXPECT_NEAR(std::abs(gamma.basepoint_transport(w, to_z0, rest) - direct), 0.0, 1e-8);
  Word wl{kLog, kLogS, kTwo};
  Complex direct_l = gamma.shuffle(wl, to_z0.then(rest));
  EXPECT_NEAR(std::abs(gamma.basepoint_transport(wl, to_z0, rest) - direct_l), 0.0, 1e-8);
}

TEST_F(Gamma, IteratedIntegralFromRegularisedValues) {
  // I_z0(w)(z) = sum over the deconcatenation of antipode(w')(z0) * ~Gamma(w'')(z).
  Complex z0(0.2, 0.15), z(0.35, 0.3);
  Path to_z0 = gamma.default_path(z0);
  Path rest = Path::segment(z0, z);
  Word w{kTwo, kLogS, kDz};
  Complex total = 0.0;
  for (const auto& [a, b] : deconcatenate(w)) {
    Complex left = gamma.shuffle(antipode(ShuffleElement<GaussRational>(a)), to_z0);
    total += left * gamma.shuffle(b, to_z0.then(rest));
  }
  Complex direct = integrator.integrate(forms_of(w), rest);
  EXPECT_NEAR(std::abs(total - direct), 0.0, 1e-8);
}

TEST_F(Gamma, NormalizeInsertsTangentialSegment) {
  Path p = gamma.normalize(Path::segment(0.0, Complex(0.3, 0.3)));
  ASSERT_GE(p.vertices().size(), 3u);
  EXPECT_EQ(p.vertices()[1], Complex(gamma.delta() / 2.0, 0.0));
}
