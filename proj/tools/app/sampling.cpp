#include "sampling.hpp"

#include <cmath>
#include <numbers>

namespace elliptikit::app {

double Sampler::uniform(double lo, double hi) {
  double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int Sampler::integer(int lo, int hi) {
  return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Complex Sampler::point(const PunctureSet& punctures, double margin) {
  const Complex tau = punctures.context().tau();
  for (int attempt = 0; attempt < 100000; ++attempt) {
    double x = uniform();
    double y = uniform();
    Complex z = x + y * tau;
    if (punctures.distance(z) >= margin) return z;
  }
  throw Error(ErrorCode::configuration, "no sample point keeps the requested distance from the punctures");
}

Complex Sampler::box(double half_width) {
  double x = uniform(-half_width, half_width);
  return {x, uniform(-half_width, half_width)};
}

GaussRational Sampler::small_rational() {
  int num = integer(-9, 9);
  int den = integer(1, 6);
  Rational re(num, den);
  Rational im(0);
  if (integer(0, 2) == 0) {
    num = integer(-5, 5);
    den = integer(1, 4);
    im = Rational(num, den);
  }
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

Scalar Sampler::small_scalar() {
  Scalar c(small_rational());
  switch (integer(0, 5)) {
    case 0: return c * Scalar::e2();
    case 1: return c * Scalar::g2();
    case 2: return c + Scalar::g3();
    default: return c;
  }
}

EllipticPoly Sampler::poly(int max_degree, int terms) {
  EllipticPoly u;
  for (int t = 0; t < terms; ++t) {
    int w = integer(0, max_degree);
    int b = (w >= 3 && integer(0, 1) == 1) ? 1 : 0;
    int a = integer(0, (w - 3 * b) / 2);
    int j = w - 3 * b - 2 * a;
    u.add_monomial(a, b, j, small_scalar());
  }
  return u;
}

Word Sampler::word(const std::vector<Letter>& alphabet, int length) {
  Word w;
  for (int k = 0; k < length; ++k) w.push_back(alphabet[static_cast<std::size_t>(integer(0, static_cast<int>(alphabet.size()) - 1))]);
  return w;
}

ShuffleElement<GaussRational> Sampler::element(const std::vector<Letter>& alphabet, int max_length, int words) {
  ShuffleElement<GaussRational> e;
  for (int k = 0; k < words; ++k) e.add(word(alphabet, integer(0, max_length)), small_rational());
  return e;
}

Complex five_point_derivative(const std::function<Complex(Complex)>& f, Complex z, double h) {
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z, double r, int n) {
  Complex total = 0.0;
  for (int k = 0; k < n; ++k) {
    Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / n);
    total += f(z + r * e) / e;
  }
  return total / (static_cast<double>(n) * r);
}

}  // namespace elliptikit::app
