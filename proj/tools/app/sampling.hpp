#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "elliptikit/diffalg.hpp"
#include "elliptikit/shuffle.hpp"

namespace elliptikit::app {

// Seeded generator with portable draws (no std distributions).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0);
  int integer(int lo, int hi);  // inclusive
  // x + y tau with x, y in (0, 1) and at least `margin` away from every puncture translate.
  Complex point(const PunctureSet& punctures, double margin);
  Complex box(double half_width);

  GaussRational small_rational();
  Scalar small_scalar();
  // Random element of filtration degree <= max_degree.
  EllipticPoly poly(int max_degree, int terms);
  Word word(const std::vector<Letter>& alphabet, int length);
  ShuffleElement<GaussRational> element(const std::vector<Letter>& alphabet, int max_length, int words);

 private:
  std::mt19937_64 rng_;
};

// Five-point central difference.
Complex five_point_derivative(const std::function<Complex(Complex)>& f, Complex z, double h);
// Cauchy integral for f'(z) on a circle of radius r with n trapezoid nodes.
Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z, double r, int n = 64);

}  // namespace elliptikit::app
