#pragma once

#include <vector>

#include "elliptikit/itint.hpp"
#include "elliptikit/shuffle.hpp"

namespace elliptikit {

struct TangentialConfig {
  double delta = 0.1;
  // Decreasing sample points in (0, delta); empty means delta/2 * 2^-k, k = 0..29.
  std::vector<double> t_samples;
  // Highest power of log t in the fit; negative means degree(word).
  int fit_degree_cap = -1;
  // Highest power of t in the o(1) correction terms t^m log^j t.
  int correction_order = 5;
  double residual_tolerance = 1e-6;
};

struct TangentialResult {
  Complex value;
  // Coefficients of log^j t in the fitted polynomial P(log t), j = 0..degree.
  std::vector<Complex> log_coefficients;
  double residual = 0.0;
  std::vector<double> t_samples;
  std::vector<Complex> samples;
};

FormSpec form_of(const Letter& letter);
std::vector<FormSpec> forms_of(const Word& word);

// Regularised functions ~Gamma(w; z) along paths that leave 0 in the positive real direction.
class GammaEvaluator {
 public:
  explicit GammaEvaluator(const IteratedIntegrator& integrator, double delta = 0.1);

  const IteratedIntegrator& integrator() const { return *integrator_; }
  double delta() const { return delta_; }

  // 0 -> delta/2 -> via... -> z.
  Path default_path(Complex z, const std::vector<Complex>& via = {}) const;
  // Returns the path with a tangential first segment, inserting delta/2 when needed.
  Path normalize(const Path& path) const;

  Complex G(const Path& path) const;
  Complex shuffle(const Word& word, const Path& path) const;
  std::vector<Complex> shuffle(const std::vector<Word>& words, const Path& path) const;
  Complex shuffle(const ShuffleElement<GaussRational>& element, const Path& path) const;
  Complex shuffle(const ShuffleElement<Complex>& element, const Path& path) const;

  TangentialResult tangential(const Word& word, const Path& path, const TangentialConfig& config = {}) const;

  // |five-point derivative of ~Gamma(w) - T_a g_n * ~Gamma(w')| / max(1, |T_a g_n * ~Gamma(w')|).
  double derivative_check(const Word& word, const Path& path, double h = 1e-3) const;

  // sum over deconcatenation of ~Gamma(w')(z0) I_z0(w'')(z).
  Complex basepoint_transport(const Word& word, const Path& to_z0, const Path& z0_to_z) const;

 private:
  const IteratedIntegrator* integrator_;
  double delta_;
};

}  // namespace elliptikit
