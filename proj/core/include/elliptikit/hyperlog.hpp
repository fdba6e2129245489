#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "elliptikit/gamma.hpp"

namespace elliptikit {

// Letter of S_* = S + {*}: * is dz, the puncture 0 is E_2 dz, s != 0 is (T_s - id) g_1 dz.
struct HLLetter {
  bool star = false;
  Complex s = 0.0;

  static HLLetter star_letter() { return {true, 0.0}; }
  static HLLetter puncture(Complex s) { return {false, s}; }
  std::string to_string() const;
};

using HLWord = std::vector<HLLetter>;

FormSpec form_of(const HLLetter& letter);
// Tokens separated by commas, bars, semicolons or spaces: "*", a puncture label, or a complex literal.
HLWord parse_hl_word(const std::string& text, const std::map<std::string, Complex>& labels = {});

// L_w(z) = I_z0(w)(z) along a path from z0 to z.
Complex hl_eval(const HLWord& word, const Path& path, const IteratedIntegrator& integrator);

enum class Sect56Identity { i, ii, iii, iv, v };

Sect56Identity parse_sect56_identity(const std::string& id);
const char* to_string(Sect56Identity id);

struct IdentityResidual {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
};

// Residual of one of the five Gamma <-> hyperlogarithm relations for S = {0}.
// `to_z0` runs from the tangential base point 0 to z0, `z0_to_z` from z0 to z.
IdentityResidual verify_sect56(Sect56Identity id, const Path& to_z0, const Path& z0_to_z,
                               const GammaEvaluator& gamma, int n = 3);

struct RankReport {
  std::vector<double> singular_values;  // normalised so the largest is 1
  int columns = 0;
  int samples = 0;
  int rank = 0;
  double threshold = 0.0;
  double smallest_relative = 0.0;
  bool independent = false;
};

struct IndependenceOptions {
  int pole_degree_cap = 2;
  double threshold = 1e-6;
};

using Evaluator = std::function<Complex(Complex)>;

// Values of {1} + {T_s E_k : 2 <= k <= cap} + {(T_s - id) g_1 : s != 0} at z.
std::vector<Complex> os_spanning_values(const KroneckerTable& table, const PunctureSet& punctures, int cap, Complex z);

// SVD rank test of the products phi_m * f_j over the sample points.
RankReport numeric_independence_check(const std::vector<Evaluator>& functions, const std::vector<Complex>& sample_points,
                                      const KroneckerTable& table, const PunctureSet& punctures,
                                      IndependenceOptions options = {});
// Same, with the values f_j(sample_i) supplied as values[i][j].
RankReport numeric_independence_check(const std::vector<std::vector<Complex>>& values,
                                      const std::vector<Complex>& sample_points, const KroneckerTable& table,
                                      const PunctureSet& punctures, IndependenceOptions options = {});

// Residue at `center` by a 16-point trapezoidal contour.
Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius);

}  // namespace elliptikit
