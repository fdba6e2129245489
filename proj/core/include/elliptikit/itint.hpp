#pragma once

#include <string>
#include <vector>

#include "elliptikit/kronecker.hpp"
#include "elliptikit/path.hpp"

namespace elliptikit {

// Holomorphic one-forms f(u) du used as letters of iterated integrals.
struct FormSpec {
  enum class Kind {
    dz,             // du
    e2,             // E_2(u) du
    g1_difference,  // (g_1(u - s) - g_1(u)) du
    kronecker,      // g_n(u - a) du
    g1_regular,     // (g_1(u) - 1/u) du, analytic at 0
  };

  Kind kind = Kind::dz;
  int n = 0;
  Complex a = 0.0;

  static FormSpec dz() { return {Kind::dz, 0, 0.0}; }
  static FormSpec e2() { return {Kind::e2, 0, 0.0}; }
  static FormSpec g1_difference(Complex s) { return {Kind::g1_difference, 1, s}; }
  static FormSpec kronecker(int n, Complex a) { return {Kind::kronecker, n, a}; }
  static FormSpec g1_regular() { return {Kind::g1_regular, 1, 0.0}; }

  std::string to_string() const;
  friend bool operator==(const FormSpec& x, const FormSpec& y) {
    return x.kind == y.kind && x.n == y.n && x.a == y.a;
  }
  friend bool operator<(const FormSpec& x, const FormSpec& y);
};

Complex evaluate_form(const FormSpec& form, const KroneckerTable& table, Complex u);

struct IntegrationOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;
  // Minimum distance of path segments from punctures; 0 means 1e-3 * min(1, |tau|).
  double eps_path = 0.0;
  // Initial panel length before adaptive bisection.
  double max_panel = 0.25;
};

// Iterated integrals I([w_1|...|w_k]) with d I(w) = I(w_1..w_(k-1)) w_k, so w_1 is innermost.
// All requested words are integrated together along a prefix trie.
class IteratedIntegrator {
 public:
  IteratedIntegrator(const KroneckerTable& table, const PunctureSet& punctures, IntegrationOptions options = {});

  const KroneckerTable& table() const { return *table_; }
  const PunctureSet& punctures() const { return *punctures_; }
  const IntegrationOptions& options() const { return options_; }
  double eps_path() const { return eps_path_; }

  std::vector<Complex> integrate(const std::vector<std::vector<FormSpec>>& words, const Path& path,
                                 StartMode mode = StartMode::regular) const;
  Complex integrate(const std::vector<FormSpec>& word, const Path& path, StartMode mode = StartMode::regular) const;

 private:
  const KroneckerTable* table_;
  const PunctureSet* punctures_;
  IntegrationOptions options_;
  double eps_path_;
};

Complex iterated_integral(const std::vector<FormSpec>& forms, const Path& path, const IteratedIntegrator& integrator);
// sum over the deconcatenation of I_path1(w') I_path2(w'').
Complex chen_compose(const std::vector<FormSpec>& forms, const Path& path1, const Path& path2,
                     const IteratedIntegrator& integrator);
double holonomy_invariance_check(const std::vector<FormSpec>& forms, const Path& path_a, const Path& path_b,
                                 const IteratedIntegrator& integrator);

}  // namespace elliptikit
