#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "elliptikit/exact.hpp"
#include "elliptikit/lattice.hpp"

namespace elliptikit {

// Memoised evaluation of g_0..g_max_n from the generating series
//   sum_n g_n alpha^(n-1) = alpha^-1 exp(-sum_r (-alpha)^r/r (E_r - e_r)).
class KroneckerTable {
 public:
  // memo_rounding > 0 snaps keys to a grid of that spacing; 0 keys on the exact bit pattern.
  KroneckerTable(const LatticeContext& ctx, int max_n, double memo_rounding = 0.0,
                 std::size_t memo_capacity = 1 << 20);

  const LatticeContext& context() const { return *ctx_; }
  int max_n() const { return max_n_; }

  // Throws SingularityError for n = 1 within eps_sing of the lattice; g_n, n >= 2, is regular there.
  Complex g(int n, Complex z) const;
  // g_0(z), ..., g_max_n(z); entry 1 is NaN exactly on the lattice.
  std::vector<Complex> g_all(Complex z) const;
  std::size_t memo_size() const;
  void clear_memo() const;

 private:
  std::vector<Complex> compute(Complex z) const;
  std::vector<Complex> compute_centered(Complex zc) const;

  struct KeyHash {
    std::size_t operator()(const std::pair<double, double>& k) const noexcept;
  };

  const LatticeContext* ctx_;
  int max_n_;
  std::vector<Complex> e_;  // e_r up to max_n + taylor_terms

  double rounding_;
  std::size_t capacity_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::pair<double, double>, std::shared_ptr<const std::vector<Complex>>, KeyHash>
      memo_;
};

// Polynomial with rational coefficients in X (for g_1) and Ebar_r = E_r - e_r, r >= 2.
class FreeSymbolicG {
 public:
  // Exponent vector: index 0 is the power of X, index r - 1 the power of Ebar_r.
  using Monomial = std::vector<int>;

  FreeSymbolicG() = default;
  static FreeSymbolicG constant(const Rational& c);
  static FreeSymbolicG x();
  static FreeSymbolicG ebar(int r);

  int n() const { return n_; }
  void set_n(int n) { n_ = n; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  int max_weight() const;
  Complex evaluate(const LatticeContext& ctx, Complex z) const;
  // Weight-w homogeneous part with X -> X, Ebar_r -> Y^r.
  GradedSymbol symbol(int weight) const;
  std::string to_string() const;

  FreeSymbolicG& operator+=(const FreeSymbolicG& o);
  FreeSymbolicG& operator*=(const Rational& c);
  friend FreeSymbolicG operator*(const FreeSymbolicG& a, const FreeSymbolicG& b);
  friend bool operator==(const FreeSymbolicG& a, const FreeSymbolicG& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(Monomial m, const Rational& c);
  int n_ = 0;
  std::map<Monomial, Rational> terms_;
};

FreeSymbolicG g_symbolic(int n);
GradedSymbol graded_symbol_of_g(int n);

}  // namespace elliptikit
