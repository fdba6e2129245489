#pragma once

#include <utility>
#include <vector>

#include "elliptikit/error.hpp"

namespace elliptikit {

struct LatticeOptions {
  // Hard cap on q-powers in Lambert sums; 0 derives it from |q| so that |q|^K < 1e-16.
  int series_truncation = 0;
  std::pair<int, int> oracle_truncation{2000, 2000};
  double tolerance = 1e-8;
  // Exclusion radius around lattice points; 0 means 1e-6 * min(1, |tau|).
  double eps_sing = 0.0;
  int r_max = 24;
};

struct LatticePoint {
  Complex z;
  Complex reduced;
  long m = 0;
  long n = 0;
};

// Lattice Z + Z tau with cached Eisenstein series e_r.
class LatticeContext {
 public:
  explicit LatticeContext(Complex tau, LatticeOptions options = {});

  Complex tau() const { return tau_; }
  Complex q() const { return q_; }
  int series_truncation() const { return series_truncation_; }
  std::pair<int, int> oracle_truncation() const { return options_.oracle_truncation; }
  double tolerance() const { return options_.tolerance; }
  double eps_sing() const { return eps_sing_; }
  int r_max() const { return options_.r_max; }
  const LatticeOptions& options() const { return options_; }

  // Representative in [0,1) + [0,1) tau.
  LatticePoint reduce(Complex z) const;
  // Representative in the cell centred at 0, |x|, |y| <= 1/2 in lattice coordinates.
  LatticePoint center(Complex z) const;
  Complex nearest_lattice_point(Complex z) const;
  double distance_to_lattice(Complex z) const;

  Complex eisenstein_series(int r) const;
  Complex eisenstein_function(int r, Complex z) const;
  // E_0 = 1, E_1(z), ..., E_rmax(z).
  std::vector<Complex> eisenstein_functions(int r_max, Complex z) const;
  // E_r(w) - w^-r for r = 0..r_max and |w| < 1/4; entry 0 is 0.
  std::vector<Complex> eisenstein_regular_parts(int r_max, Complex w) const;

  Complex weierstrass_p(Complex z) const;
  Complex weierstrass_p_prime(Complex z) const;
  Complex g2() const { return 60.0 * eisenstein_series(4); }
  Complex g3() const { return 140.0 * eisenstein_series(6); }

 private:
  // (-1)^j/j! times the n != 0 rows of sum_n d^j/dw^j pi cot(pi (w + n tau)), j = 0..jmax.
  std::vector<Complex> off_axis_rows(int jmax, Complex w) const;
  std::vector<Complex> compute_series(int r) const;
  void check_regular(Complex z, Complex zc, long m, long n) const;

  Complex tau_;
  Complex q_;
  LatticeOptions options_;
  int series_truncation_;
  double eps_sing_;
  std::vector<Complex> e_;  // e_[r], r = 0..r_max
};

// Brute-force symmetric double sums (n outer, m inner) for tests; O(N M) cost.
// Each truncated inner sum carries an Euler-Maclaurin tail correction.
Complex oracle_eisenstein_function(Complex tau, int r, Complex z, int N, int M);
Complex oracle_eisenstein_series(Complex tau, int r, int N, int M);

}  // namespace elliptikit
