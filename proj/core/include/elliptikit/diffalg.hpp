#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "elliptikit/exact.hpp"
#include "elliptikit/kronecker.hpp"
#include "elliptikit/path.hpp"

namespace elliptikit {

// Element of O[g_1] written as sum c * P^a Q^b X^j with b in {0, 1}, where P = wp, Q = wp', X = g_1.
// Coefficients are polynomials in the opaque constants e2, g2, g3.
class EllipticPoly {
 public:
  // Key {j, b, a}: powers of X, Q, P.
  using Key = std::array<int, 3>;

  EllipticPoly() = default;
  EllipticPoly(const Scalar& c);  // NOLINT(google-explicit-constructor)
  EllipticPoly(long c) : EllipticPoly(Scalar(c)) {}  // NOLINT

  static EllipticPoly P();
  static EllipticPoly Q();
  static EllipticPoly X();
  static EllipticPoly monomial(int a, int b, int j, const Scalar& c);

  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  // Largest 2a + 3b + j over the support; 0 for the zero polynomial.
  int filtration_degree() const;
  // Part of weight exactly w.
  EllipticPoly weight_part(int w) const;
  Complex evaluate(const CurveConstants& k, Complex p, Complex p_prime, Complex x) const;
  std::string to_string() const;

  EllipticPoly operator-() const;
  EllipticPoly& operator+=(const EllipticPoly& o);
  EllipticPoly& operator-=(const EllipticPoly& o);
  EllipticPoly& operator*=(const Scalar& c);

  friend EllipticPoly operator+(EllipticPoly a, const EllipticPoly& b) { return a += b; }
  friend EllipticPoly operator-(EllipticPoly a, const EllipticPoly& b) { return a -= b; }
  friend EllipticPoly operator*(EllipticPoly a, const Scalar& c) { return a *= c; }
  friend EllipticPoly operator*(const Scalar& c, EllipticPoly a) { return a *= c; }
  friend bool operator==(const EllipticPoly& a, const EllipticPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const EllipticPoly& a, const EllipticPoly& b) { return !(a == b); }

  // Adds c * P^a Q^b X^j, rewriting Q^2 = 4P^3 - g2 P - g3.
  void add_monomial(int a, int b, int j, const Scalar& c);

 private:
  void add_term(const Key& k, const Scalar& c);
  std::map<Key, Scalar> terms_;
};

EllipticPoly ep_multiply(const EllipticPoly& u, const EllipticPoly& v);
EllipticPoly ep_power(const EllipticPoly& u, int n);
// dP = Q, dQ = 6P^2 - g2/2, dX = -(P + e2).
EllipticPoly ep_derive(const EllipticPoly& u);

// e_r as a scalar: e2 is opaque, odd r give 0, e_{2k} for k >= 2 are polynomials in g2, g3.
Scalar eisenstein_scalar(int r);
// E_r for r >= 2, with E_2 = P + e2 and E_{r+2} = (-1)^r wp^(r) / (r+1)!; E_1 = X, E_0 = 1.
EllipticPoly eisenstein_poly(int r);
EllipticPoly g_as_elliptic_poly(int n);

int filtration_degree(const EllipticPoly& u);
// Top-weight part under P -> Y^2, Q -> -2 Y^3, X -> X.
GradedSymbol graded_symbol(const EllipticPoly& u);

CurveConstants curve_constants(const LatticeContext& ctx);
// Evaluates u at z using wp, wp' and g_1 of the lattice.
Complex evaluate(const EllipticPoly& u, const LatticeContext& ctx, Complex z);

struct ReductionResult {
  Scalar c;
  std::map<int, Scalar> lambdas;  // only nonzero entries
  EllipticPoly primitive;
};

// u = c + sum_n lambda_n g_n + d(primitive), exactly.
ReductionResult reduce_mod_derivative(const EllipticPoly& u);
// c + sum lambda_n g_n + d(primitive).
EllipticPoly reassemble(const ReductionResult& r);

// sum over s of T_s(component_s); keys index the representatives of a PunctureSet.
struct MultiPointElement {
  std::map<int, EllipticPoly> components;
};

struct MultiPointReduction {
  Scalar c;
  std::map<std::pair<int, int>, Scalar> lambdas;  // (puncture index, n)
  MultiPointElement primitive;
};

MultiPointReduction reduce_multipoint(const MultiPointElement& m);
// Value of sum_s component_s(z - s) with s taken from `punctures`.
Complex evaluate(const MultiPointElement& m, const PunctureSet& punctures, Complex z);
// c + sum lambda_{s,n} g_n(z - s) + sum_s d(primitive_s)(z - s), with g_n taken from the table.
Complex evaluate(const MultiPointReduction& r, const KroneckerTable& table, const PunctureSet& punctures, Complex z);

// Grammar: sums, differences, products (explicit or by juxtaposition), integer powers and parentheses
// over P, Q, X, e2, g2, g3, i and decimal numbers; division only by nonzero numeric constants.
EllipticPoly parse_elliptic_poly(const std::string& text);

}  // namespace elliptikit
