#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

namespace elliptikit {

using Rational = mpq_class;

Rational rational_from_decimal(const std::string& text);
double to_double(const Rational& q);

// Element of Q(i).
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  std::complex<double> to_complex() const;
  GaussRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::string to_string() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const GaussRational& c) { return c.is_zero(); }
inline bool is_zero(const std::complex<double>& c) { return c == std::complex<double>(0.0, 0.0); }

// Numeric values for the opaque curve constants appearing in Scalar.
struct CurveConstants {
  std::complex<double> e2;
  std::complex<double> g2;
  std::complex<double> g3;
};

// Polynomial in the opaque constants e2, g2, g3 with Q(i) coefficients.
class Scalar {
 public:
  using Exponents = std::array<int, 3>;  // powers of e2, g2, g3

  Scalar() = default;
  Scalar(long v) : Scalar(GaussRational(v)) {}  // NOLINT
  Scalar(const Rational& v) : Scalar(GaussRational(v)) {}  // NOLINT
  Scalar(const GaussRational& v);  // NOLINT

  static Scalar e2();
  static Scalar g2();
  static Scalar g3();
  static Scalar monomial(Exponents e, GaussRational c);

  const std::map<Exponents, GaussRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  GaussRational constant_term() const;
  std::complex<double> evaluate(const CurveConstants& k) const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator*=(const GaussRational& c);
  Scalar& operator/=(const GaussRational& c);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r *= b;
    return r;
  }
  friend Scalar operator/(Scalar a, const GaussRational& c) { return a /= c; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void add_term(const Exponents& e, const GaussRational& c);
  std::map<Exponents, GaussRational> terms_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Homogeneous polynomial sum_i c_i X^i Y^(degree - i).
class GradedSymbol {
 public:
  GradedSymbol() = default;
  explicit GradedSymbol(int degree);

  int degree() const { return degree_; }
  // Coefficient of X^i Y^(degree - i).
  const Scalar& coeff(int x_power) const { return coeffs_.at(static_cast<std::size_t>(x_power)); }
  void set_coeff(int x_power, Scalar c) { coeffs_.at(static_cast<std::size_t>(x_power)) = std::move(c); }
  void add_to_coeff(int x_power, const Scalar& c) { coeffs_.at(static_cast<std::size_t>(x_power)) += c; }
  bool is_zero() const;
  // True when the polynomial lies in C X^n + Y^2 C[X,Y]_(n-2), i.e. no X^(n-1) Y term.
  bool in_admissible_subspace() const;

  // (X - Y)^(n-1) (X + (n-1) Y) / n!, and 1 for n = 0.
  static GradedSymbol kronecker_formula(int n);

  GradedSymbol& operator+=(const GradedSymbol& o);
  GradedSymbol& operator-=(const GradedSymbol& o);
  GradedSymbol& operator*=(const Scalar& c);
  friend GradedSymbol operator*(const GradedSymbol& a, const GradedSymbol& b);
  friend bool operator==(const GradedSymbol& a, const GradedSymbol& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const GradedSymbol& a, const GradedSymbol& b) { return !(a == b); }
  std::string to_string() const;

 private:
  int degree_ = 0;
  std::vector<Scalar> coeffs_{Scalar{}};
};

Rational factorial(int n);
Rational binomial(int n, int k);

}  // namespace elliptikit
