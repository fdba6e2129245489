#include "elliptikit/exact.hpp"

#include <cctype>
#include <sstream>

#include "elliptikit/error.hpp"

namespace elliptikit {

Rational rational_from_decimal(const std::string& text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError(0, "expected a decimal number in '" + text + "'");
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long exponent = 0;
    try {
      exponent = std::stol(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw ParseError(pos, "malformed exponent in '" + text + "'");
    }
    pos += used;
    scale -= exponent;
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters in '" + text + "'");
  mpz_class numerator(digits, 10);
  mpz_class ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational value = scale >= 0 ? Rational(numerator, ten_power) : Rational(numerator * ten_power);
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& q) { return q.get_d(); }

std::complex<double> GaussRational::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return im_.get_str() + "*i";
  }
  std::string im = im_.get_str();
  if (sgn(im_) > 0) im = "+" + im;
  return "(" + re_.get_str() + im + "*i)";
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

Scalar::Scalar(const GaussRational& v) {
  if (!v.is_zero()) terms_.emplace(Exponents{0, 0, 0}, v);
}

Scalar Scalar::monomial(Exponents e, GaussRational c) {
  Scalar s;
  s.add_term(e, c);
  return s;
}

Scalar Scalar::e2() { return monomial({1, 0, 0}, GaussRational(1)); }
Scalar Scalar::g2() { return monomial({0, 1, 0}, GaussRational(1)); }
Scalar Scalar::g3() { return monomial({0, 0, 1}, GaussRational(1)); }

bool Scalar::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0});
}

GaussRational Scalar::constant_term() const {
  auto it = terms_.find(Exponents{0, 0, 0});
  return it == terms_.end() ? GaussRational() : it->second;
}

std::complex<double> Scalar::evaluate(const CurveConstants& k) const {
  std::complex<double> total = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (int i = 0; i < e[0]; ++i) term *= k.e2;
    for (int i = 0; i < e[1]; ++i) term *= k.g2;
    for (int i = 0; i < e[2]; ++i) term *= k.g3;
    total += term;
  }
  return total;
}

std::string Scalar::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"e2", "g2", "g3"};
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string factor;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (!factor.empty()) factor += "*";
      factor += names[v];
      if (e[v] > 1) factor += "^" + std::to_string(e[v]);
    }
    std::string term;
    if (factor.empty()) {
      term = c.to_string();
    } else if (c == GaussRational(1)) {
      term = factor;
    } else if (c == GaussRational(-1)) {
      term = "-" + factor;
    } else {
      term = c.to_string() + "*" + factor;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

void Scalar::add_term(const Exponents& e, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  Scalar r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

Scalar& Scalar::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Scalar& Scalar::operator/=(const GaussRational& c) {
  for (auto& [e, v] : terms_) v /= c;
  return *this;
}

GradedSymbol::GradedSymbol(int degree) : degree_(degree), coeffs_(static_cast<std::size_t>(degree + 1)) {
  if (degree < 0) throw Error(ErrorCode::invalid_argument, "graded symbol degree must be >= 0");
}

bool GradedSymbol::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool GradedSymbol::in_admissible_subspace() const {
  return degree_ < 1 || coeff(degree_ - 1).is_zero();
}

GradedSymbol GradedSymbol::kronecker_formula(int n) {
  GradedSymbol out(n);
  if (n == 0) {
    out.set_coeff(0, Scalar(1));
    return out;
  }
  // (X - Y)^(n-1) expanded, then multiplied by (X + (n-1) Y).
  std::vector<Rational> base(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rational c = binomial(n - 1, i);
    if ((n - 1 - i) % 2 != 0) c = -c;
    base[static_cast<std::size_t>(i)] = c;  // X^i Y^(n-1-i)
  }
  std::vector<Rational> full(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    full[static_cast<std::size_t>(i + 1)] += base[static_cast<std::size_t>(i)];
    full[static_cast<std::size_t>(i)] += base[static_cast<std::size_t>(i)] * (n - 1);
  }
  Rational nf = factorial(n);
  for (int i = 0; i <= n; ++i) out.set_coeff(i, Scalar(Rational(full[static_cast<std::size_t>(i)] / nf)));
  return out;
}

GradedSymbol& GradedSymbol::operator+=(const GradedSymbol& o) {
  if (o.degree_ != degree_) throw Error(ErrorCode::invalid_argument, "graded symbols of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GradedSymbol& GradedSymbol::operator-=(const GradedSymbol& o) {
  if (o.degree_ != degree_) throw Error(ErrorCode::invalid_argument, "graded symbols of different degree");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GradedSymbol& GradedSymbol::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

GradedSymbol operator*(const GradedSymbol& a, const GradedSymbol& b) {
  GradedSymbol out(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; j <= b.degree_; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.add_to_coeff(i + j, a.coeff(i) * b.coeff(j));
    }
  }
  return out;
}

std::string GradedSymbol::to_string() const {
  std::string out;
  for (int i = degree_; i >= 0; --i) {
    const Scalar& c = coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (i > 0) out += "*X" + (i > 1 ? "^" + std::to_string(i) : std::string());
    int y = degree_ - i;
    if (y > 0) out += "*Y" + (y > 1 ? "^" + std::to_string(y) : std::string());
  }
  return out.empty() ? "0" : out;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(f);
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace elliptikit
