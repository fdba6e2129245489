#include <cctype>

#include "elliptikit/diffalg.hpp"
#include "elliptikit/error.hpp"

namespace elliptikit {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  EllipticPoly parse() {
    EllipticPoly u = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return u;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'P' || c == 'Q' ||
           c == 'X' || c == 'e' || c == 'g' || c == 'i';
  }

  EllipticPoly expression() {
    EllipticPoly u = term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        u += term();
      } else if (c == '-') {
        ++pos_;
        u -= term();
      } else {
        return u;
      }
    }
  }

  EllipticPoly term() {
    EllipticPoly u = unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        u = ep_multiply(u, unary());
      } else if (c == '/') {
        ++pos_;
        std::size_t at = pos_;
        EllipticPoly d = unary();
        if (!d.is_constant() || !d.constant_term().is_constant() || d.is_zero()) {
          throw ParseError(at, "division is only allowed by a nonzero numeric constant");
        }
        u *= Scalar(GaussRational(1) / d.constant_term().constant_term());
      } else if (starts_factor()) {
        u = ep_multiply(u, power());
      } else {
        return u;
      }
    }
  }

  EllipticPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  EllipticPoly power() {
    EllipticPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer exponent");
    int exponent = std::stoi(text_.substr(start, pos_ - start));
    return ep_power(base, exponent);
  }

  EllipticPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      EllipticPoly u = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return u;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
        ++pos_;
      }
      try {
        return EllipticPoly(Scalar(rational_from_decimal(text_.substr(start, pos_ - start))));
      } catch (const ParseError& e) {
        throw ParseError(start, e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "P") return EllipticPoly::P();
      if (name == "Q") return EllipticPoly::Q();
      if (name == "X") return EllipticPoly::X();
      if (name == "e2") return EllipticPoly(Scalar::e2());
      if (name == "g2") return EllipticPoly(Scalar::g2());
      if (name == "g3") return EllipticPoly(Scalar::g3());
      if (name == "i") return EllipticPoly(Scalar(GaussRational(0, 1)));
      throw ParseError(start, "unknown symbol '" + name + "'");
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

EllipticPoly parse_elliptic_poly(const std::string& text) { return Parser(text).parse(); }

}  // namespace elliptikit
