#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elliptikit/error.hpp"
#include "elliptikit/exact.hpp"

namespace elliptikit {

// Symbol (n;a) of the alphabet V; a is a canonical puncture representative.
struct Letter {
  int n = 0;
  Complex a = 0.0;

  bool is_log() const { return n == 1 && a == Complex(0.0, 0.0); }
  std::string to_string() const;

  friend bool operator==(const Letter& x, const Letter& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator!=(const Letter& x, const Letter& y) { return !(x == y); }
  friend bool operator<(const Letter& x, const Letter& y) {
    if (x.n != y.n) return x.n < y.n;
    if (x.a.real() != y.a.real()) return x.a.real() < y.a.real();
    return x.a.imag() < y.a.imag();
  }
};

using Word = std::vector<Letter>;

std::string to_string(const Word& w);

template <class L>
std::vector<std::pair<std::vector<L>, std::vector<L>>> deconcatenate(const std::vector<L>& w) {
  std::vector<std::pair<std::vector<L>, std::vector<L>>> out;
  out.reserve(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k) {
    out.emplace_back(std::vector<L>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                     std::vector<L>(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
  }
  return out;
}

// All shuffles of u and v with multiplicities.
template <class L>
std::map<std::vector<L>, long> shuffle_words(const std::vector<L>& u, const std::vector<L>& v) {
  std::map<std::vector<L>, long> out;
  if (u.empty()) {
    out.emplace(v, 1);
    return out;
  }
  if (v.empty()) {
    out.emplace(u, 1);
    return out;
  }
  std::vector<L> u_head(u.begin(), u.end() - 1);
  std::vector<L> v_head(v.begin(), v.end() - 1);
  for (const auto& [head, c] : shuffle_words(u_head, v)) {
    std::vector<L> w = head;
    w.push_back(u.back());
    out[w] += c;
  }
  for (const auto& [head, c] : shuffle_words(u, v_head)) {
    std::vector<L> w = head;
    w.push_back(v.back());
    out[w] += c;
  }
  return out;
}

// Finite linear combination of words; zero coefficients are never stored.
template <class C, class L = Letter>
class ShuffleElement {
 public:
  using WordType = std::vector<L>;

  ShuffleElement() = default;
  explicit ShuffleElement(const WordType& w, C c = C(1)) { add(w, c); }
  static ShuffleElement unit() { return ShuffleElement(WordType{}); }

  const std::map<WordType, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  C coefficient(const WordType& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C() : it->second;
  }

  void add(const WordType& w, const C& c) {
    if (elliptikit::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (elliptikit::is_zero(it->second)) terms_.erase(it);
    }
  }

  ShuffleElement& operator+=(const ShuffleElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  ShuffleElement& operator-=(const ShuffleElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  ShuffleElement& operator*=(const C& s) {
    if (elliptikit::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend ShuffleElement operator+(ShuffleElement a, const ShuffleElement& b) { return a += b; }
  friend ShuffleElement operator-(ShuffleElement a, const ShuffleElement& b) { return a -= b; }
  friend ShuffleElement operator*(ShuffleElement a, const C& s) { return a *= s; }
  friend bool operator==(const ShuffleElement& a, const ShuffleElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const ShuffleElement& a, const ShuffleElement& b) { return !(a == b); }

 private:
  std::map<WordType, C> terms_;
};

template <class C, class L>
ShuffleElement<C, L> shuffle_product(const ShuffleElement<C, L>& u, const ShuffleElement<C, L>& v) {
  ShuffleElement<C, L> out;
  for (const auto& [wu, cu] : u.terms()) {
    for (const auto& [wv, cv] : v.terms()) {
      C cuv = cu * cv;
      for (const auto& [w, mult] : shuffle_words(wu, wv)) out.add(w, cuv * C(mult));
    }
  }
  return out;
}

// [w_1|...|w_k] -> (-1)^k [w_k|...|w_1].
template <class C, class L>
ShuffleElement<C, L> antipode(const ShuffleElement<C, L>& e) {
  ShuffleElement<C, L> out;
  for (const auto& [w, c] : e.terms()) {
    std::vector<L> r(w.rbegin(), w.rend());
    out.add(r, w.size() % 2 == 0 ? c : C(-c));
  }
  return out;
}

// Deconcatenation coproduct as a map on pairs of words.
template <class C, class L>
std::map<std::pair<std::vector<L>, std::vector<L>>, C> coproduct(const ShuffleElement<C, L>& e) {
  std::map<std::pair<std::vector<L>, std::vector<L>>, C> out;
  for (const auto& [w, c] : e.terms()) {
    for (auto& split : deconcatenate(w)) {
      auto [it, inserted] = out.emplace(std::move(split), c);
      if (!inserted) it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = elliptikit::is_zero(it->second) ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class C, class L>
C counit(const ShuffleElement<C, L>& e) {
  return e.coefficient({});
}

// Number of leading (1;0) letters.
inline std::size_t leading_log_run(const Word& w) {
  std::size_t r = 0;
  while (r < w.size() && w[r].is_log()) ++r;
  return r;
}

template <class C>
bool is_regular(const ShuffleElement<C, Letter>& e) {
  for (const auto& [w, c] : e.terms()) {
    if (!w.empty() && w.front().is_log()) return false;
  }
  return true;
}

// Max leading-(1;0) run over the terms; nullopt encodes degree -infinity of 0.
template <class C>
std::optional<int> degree(const ShuffleElement<C, Letter>& e) {
  if (e.is_zero()) return std::nullopt;
  int best = 0;
  for (const auto& [w, c] : e.terms()) best = std::max(best, static_cast<int>(leading_log_run(w)));
  return best;
}

// sum_k c_k X^k with every c_k in Sh*(V).
template <class C>
using StarPolynomial = std::vector<ShuffleElement<C, Letter>>;

namespace detail {

template <class C>
void accumulate(StarPolynomial<C>& acc, const StarPolynomial<C>& p, const C& scale, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += p[k] * scale;
}

template <class C>
const StarPolynomial<C>& decompose_word(const Word& w, std::map<Word, StarPolynomial<C>>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  StarPolynomial<C> out;
  std::size_t r = leading_log_run(w);
  if (r == 0) {
    out.emplace_back(w);
  } else {
    // x ⧢ w' = r [x^r | rest] + (insertions of x after the leading run of w').
    Word tail(w.begin() + 1, w.end());
    C inv_r = C(1) / C(static_cast<long>(r));
    StarPolynomial<C> tail_poly = decompose_word<C>(tail, memo);
    detail::accumulate(out, tail_poly, inv_r, 1);
    for (std::size_t pos = r; pos <= tail.size(); ++pos) {
      Word inserted = tail;
      inserted.insert(inserted.begin() + static_cast<std::ptrdiff_t>(pos), w.front());
      StarPolynomial<C> lower = decompose_word<C>(inserted, memo);
      detail::accumulate(out, lower, C(-inv_r), 0);
    }
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return memo.emplace(w, std::move(out)).first->second;
}

}  // namespace detail

// Preimage of e under Sh*(V)[X] -> Sh(V), X -> [(1;0)].
template <class C>
StarPolynomial<C> star_decompose(const ShuffleElement<C, Letter>& e) {
  std::map<Word, StarPolynomial<C>> memo;
  StarPolynomial<C> out;
  for (const auto& [w, c] : e.terms()) detail::accumulate(out, detail::decompose_word<C>(w, memo), c, 0);
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

// sum_k c_k ⧢ [(1;0)]^⧢k.
template <class C>
ShuffleElement<C, Letter> reconstruct(const StarPolynomial<C>& p) {
  ShuffleElement<C, Letter> out;
  ShuffleElement<C, Letter> x_power = ShuffleElement<C, Letter>::unit();
  const ShuffleElement<C, Letter> x(Word{Letter{1, 0.0}});
  for (std::size_t k = 0; k < p.size(); ++k) {
    out += shuffle_product(p[k], x_power);
    x_power = shuffle_product(x_power, x);
  }
  return out;
}

inline ShuffleElement<Complex, Letter> to_complex(const ShuffleElement<GaussRational, Letter>& e) {
  ShuffleElement<Complex, Letter> out;
  for (const auto& [w, c] : e.terms()) out.add(w, c.to_complex());
  return out;
}

std::string to_string(const ShuffleElement<GaussRational, Letter>& e);
// c_0 + c_1 X + ...
std::string to_string(const StarPolynomial<GaussRational>& p);

// Word literal "G[n1,a1; n2,a2; ...]"; a_k is "0", a label, or a complex literal.
Word parse_word(const std::string& text, const std::map<std::string, Complex>& labels = {});

}  // namespace elliptikit
