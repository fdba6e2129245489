#include "elliptikit/kronecker.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <mutex>
#include <numbers>

namespace elliptikit {

namespace {

constexpr int taylor_terms = 48;
constexpr double taylor_radius = 0.02;
constexpr double regular_radius = 0.25;

// h = exp(sum_r a_r alpha^r) truncated at alpha^order.
std::vector<Complex> exp_series(const std::vector<Complex>& a, int order) {
  std::vector<Complex> h(static_cast<std::size_t>(order + 1), 0.0);
  h[0] = 1.0;
  for (int m = 1; m <= order; ++m) {
    Complex acc = 0.0;
    for (int k = 1; k <= m; ++k) {
      acc += static_cast<double>(k) * a[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(m - k)];
    }
    h[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
  }
  return h;
}

double sign_pow(int r) { return (r % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

KroneckerTable::KroneckerTable(const LatticeContext& ctx, int max_n, double memo_rounding,
                               std::size_t memo_capacity)
    : ctx_(&ctx), max_n_(max_n), rounding_(memo_rounding), capacity_(memo_capacity) {
  if (max_n < 0) throw Error(ErrorCode::invalid_argument, "max_n must be >= 0");
  if (memo_rounding < 0.0) throw Error(ErrorCode::invalid_argument, "memo rounding must be >= 0");
  int top = max_n_ + taylor_terms + 1;
  e_.assign(static_cast<std::size_t>(top + 1), 0.0);
  for (int r = 2; r <= top; r += 2) e_[static_cast<std::size_t>(r)] = ctx.eisenstein_series(r);
}

std::size_t KroneckerTable::KeyHash::operator()(const std::pair<double, double>& k) const noexcept {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::memcpy(&a, &k.first, sizeof a);
  std::memcpy(&b, &k.second, sizeof b);
  return static_cast<std::size_t>(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL + (a << 6) + (a >> 2)));
}

Complex KroneckerTable::g(int n, Complex z) const {
  if (n < 0 || n > max_n_) throw Error(ErrorCode::invalid_argument, "g_n index outside table range");
  if (n == 0) return 1.0;
  if (n == 1) {
    Complex nearest = ctx_->nearest_lattice_point(z);
    if (std::abs(z - nearest) < ctx_->eps_sing()) throw SingularityError(z, nearest, "g_1");
  }
  return g_all(z)[static_cast<std::size_t>(n)];
}

std::vector<Complex> KroneckerTable::g_all(Complex z) const {
  if (rounding_ > 0.0) {
    z = Complex(std::round(z.real() / rounding_) * rounding_, std::round(z.imag() / rounding_) * rounding_);
  }
  std::pair<double, double> key{z.real(), z.imag()};
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto values = std::make_shared<const std::vector<Complex>>(compute(z));
  {
    std::unique_lock lock(mutex_);
    if (memo_.size() >= capacity_) memo_.clear();
    memo_.emplace(key, values);
  }
  return *values;
}

std::size_t KroneckerTable::memo_size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void KroneckerTable::clear_memo() const {
  std::unique_lock lock(mutex_);
  memo_.clear();
}

std::vector<Complex> KroneckerTable::compute(Complex z) const {
  LatticePoint c = ctx_->center(z);
  std::vector<Complex> base = compute_centered(c.reduced);
  if (c.n == 0) return base;
  // F(z - n tau, alpha) = exp(2 pi i n alpha) F(z, alpha), so g(z) = g(zc) * exp(-2 pi i n alpha).
  Complex step(0.0, -2.0 * std::numbers::pi * static_cast<double>(c.n));
  std::vector<Complex> factor(static_cast<std::size_t>(max_n_ + 1));
  factor[0] = 1.0;
  for (int k = 1; k <= max_n_; ++k) factor[static_cast<std::size_t>(k)] = factor[static_cast<std::size_t>(k - 1)] * step / static_cast<double>(k);
  std::vector<Complex> out(static_cast<std::size_t>(max_n_ + 1), 0.0);
  for (int n = 0; n <= max_n_; ++n) {
    for (int k = 0; k <= n; ++k) {
      out[static_cast<std::size_t>(n)] += base[static_cast<std::size_t>(k)] * factor[static_cast<std::size_t>(n - k)];
    }
  }
  return out;
}

std::vector<Complex> KroneckerTable::compute_centered(Complex zc) const {
  const int N = max_n_;
  std::vector<Complex> g(static_cast<std::size_t>(N + 1), 0.0);
  g[0] = 1.0;
  if (N == 0) return g;
  double r = std::abs(zc);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  if (r >= regular_radius) {
    std::vector<Complex> E = ctx_->eisenstein_functions(N, zc);
    std::vector<Complex> a(static_cast<std::size_t>(N + 1), 0.0);
    for (int k = 1; k <= N; ++k) {
      auto i = static_cast<std::size_t>(k);
      Complex ek = k <= static_cast<int>(e_.size()) - 1 ? e_[i] : ctx_->eisenstein_series(k);
      a[i] = -sign_pow(k) / k * (E[i] - ek);
    }
    std::vector<Complex> h = exp_series(a, N);
    for (int k = 1; k <= N; ++k) g[static_cast<std::size_t>(k)] = h[static_cast<std::size_t>(k)];
    return g;
  }

  // F = (1/alpha + 1/z) exp(S_reg(alpha)), so g_n = h_n + h_(n-1)/z with h = exp(S_reg).
  // a_r = z * at_r carries an explicit factor z, which lets h_(n-1)/z be formed without cancellation.
  std::vector<Complex> at(static_cast<std::size_t>(N + 1), 0.0);
  if (r < taylor_radius) {
    // E_r(z) - z^-r - e_r = sum_(k>=1) (-1)^k C(r+k-1, k) e_(r+k) z^k.
    for (int k = 1; k <= N; ++k) {
      Complex acc = 0.0;
      Complex zp = 1.0;
      double binom = static_cast<double>(k);  // C(k, 1)
      for (int j = 1; j <= taylor_terms; ++j) {
        Complex term = sign_pow(j) * binom * e_[static_cast<std::size_t>(k + j)] * zp;
        acc += term;
        zp *= zc;
        binom *= static_cast<double>(k + j) / static_cast<double>(j + 1);
      }
      at[static_cast<std::size_t>(k)] = -sign_pow(k) / k * acc;
    }
  } else {
    std::vector<Complex> R = ctx_->eisenstein_regular_parts(N, zc);
    for (int k = 1; k <= N; ++k) {
      auto i = static_cast<std::size_t>(k);
      at[i] = -sign_pow(k) / k * (R[i] - e_[i]) / zc;
    }
  }
  // h_m = z * ht_m for m >= 1, with m ht_m = sum_k k at_k h_(m-k).
  std::vector<Complex> h(static_cast<std::size_t>(N + 1), 0.0);
  std::vector<Complex> ht(static_cast<std::size_t>(N + 1), 0.0);
  h[0] = 1.0;
  for (int m = 1; m <= N; ++m) {
    Complex acc = 0.0;
    for (int k = 1; k <= m; ++k) {
      acc += static_cast<double>(k) * at[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(m - k)];
    }
    ht[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
    h[static_cast<std::size_t>(m)] = zc * ht[static_cast<std::size_t>(m)];
  }
  if (r == 0.0) {
    g[1] = Complex(nan, nan);
  } else {
    g[1] = h[1] + 1.0 / zc;
  }
  for (int n = 2; n <= N; ++n) g[static_cast<std::size_t>(n)] = h[static_cast<std::size_t>(n)] + ht[static_cast<std::size_t>(n - 1)];
  return g;
}

namespace {

FreeSymbolicG::Monomial trimmed(FreeSymbolicG::Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

}  // namespace

FreeSymbolicG FreeSymbolicG::constant(const Rational& c) {
  FreeSymbolicG f;
  f.add_term({}, c);
  return f;
}

FreeSymbolicG FreeSymbolicG::x() {
  FreeSymbolicG f;
  f.add_term({1}, Rational(1));
  return f;
}

FreeSymbolicG FreeSymbolicG::ebar(int r) {
  if (r < 2) throw Error(ErrorCode::invalid_argument, "Ebar_r needs r >= 2");
  Monomial m(static_cast<std::size_t>(r), 0);
  m[static_cast<std::size_t>(r - 1)] = 1;
  FreeSymbolicG f;
  f.add_term(m, Rational(1));
  return f;
}

void FreeSymbolicG::add_term(Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  m = trimmed(std::move(m));
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int FreeSymbolicG::max_weight() const {
  int best = 0;
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
    best = std::max(best, w);
  }
  return best;
}

Complex FreeSymbolicG::evaluate(const LatticeContext& ctx, Complex z) const {
  std::size_t width = 0;
  for (const auto& [m, c] : terms_) width = std::max(width, m.size());
  std::vector<Complex> vars(width, 0.0);
  if (width > 0) {
    std::vector<Complex> E = ctx.eisenstein_functions(static_cast<int>(width), z);
    vars[0] = E[1];
    for (std::size_t r = 2; r <= width; ++r) vars[r - 1] = E[r] - ctx.eisenstein_series(static_cast<int>(r));
  }
  Complex total = 0.0;
  for (const auto& [m, c] : terms_) {
    Complex term = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int p = 0; p < m[i]; ++p) term *= vars[i];
    }
    total += term;
  }
  return total;
}

GradedSymbol FreeSymbolicG::symbol(int weight) const {
  GradedSymbol s(weight);
  for (const auto& [m, c] : terms_) {
    int w = 0;
    for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
    if (w != weight) continue;
    int x_power = m.empty() ? 0 : m[0];
    s.add_to_coeff(x_power, Scalar(c));
  }
  return s;
}

std::string FreeSymbolicG::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += i == 0 ? "*X" : "*Ebar" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

FreeSymbolicG& FreeSymbolicG::operator+=(const FreeSymbolicG& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FreeSymbolicG& FreeSymbolicG::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FreeSymbolicG operator*(const FreeSymbolicG& a, const FreeSymbolicG& b) {
  FreeSymbolicG out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      FreeSymbolicG::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

FreeSymbolicG g_symbolic(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "g_symbolic needs n >= 0");
  // a_1 = X, a_r = -(-1)^r/r Ebar_r; g_n is the alpha^n coefficient of exp(sum a_r alpha^r).
  std::vector<FreeSymbolicG> a(static_cast<std::size_t>(n + 1));
  if (n >= 1) a[1] = FreeSymbolicG::x();
  for (int r = 2; r <= n; ++r) {
    a[static_cast<std::size_t>(r)] = FreeSymbolicG::ebar(r);
    a[static_cast<std::size_t>(r)] *= Rational(r % 2 == 0 ? -1 : 1, r);
  }
  std::vector<FreeSymbolicG> h(static_cast<std::size_t>(n + 1));
  h[0] = FreeSymbolicG::constant(Rational(1));
  for (int m = 1; m <= n; ++m) {
    FreeSymbolicG acc;
    for (int k = 1; k <= m; ++k) {
      FreeSymbolicG term = a[static_cast<std::size_t>(k)] * h[static_cast<std::size_t>(m - k)];
      term *= Rational(k, m);
      acc += term;
    }
    h[static_cast<std::size_t>(m)] = std::move(acc);
  }
  FreeSymbolicG out = h[static_cast<std::size_t>(n)];
  out.set_n(n);
  return out;
}

GradedSymbol graded_symbol_of_g(int n) { return g_symbolic(n).symbol(n); }

}  // namespace elliptikit
