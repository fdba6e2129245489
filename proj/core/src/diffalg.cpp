#include "elliptikit/diffalg.hpp"

#include <mutex>

#include "elliptikit/error.hpp"

namespace elliptikit {

namespace {

int weight(const EllipticPoly::Key& k) { return 2 * k[2] + 3 * k[1] + k[0]; }

std::string power_string(const char* name, int p) {
  if (p == 0) return {};
  return p == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(p);
}

// Coefficients of the weight-w part under P -> Y^2, Q -> -2 Y^3; index = power of X.
GradedSymbol symbol_at(const EllipticPoly& u, int w) {
  GradedSymbol s(w);
  for (const auto& [k, c] : u.terms()) {
    if (weight(k) != w) continue;
    s.add_to_coeff(k[0], k[1] == 1 ? c * Scalar(-2) : c);
  }
  return s;
}

// Solves M x = rhs over Q(i) with scalar right-hand sides.
std::vector<Scalar> solve_exact(std::vector<std::vector<GaussRational>> m, std::vector<Scalar> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) {
      throw Error(ErrorCode::internal_consistency, "graded derivative system is singular");
    }
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    GaussRational inv = GaussRational(1) / m[col][col];
    for (std::size_t c = col; c < n; ++c) m[col][c] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      GaussRational f = m[r][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= rhs[col] * Scalar(f);
    }
  }
  return rhs;
}

struct LiftTable {
  std::vector<EllipticPoly> lifts;
  std::vector<EllipticPoly> derivatives;
  std::vector<std::vector<GaussRational>> matrix;
};

// Lifts of the basis X^k, Y^a X^(k-a) (2 <= a <= k) of gr_k and the symbols of their derivatives.
const LiftTable& lift_table(int k) {
  static std::mutex mutex;
  static std::map<int, LiftTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  LiftTable t;
  t.lifts.push_back(EllipticPoly::monomial(0, 0, k, Scalar(1)));
  for (int a = 2; a <= k; ++a) t.lifts.push_back(ep_multiply(eisenstein_poly(a), EllipticPoly::monomial(0, 0, k - a, 1)));
  t.matrix.assign(static_cast<std::size_t>(k), std::vector<GaussRational>(static_cast<std::size_t>(k)));
  for (std::size_t col = 0; col < t.lifts.size(); ++col) {
    EllipticPoly d = ep_derive(t.lifts[col]);
    GradedSymbol s = symbol_at(d, k + 1);
    if (!s.coeff(k + 1).is_zero() || !s.coeff(k).is_zero()) {
      throw Error(ErrorCode::internal_consistency, "derivative symbol left Y^2 C[X,Y]");
    }
    for (int i = 0; i < k; ++i) {
      const Scalar& c = s.coeff(i);
      if (!c.is_constant()) throw Error(ErrorCode::internal_consistency, "graded derivative is not rational");
      t.matrix[static_cast<std::size_t>(i)][col] = c.constant_term();
    }
    t.derivatives.push_back(std::move(d));
  }
  return cache.emplace(k, std::move(t)).first->second;
}

const EllipticPoly& cached_g(int n) {
  static std::mutex mutex;
  static std::map<int, EllipticPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, g_as_elliptic_poly(n)).first;
  return it->second;
}

}  // namespace

EllipticPoly::EllipticPoly(const Scalar& c) { add_term({0, 0, 0}, c); }

EllipticPoly EllipticPoly::P() { return monomial(1, 0, 0, 1); }
EllipticPoly EllipticPoly::Q() { return monomial(0, 1, 0, 1); }
EllipticPoly EllipticPoly::X() { return monomial(0, 0, 1, 1); }

EllipticPoly EllipticPoly::monomial(int a, int b, int j, const Scalar& c) {
  EllipticPoly u;
  u.add_monomial(a, b, j, c);
  return u;
}

bool EllipticPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0, 0});
}

Scalar EllipticPoly::constant_term() const {
  auto it = terms_.find(Key{0, 0, 0});
  return it == terms_.end() ? Scalar() : it->second;
}

int EllipticPoly::filtration_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, weight(k));
  return d;
}

EllipticPoly EllipticPoly::weight_part(int w) const {
  EllipticPoly out;
  for (const auto& [k, c] : terms_) {
    if (weight(k) == w) out.terms_.emplace(k, c);
  }
  return out;
}

Complex EllipticPoly::evaluate(const CurveConstants& k, Complex p, Complex p_prime, Complex x) const {
  Complex total = 0.0;
  for (const auto& [key, c] : terms_) {
    total += c.evaluate(k) * std::pow(x, key[0]) * std::pow(p_prime, key[1]) * std::pow(p, key[2]);
  }
  return total;
}

std::string EllipticPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (std::string part : {power_string("P", k[2]), power_string("Q", k[1]), power_string("X", k[0])}) {
      if (part.empty()) continue;
      if (!mono.empty()) mono += "*";
      mono += part;
    }
    std::string coeff = c.to_string();
    bool compound = c.terms().size() > 1;
    std::string term;
    if (mono.empty()) {
      term = compound ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      term = mono;
    } else if (coeff == "-1") {
      term = "-" + mono;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
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

EllipticPoly EllipticPoly::operator-() const {
  EllipticPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

EllipticPoly& EllipticPoly::operator+=(const EllipticPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

EllipticPoly& EllipticPoly::operator-=(const EllipticPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

EllipticPoly& EllipticPoly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

void EllipticPoly::add_monomial(int a, int b, int j, const Scalar& c) {
  if (a < 0 || b < 0 || j < 0) throw Error(ErrorCode::invalid_argument, "negative exponent in elliptic polynomial");
  if (c.is_zero()) return;
  if (b < 2) {
    add_term({j, b, a}, c);
    return;
  }
  add_monomial(a + 3, b - 2, j, c * Scalar(4));
  add_monomial(a + 1, b - 2, j, -(c * Scalar::g2()));
  add_monomial(a, b - 2, j, -(c * Scalar::g3()));
}

void EllipticPoly::add_term(const Key& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EllipticPoly ep_multiply(const EllipticPoly& u, const EllipticPoly& v) {
  EllipticPoly out;
  for (const auto& [ku, cu] : u.terms()) {
    for (const auto& [kv, cv] : v.terms()) {
      out.add_monomial(ku[2] + kv[2], ku[1] + kv[1], ku[0] + kv[0], cu * cv);
    }
  }
  return out;
}

EllipticPoly ep_power(const EllipticPoly& u, int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "negative power of an elliptic polynomial");
  EllipticPoly out(1);
  EllipticPoly base = u;
  while (n > 0) {
    if (n & 1) out = ep_multiply(out, base);
    n >>= 1;
    if (n > 0) base = ep_multiply(base, base);
  }
  return out;
}

EllipticPoly ep_derive(const EllipticPoly& u) {
  EllipticPoly out;
  const Scalar half_g2 = Scalar::g2() / GaussRational(2);
  for (const auto& [k, c] : u.terms()) {
    const int j = k[0], b = k[1], a = k[2];
    if (a > 0) out.add_monomial(a - 1, b + 1, j, c * Scalar(a));
    if (b == 1) {
      out.add_monomial(a + 2, 0, j, c * Scalar(6));
      out.add_monomial(a, 0, j, -(c * half_g2));
    }
    if (j > 0) {
      out.add_monomial(a + 1, b, j - 1, c * Scalar(-j));
      out.add_monomial(a, b, j - 1, c * Scalar(-j) * Scalar::e2());
    }
  }
  return out;
}

Scalar eisenstein_scalar(int r) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "negative Eisenstein index");
  if (r == 0) return Scalar(1);
  if (r % 2 != 0) return Scalar();
  if (r == 2) return Scalar::e2();
  // wp = z^-2 + sum_n c_n z^(2n) with c_n = (2n+1) e_(2n+2).
  const int target = r / 2 - 1;
  std::vector<Scalar> c(static_cast<std::size_t>(target + 1));
  for (int n = 1; n <= target; ++n) {
    if (n == 1) {
      c[1] = Scalar::g2() / GaussRational(20);
    } else if (n == 2) {
      c[2] = Scalar::g3() / GaussRational(28);
    } else {
      Scalar sum;
      for (int m = 1; m <= n - 2; ++m) sum += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(n - 1 - m)];
      c[static_cast<std::size_t>(n)] = sum * Scalar(Rational(3, (2 * n + 3) * (n - 2)));
    }
  }
  return c[static_cast<std::size_t>(target)] / GaussRational(2 * target + 1);
}

EllipticPoly eisenstein_poly(int r) {
  if (r < 0) throw Error(ErrorCode::invalid_argument, "negative Eisenstein index");
  if (r == 0) return EllipticPoly(1);
  if (r == 1) return EllipticPoly::X();
  if (r == 2) return EllipticPoly::P() + EllipticPoly(Scalar::e2());
  EllipticPoly d = EllipticPoly::P();
  for (int k = 0; k < r - 2; ++k) d = ep_derive(d);
  Rational f = Rational(1) / factorial(r - 1);
  if (r % 2 != 0) f = -f;
  return d * Scalar(f);
}

EllipticPoly g_as_elliptic_poly(int n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "g_n needs n >= 0");
  FreeSymbolicG g = g_symbolic(n);
  std::map<std::pair<int, int>, EllipticPoly> powers;
  auto ebar_power = [&](int r, int p) -> const EllipticPoly& {
    auto key = std::make_pair(r, p);
    auto it = powers.find(key);
    if (it == powers.end()) {
      EllipticPoly base = eisenstein_poly(r) - EllipticPoly(eisenstein_scalar(r));
      it = powers.emplace(key, ep_power(base, p)).first;
    }
    return it->second;
  };
  EllipticPoly out;
  for (const auto& [mono, coeff] : g.terms()) {
    EllipticPoly term = EllipticPoly::monomial(0, 0, mono.empty() ? 0 : mono[0], Scalar(coeff));
    for (std::size_t idx = 1; idx < mono.size(); ++idx) {
      if (mono[idx] == 0) continue;
      term = ep_multiply(term, ebar_power(static_cast<int>(idx) + 1, mono[idx]));
    }
    out += term;
  }
  return out;
}

int filtration_degree(const EllipticPoly& u) { return u.filtration_degree(); }

GradedSymbol graded_symbol(const EllipticPoly& u) { return symbol_at(u, u.filtration_degree()); }

CurveConstants curve_constants(const LatticeContext& ctx) {
  return {ctx.eisenstein_series(2), ctx.g2(), ctx.g3()};
}

Complex evaluate(const EllipticPoly& u, const LatticeContext& ctx, Complex z) {
  if (u.is_constant()) return u.constant_term().evaluate(curve_constants(ctx));
  std::vector<Complex> E = ctx.eisenstein_functions(3, z);
  Complex e2 = ctx.eisenstein_series(2);
  return u.evaluate(curve_constants(ctx), E[2] - e2, -2.0 * E[3], E[1]);
}

ReductionResult reduce_mod_derivative(const EllipticPoly& u) {
  ReductionResult result;
  EllipticPoly rest = u;
  while (true) {
    const int D = rest.filtration_degree();
    if (D == 0) {
      result.c = rest.constant_term();
      break;
    }
    GradedSymbol sym = graded_symbol(rest);
    Scalar mu = sym.coeff(D) * Scalar(factorial(D));
    if (!mu.is_zero()) {
      result.lambdas[D] += mu;
      if (result.lambdas[D].is_zero()) result.lambdas.erase(D);
      rest -= cached_g(D) * mu;
      GradedSymbol gs = GradedSymbol::kronecker_formula(D);
      gs *= mu;
      sym -= gs;
    }
    if (D >= 2 && !sym.is_zero()) {
      const int k = D - 1;
      const LiftTable& t = lift_table(k);
      std::vector<Scalar> rhs;
      for (int i = 0; i < k; ++i) rhs.push_back(sym.coeff(i));
      std::vector<Scalar> sigma = solve_exact(t.matrix, std::move(rhs));
      for (std::size_t col = 0; col < sigma.size(); ++col) {
        if (sigma[col].is_zero()) continue;
        result.primitive += t.lifts[col] * sigma[col];
        rest -= t.derivatives[col] * sigma[col];
      }
    }
    if (rest.filtration_degree() >= D && !rest.is_zero()) {
      throw Error(ErrorCode::internal_consistency, "reduction failed to lower the filtration degree");
    }
  }
  // Primitives are normalised to vanishing constant term.
  Scalar constant = result.primitive.constant_term();
  if (!constant.is_zero()) result.primitive.add_monomial(0, 0, 0, -constant);
  return result;
}

EllipticPoly reassemble(const ReductionResult& r) {
  EllipticPoly out(r.c);
  for (const auto& [n, l] : r.lambdas) out += cached_g(n) * l;
  out += ep_derive(r.primitive);
  return out;
}

MultiPointReduction reduce_multipoint(const MultiPointElement& m) {
  MultiPointReduction out;
  for (const auto& [s, component] : m.components) {
    ReductionResult r = reduce_mod_derivative(component);
    out.c += r.c;
    for (const auto& [n, l] : r.lambdas) out.lambdas[{s, n}] = l;
    if (!r.primitive.is_zero()) out.primitive.components[s] = std::move(r.primitive);
  }
  return out;
}

namespace {

Complex representative(const PunctureSet& punctures, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= punctures.representatives().size()) {
    throw Error(ErrorCode::invalid_argument, "component index " + std::to_string(index) + " is not a configured puncture");
  }
  return punctures.representatives()[static_cast<std::size_t>(index)];
}

}  // namespace

Complex evaluate(const MultiPointElement& m, const PunctureSet& punctures, Complex z) {
  Complex total = 0.0;
  for (const auto& [s, component] : m.components) {
    total += evaluate(component, punctures.context(), z - representative(punctures, s));
  }
  return total;
}

Complex evaluate(const MultiPointReduction& r, const KroneckerTable& table, const PunctureSet& punctures, Complex z) {
  const LatticeContext& ctx = table.context();
  Complex total = r.c.evaluate(curve_constants(ctx));
  for (const auto& [key, l] : r.lambdas) {
    total += l.evaluate(curve_constants(ctx)) * table.g(key.second, z - representative(punctures, key.first));
  }
  for (const auto& [s, h] : r.primitive.components) {
    total += evaluate(ep_derive(h), ctx, z - representative(punctures, s));
  }
  return total;
}

}  // namespace elliptikit
