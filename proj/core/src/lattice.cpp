#include "elliptikit/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace elliptikit {

namespace {

constexpr double pi = std::numbers::pi;
const Complex two_pi_i(0.0, 2.0 * pi);

// Row-0 switch: below this |Im w| the cotangent closed form is used, above it the q-series.
constexpr double cot_switch = 0.35;

const std::vector<double>& zeta_table() {
  static const std::vector<double> table = [] {
    std::vector<double> t(256, 0.0);
    for (std::size_t s = 2; s < t.size(); ++s) t[s] = std::riemann_zeta(static_cast<double>(s));
    return t;
  }();
  return table;
}

double zeta(int s) {
  const auto& t = zeta_table();
  if (s < static_cast<int>(t.size())) return t[static_cast<std::size_t>(s)];
  return 1.0;
}

constexpr int max_cot_order = 96;

// Q_j with d^j/dw^j pi cot(pi w) = pi^(j+1) Q_j(cot(pi w)); Q_0 = u, Q_(j+1) = -(1+u^2) Q_j'.
const std::vector<std::vector<double>>& cot_polynomials() {
  static const std::vector<std::vector<double>> polys = [] {
    std::vector<std::vector<double>> p{{0.0, 1.0}};
    while (static_cast<int>(p.size()) <= max_cot_order) {
      const auto& last = p.back();
      std::vector<double> d(last.size() - 1, 0.0);
      for (std::size_t k = 1; k < last.size(); ++k) d[k - 1] = static_cast<double>(k) * last[k];
      std::vector<double> next(d.size() + 2, 0.0);
      for (std::size_t k = 0; k < d.size(); ++k) {
        next[k] -= d[k];
        next[k + 2] -= d[k];
      }
      p.push_back(std::move(next));
    }
    return p;
  }();
  return polys;
}

double inverse_factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f /= static_cast<double>(i);
  return f;
}

// (-1)^j/j! d^j/dw^j pi cot(pi w) for j = 0..jmax, i.e. sum_m (w + m)^-(j+1) in Eisenstein order.
std::vector<Complex> cotangent_row(int jmax, Complex w) {
  std::vector<Complex> out(static_cast<std::size_t>(jmax + 1));
  if (std::abs(w.imag()) < cot_switch) {
    const auto& polys = cot_polynomials();
    Complex u = std::cos(pi * w) / std::sin(pi * w);
    double pi_power = pi;
    for (int j = 0; j <= jmax; ++j) {
      const auto& p = polys[static_cast<std::size_t>(j)];
      Complex acc = 0.0;
      for (std::size_t k = p.size(); k-- > 0;) acc = acc * u + p[k];
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      out[static_cast<std::size_t>(j)] = sign * inverse_factorial(j) * pi_power * acc;
      pi_power *= pi;
    }
    return out;
  }
  // pi cot(pi w) = -pi i - 2 pi i sum_k x^k (Im w > 0), and its mirror for Im w < 0.
  bool upper = w.imag() > 0.0;
  Complex x = std::exp((upper ? 1.0 : -1.0) * two_pi_i * w);
  std::vector<Complex> sums(static_cast<std::size_t>(jmax + 1), 0.0);
  Complex xk = 1.0;
  for (int k = 1; k < 100000; ++k) {
    xk *= x;
    double kp = 1.0;
    bool small = true;
    for (int j = 0; j <= jmax; ++j) {
      Complex term = kp * xk;
      sums[static_cast<std::size_t>(j)] += term;
      if (std::abs(term) > 1e-18 * std::abs(sums[static_cast<std::size_t>(j)]) + 1e-300) small = false;
      kp *= k;
    }
    if (small && k > jmax) break;
  }
  Complex base = upper ? two_pi_i : -two_pi_i;
  Complex power = 1.0;
  for (int j = 0; j <= jmax; ++j) {
    Complex dj = -base * power * sums[static_cast<std::size_t>(j)];
    if (j == 0) dj += upper ? Complex(0.0, -pi) : Complex(0.0, pi);
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out[static_cast<std::size_t>(j)] = sign * inverse_factorial(j) * dj;
    power *= base;
  }
  return out;
}

}  // namespace

LatticeContext::LatticeContext(Complex tau, LatticeOptions options)
    : tau_(tau), options_(options) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag())) {
    throw Error(ErrorCode::invalid_argument, "tau must have positive imaginary part");
  }
  if (options_.r_max < 6) options_.r_max = 6;
  if (options_.tolerance <= 0.0) throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  if (options_.oracle_truncation.first < 1 || options_.oracle_truncation.second < 1) {
    throw Error(ErrorCode::invalid_argument, "oracle truncation must be positive");
  }
  q_ = std::exp(two_pi_i * tau_);
  if (options_.series_truncation > 0) {
    series_truncation_ = options_.series_truncation;
  } else {
    series_truncation_ = static_cast<int>(std::ceil(16.0 * std::log(10.0) / (2.0 * pi * tau_.imag())));
  }
  eps_sing_ = options_.eps_sing > 0.0 ? options_.eps_sing : 1e-6 * std::min(1.0, std::abs(tau_));
  e_ = compute_series(options_.r_max);
}

LatticePoint LatticeContext::reduce(Complex z) const {
  double y = z.imag() / tau_.imag();
  double x = z.real() - y * tau_.real();
  long n = static_cast<long>(std::floor(y));
  long m = static_cast<long>(std::floor(x));
  Complex reduced = z - static_cast<double>(m) - static_cast<double>(n) * tau_;
  // Guard against rounding pushing the representative onto the closed upper edge.
  double ry = reduced.imag() / tau_.imag();
  if (ry >= 1.0) {
    ++n;
    reduced -= tau_;
  } else if (ry < 0.0) {
    --n;
    reduced += tau_;
  }
  double rx = reduced.real() - (reduced.imag() / tau_.imag()) * tau_.real();
  if (rx >= 1.0) {
    ++m;
    reduced -= 1.0;
  } else if (rx < 0.0) {
    --m;
    reduced += 1.0;
  }
  return {z, reduced, m, n};
}

LatticePoint LatticeContext::center(Complex z) const {
  double y = z.imag() / tau_.imag();
  long n = std::lround(y);
  Complex w = z - static_cast<double>(n) * tau_;
  double x = w.real() - (w.imag() / tau_.imag()) * tau_.real();
  long m = std::lround(x);
  return {z, w - static_cast<double>(m), m, n};
}

Complex LatticeContext::nearest_lattice_point(Complex z) const {
  LatticePoint c = center(z);
  Complex best = static_cast<double>(c.m) + static_cast<double>(c.n) * tau_;
  double best_d = std::abs(z - best);
  for (long dn = -1; dn <= 1; ++dn) {
    for (long dm = -1; dm <= 1; ++dm) {
      Complex p = static_cast<double>(c.m + dm) + static_cast<double>(c.n + dn) * tau_;
      double d = std::abs(z - p);
      if (d < best_d) {
        best_d = d;
        best = p;
      }
    }
  }
  return best;
}

double LatticeContext::distance_to_lattice(Complex z) const { return std::abs(z - nearest_lattice_point(z)); }

void LatticeContext::check_regular(Complex z, Complex, long, long) const {
  Complex nearest = nearest_lattice_point(z);
  if (std::abs(z - nearest) < eps_sing_) throw SingularityError(z, nearest, "Eisenstein function");
}

std::vector<Complex> LatticeContext::off_axis_rows(int jmax, Complex w) const {
  // sum_(n>=1) over both rows, written as Lambert series in q with x = e^(2 pi i w).
  Complex x = std::exp(two_pi_i * w);
  Complex ratio_plus = x * q_;
  Complex ratio_minus = q_ / x;
  Complex a = 1.0;
  Complex b = 1.0;
  Complex qk = 1.0;
  std::vector<Complex> splus(static_cast<std::size_t>(jmax + 1), 0.0);
  std::vector<Complex> sminus(static_cast<std::size_t>(jmax + 1), 0.0);
  int cap = 2 * series_truncation_ + 4 * jmax + 64;
  for (int k = 1; k <= cap; ++k) {
    a *= ratio_plus;
    b *= ratio_minus;
    qk *= q_;
    Complex denom = 1.0 - qk;
    Complex ta = a / denom;
    Complex tb = b / denom;
    double kp = 1.0;
    bool small = true;
    for (int j = 0; j <= jmax; ++j) {
      auto idx = static_cast<std::size_t>(j);
      splus[idx] += kp * ta;
      sminus[idx] += kp * tb;
      double t = kp * (std::abs(ta) + std::abs(tb));
      if (t > 1e-18 * (std::abs(splus[idx]) + std::abs(sminus[idx])) + 1e-300) small = false;
      kp *= k;
    }
    if (small && k > jmax) break;
  }
  std::vector<Complex> out(static_cast<std::size_t>(jmax + 1));
  Complex pp = 1.0;  // (2 pi i)^j
  Complex pm = 1.0;  // (-2 pi i)^j
  for (int j = 0; j <= jmax; ++j) {
    auto idx = static_cast<std::size_t>(j);
    Complex aj = -two_pi_i * pp * splus[idx] + two_pi_i * pm * sminus[idx];
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    out[idx] = sign * inverse_factorial(j) * aj;
    pp *= two_pi_i;
    pm *= -two_pi_i;
  }
  return out;
}

std::vector<Complex> LatticeContext::compute_series(int r) const {
  std::vector<Complex> e(static_cast<std::size_t>(r + 1), 0.0);
  std::vector<Complex> rows = off_axis_rows(r - 1, 0.0);
  for (int k = 2; k <= r; k += 2) {
    e[static_cast<std::size_t>(k)] = 2.0 * zeta(k) + rows[static_cast<std::size_t>(k - 1)];
  }
  return e;
}

Complex LatticeContext::eisenstein_series(int r) const {
  if (r < 1) throw Error(ErrorCode::invalid_argument, "Eisenstein series index must be >= 1");
  if (r % 2 != 0) return 0.0;
  if (r < static_cast<int>(e_.size())) return e_[static_cast<std::size_t>(r)];
  return compute_series(r)[static_cast<std::size_t>(r)];
}

std::vector<Complex> LatticeContext::eisenstein_functions(int r_max, Complex z) const {
  if (r_max < 0 || r_max > max_cot_order) {
    throw Error(ErrorCode::invalid_argument, "Eisenstein index out of supported range");
  }
  std::vector<Complex> out(static_cast<std::size_t>(r_max + 1), 0.0);
  out[0] = 1.0;
  if (r_max == 0) return out;
  LatticePoint c = center(z);
  check_regular(z, c.reduced, c.m, c.n);
  std::vector<Complex> row0 = cotangent_row(r_max - 1, c.reduced);
  std::vector<Complex> rows = off_axis_rows(r_max - 1, c.reduced);
  for (int r = 1; r <= r_max; ++r) {
    auto idx = static_cast<std::size_t>(r - 1);
    out[static_cast<std::size_t>(r)] = row0[idx] + rows[idx];
  }
  out[1] -= two_pi_i * static_cast<double>(c.n);
  return out;
}

Complex LatticeContext::eisenstein_function(int r, Complex z) const {
  if (r < 1) throw Error(ErrorCode::invalid_argument, "Eisenstein function index must be >= 1");
  return eisenstein_functions(r, z)[static_cast<std::size_t>(r)];
}

std::vector<Complex> LatticeContext::eisenstein_regular_parts(int r_max, Complex w) const {
  if (std::abs(w) >= 0.25) throw Error(ErrorCode::invalid_argument, "regular parts need |w| < 1/4");
  std::vector<Complex> out(static_cast<std::size_t>(r_max + 1), 0.0);
  if (r_max == 0) return out;
  std::vector<Complex> rows = off_axis_rows(r_max - 1, w);
  for (int r = 1; r <= r_max; ++r) {
    // sum_(m != 0) (w + m)^-r = sum_k (-1)^k C(r+k-1, k) (1 + (-1)^(r+k)) zeta(r+k) w^k.
    Complex acc = 0.0;
    Complex wk = 1.0;
    double binom = 1.0;
    for (int k = 0; k < 400; ++k) {
      if ((r + k) % 2 == 0) {
        Complex term = (k % 2 == 0 ? 2.0 : -2.0) * binom * zeta(r + k) * wk;
        acc += term;
        if (k > r && std::abs(term) < 1e-18 * std::abs(acc)) break;
      }
      wk *= w;
      binom *= static_cast<double>(r + k) / static_cast<double>(k + 1);
    }
    out[static_cast<std::size_t>(r)] = acc + rows[static_cast<std::size_t>(r - 1)];
  }
  return out;
}

Complex LatticeContext::weierstrass_p(Complex z) const {
  return eisenstein_function(2, z) - eisenstein_series(2);
}

Complex LatticeContext::weierstrass_p_prime(Complex z) const { return -2.0 * eisenstein_function(3, z); }

}  // namespace elliptikit
