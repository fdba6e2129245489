#include <cmath>

#include "elliptikit/lattice.hpp"

namespace elliptikit {

namespace {

// Neumaier-compensated complex accumulator.
class Accumulator {
 public:
  void add(Complex v) {
    add_part(sum_re_, c_re_, v.real());
    add_part(sum_im_, c_im_, v.imag());
  }
  Complex value() const { return {sum_re_ + c_re_, sum_im_ + c_im_}; }

 private:
  static void add_part(double& sum, double& c, double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      c += (sum - t) + v;
    } else {
      c += (v - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0.0, c_re_ = 0.0, sum_im_ = 0.0, c_im_ = 0.0;
};

Complex ipow(Complex base, int k) {
  Complex result = 1.0;
  Complex b = base;
  bool invert = k < 0;
  unsigned e = static_cast<unsigned>(invert ? -k : k);
  while (e) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return invert ? 1.0 / result : result;
}

// sum_(|m| > M) (w + m)^-r by midpoint Euler-Maclaurin from A = M + 1/2.
Complex inner_tail(Complex w, int r, int M) {
  double A = M + 0.5;
  double sign = (r % 2 == 0) ? 1.0 : -1.0;
  Complex integral;
  if (r == 1) {
    integral = -(std::log(A + w) - std::log(A - w));
  } else {
    integral = (ipow(A + w, 1 - r) + sign * ipow(A - w, 1 - r)) / static_cast<double>(r - 1);
  }
  Complex d1 = -static_cast<double>(r) * (ipow(A + w, -r - 1) + sign * ipow(A - w, -r - 1));
  double c3 = static_cast<double>(r) * (r + 1) * (r + 2);
  Complex d3 = -c3 * (ipow(A + w, -r - 3) + sign * ipow(A - w, -r - 3));
  return integral + d1 / 24.0 - 7.0 * d3 / 5760.0;
}

Complex double_sum(Complex tau, int r, Complex z, int N, int M, bool skip_origin) {
  if (N < 1 || M < 1) throw Error(ErrorCode::invalid_argument, "oracle truncation must be positive");
  if (r < 1) throw Error(ErrorCode::invalid_argument, "oracle index must be >= 1");
  Accumulator total;
  for (int n = -N; n <= N; ++n) {
    Complex w = z + static_cast<double>(n) * tau;
    Accumulator row;
    for (int m = -M; m <= M; ++m) {
      if (skip_origin && n == 0 && m == 0) continue;
      Complex lam = w + static_cast<double>(m);
      if (!skip_origin && std::abs(lam) < 1e-12) {
        throw SingularityError(z, z - lam, "oracle Eisenstein sum");
      }
      row.add(ipow(lam, -r));
    }
    row.add(inner_tail(w, r, M));
    total.add(row.value());
  }
  return total.value();
}

}  // namespace

Complex oracle_eisenstein_function(Complex tau, int r, Complex z, int N, int M) {
  return double_sum(tau, r, z, N, M, false);
}

Complex oracle_eisenstein_series(Complex tau, int r, int N, int M) {
  if (r % 2 != 0) return 0.0;
  return double_sum(tau, r, 0.0, N, M, true);
}

}  // namespace elliptikit
