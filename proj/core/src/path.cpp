#include "elliptikit/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace elliptikit {

namespace {

double point_segment_distance(Complex p, Complex a, Complex b) {
  Complex d = b - a;
  double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p - a) * std::conj(d)).real() / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * d));
}

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

}  // namespace

PunctureSet::PunctureSet(const LatticeContext& ctx, std::vector<Complex> representatives) : ctx_(&ctx) {
  reps_.push_back(0.0);
  for (Complex a : representatives) {
    if (index_of(a) < 0) reps_.push_back(a);
  }
}

int PunctureSet::index_of(Complex a, double tol) const {
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    if (ctx_->distance_to_lattice(a - reps_[k]) <= tol) return static_cast<int>(k);
  }
  return -1;
}

Complex PunctureSet::nearest(Complex z) const {
  Complex best = 0.0;
  double best_d = std::numeric_limits<double>::infinity();
  for (Complex s : reps_) {
    Complex p = s + ctx_->nearest_lattice_point(z - s);
    double d = std::abs(z - p);
    if (d < best_d) {
      best_d = d;
      best = p;
    }
  }
  return best;
}

double PunctureSet::distance(Complex z) const { return std::abs(z - nearest(z)); }

double PunctureSet::segment_distance(Complex a, Complex b, Complex skip, double skip_radius) const {
  const Complex tau = ctx_->tau();
  auto coords = [&](Complex z) {
    double y = z.imag() / tau.imag();
    return std::pair<double, double>{z.real() - y * tau.real(), y};
  };
  double best = std::numeric_limits<double>::infinity();
  for (Complex s : reps_) {
    auto [xa, ya] = coords(a - s);
    auto [xb, yb] = coords(b - s);
    long n_lo = static_cast<long>(std::floor(std::min(ya, yb))) - 1;
    long n_hi = static_cast<long>(std::ceil(std::max(ya, yb))) + 1;
    long m_lo = static_cast<long>(std::floor(std::min(xa, xb))) - 2;
    long m_hi = static_cast<long>(std::ceil(std::max(xa, xb))) + 2;
    for (long n = n_lo; n <= n_hi; ++n) {
      for (long m = m_lo; m <= m_hi; ++m) {
        Complex p = s + static_cast<double>(m) + static_cast<double>(n) * tau;
        if (skip_radius >= 0.0 && std::abs(p - skip) <= skip_radius) continue;
        best = std::min(best, point_segment_distance(p, a, b));
      }
    }
  }
  return best;
}

Path::Path(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::invalid_path, "path needs at least one vertex");
  for (Complex v : vertices_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::invalid_path, "path vertex is not finite");
    }
  }
}

double Path::length() const {
  double total = 0.0;
  for (std::size_t k = 1; k < vertices_.size(); ++k) total += std::abs(vertices_[k] - vertices_[k - 1]);
  return total;
}

Path Path::reversed() const { return Path(std::vector<Complex>(vertices_.rbegin(), vertices_.rend())); }

Path Path::then(const Path& other) const {
  if (std::abs(end() - other.start()) > 1e-14 * std::max(1.0, std::abs(end()))) {
    throw Error(ErrorCode::endpoint_mismatch,
                "path ends at " + describe(end()) + " but the next starts at " + describe(other.start()));
  }
  std::vector<Complex> v = vertices_;
  v.insert(v.end(), other.vertices_.begin() + 1, other.vertices_.end());
  return Path(std::move(v));
}

Path Path::with_start(Complex new_start) const {
  std::vector<Complex> v = vertices_;
  v.front() = new_start;
  return Path(std::move(v));
}

Path Path::with_end_extended(Complex z) const {
  std::vector<Complex> v = vertices_;
  v.push_back(z);
  return Path(std::move(v));
}

void Path::validate(const PunctureSet& punctures, double eps_path, StartMode mode) const {
  Complex anchor = punctures.nearest(start());
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    Complex a = vertices_[k - 1];
    Complex b = vertices_[k];
    if (a == b) continue;
    bool first = k == 1;
    double d = (first && mode == StartMode::at_puncture)
                   ? punctures.segment_distance(a, b, anchor, 1e-12)
                   : punctures.segment_distance(a, b);
    if (d < eps_path) {
      throw Error(ErrorCode::invalid_path, "segment " + std::to_string(k - 1) + " from " + describe(a) + " to " +
                                               describe(b) + " passes within " + std::to_string(d) +
                                               " of a puncture");
    }
  }
  if (mode == StartMode::regular && vertices_.size() == 1 && punctures.distance(start()) < eps_path) {
    throw Error(ErrorCode::invalid_path, "path vertex " + describe(start()) + " is at a puncture");
  }
}

}  // namespace elliptikit
